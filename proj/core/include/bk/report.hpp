#pragma once

#include <string>

#include "bk/config.hpp"

namespace bk {

// batch classification of every query point, as a versioned JSON document
// (all rationals rendered as "num/den" strings, deterministic ordering)
std::string run_classify(const ConfigFile& cfg);

} // namespace bk
