#pragma once

#include <string>
#include <vector>

#include "bk/config.hpp"

namespace bk {

// deterministic SVG with one group per requested layer
// (walls, trace0, delta, complementary, theta=<rational>, verdicts, folds)
std::string render_svg(const ConfigFile& cfg, const std::vector<std::string>& layers);

// coarse character-grid fallback for terminals
std::string render_ascii(const ConfigFile& cfg);

} // namespace bk
