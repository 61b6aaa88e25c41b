#pragma once

#include <string>
#include <vector>

#include "bk/atlas.hpp"
#include "bk/oracle_tree.hpp"

namespace bk {

struct OracleMismatch {
    int chart = 0;
    Rat coord;
    std::string what;
};

// cross-checks the polyhedral fixed-set and projection formulas against the
// explicit tree computation on every tree vertex within the model radius.
// Requires a rank-1 system; folds must be along the negative root.
std::vector<OracleMismatch> oracle_compare_rank1(const DatumSkeleton& sk, const Atlas& atlas,
                                                 const TreeModel& model,
                                                 const std::vector<Rat>& torus_values);

} // namespace bk
