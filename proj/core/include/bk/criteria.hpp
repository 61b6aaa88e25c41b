#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bk/atlas.hpp"

namespace bk {

// image of a point's stabilizer in the finite quotient at the base point,
// recorded by the surviving quotient roots
struct Shadow {
    RootSubsystem quotient;         // level-0 roots integral at the base point
    std::vector<int> present;       // members whose base-point wall still holds at z
    bool torus_present = true;

    bool surjective() const { return present.size() == quotient.members.size(); }
};

Shadow shadow_at(const AtlasPoint& z, const DatumSkeleton& sk, const Atlas& atlas);

std::optional<Vec> thmA_applies(const AtlasPoint& z, const DatumSkeleton& sk,
                                const Atlas& atlas);

struct ProjCheck {
    bool applies = false;
    bool horizon = false; // inconclusive: target partly unreachable
};
ProjCheck projection_criterion(const AtlasPoint& z, const DatumSkeleton& sk,
                               const Atlas& atlas);

// the layer between the H_{t+} fixed set and the level torus fixed set;
// throws std::out_of_range unless 0 < t <= s_{d-1}
Region theta_region(const Rat& t, const DatumSkeleton& sk, const Atlas& atlas);
Region theta_union(const DatumSkeleton& sk, const Atlas& atlas);

// the finitely many filtration values where the theta layers can change
std::vector<Rat> theta_critical_values(const DatumSkeleton& sk);

std::optional<std::pair<Rat, AtlasPoint>> thmB_applies(const AtlasPoint& z,
                                                       const DatumSkeleton& sk,
                                                       const Atlas& atlas);

// half-line from the base point along an excluded direction
struct ComplementaryRay {
    Vec dir;
};
bool on_complementary_trace(const AtlasPoint& z, const Atlas& atlas,
                            const std::vector<ComplementaryRay>& rays);

enum class VerdictKind { TypeBearing, AtypicalThmA, AtypicalThmB, Undecided };
std::string verdict_kind_str(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::Undecided;
    std::optional<Vec> parabolic_witness;
    std::optional<std::pair<Rat, AtlasPoint>> theta_witness;
    std::vector<std::string> annotations;
};

Verdict classify(const AtlasPoint& z, const DatumSkeleton& sk, const Atlas& atlas,
                 const std::vector<ComplementaryRay>& rays);

} // namespace bk
