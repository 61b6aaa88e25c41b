#pragma once

#include <string>
#include <vector>

#include "bk/apartment.hpp"
#include "bk/root_data.hpp"

namespace bk {

// nested chain of closed subsystems, innermost first, outermost = full system
struct LeviChain {
    const RootSystem* sys = nullptr;
    std::vector<RootSubsystem> levels;
    // per level: true when the level's center is split (no transverse
    // boundedness constraint); default false = anisotropic center
    std::vector<bool> split_center;

    int depth_count() const { return (int)levels.size() - 1; } // d
    // smallest level containing the root, or -1
    int level_of(int root) const;
    void validate() const; // throws std::invalid_argument naming the constraint
};

struct DepthSequence {
    std::vector<Rat> r; // r_0 .. r_d

    Rat s(int i) const { return r[i] / Rat(2); }
    void validate(int d) const; // throws naming the violated constraint
};

struct DatumSkeleton {
    LeviChain chain;
    Vec x;
    DepthSequence depths;
    long long p = 5;

    int d() const { return chain.depth_count(); }
    void validate() const;
};

// the group J = J^d: torus depth 0, depth 0 on the innermost level,
// s_{i-1} on level i minus level i-1
FiltrationProfile j_profile(const DatumSkeleton& sk);
FiltrationProfile h_profile(const DatumSkeleton& sk);
FiltrationProfile h_plus_profile(const DatumSkeleton& sk);

// the partial product J^i (support only inside level i; infinite outside)
FiltrationProfile j_profile_at_level(const DatumSkeleton& sk, int i);

enum class ProfileBase { J, H };
FiltrationProfile filtered_profile(ProfileBase base, const Depth& t, const DatumSkeleton& sk);

struct ScriptJPair {
    FiltrationProfile plain; // depth s_i on the new layer
    FiltrationProfile plus;  // depth s_i+ on the new layer
};
ScriptJPair script_j_profiles(int i, const DatumSkeleton& sk);

struct GenericityWall {
    int root = -1;
    long long offset = 0;
    Rat level; // wall { <root,p> + offset = level }
};
std::vector<GenericityWall> genericity_walls(int i, const RootSubsystem& l,
                                             const DatumSkeleton& sk, const Box& box);

} // namespace bk
