#include "bk/datum.hpp"

#include <stdexcept>

namespace bk {

int LeviChain::level_of(int root) const {
    for (size_t i = 0; i < levels.size(); ++i)
        if (levels[i].contains(root)) return (int)i;
    return -1;
}

void LeviChain::validate() const {
    if (!sys) throw std::invalid_argument("chain has no root system");
    if (levels.empty()) throw std::invalid_argument("chain needs at least one level");
    for (size_t i = 0; i < levels.size(); ++i) {
        if (!levels[i].closed())
            throw std::invalid_argument("level " + std::to_string(i) +
                                        " is not a closed subsystem");
        if (i > 0) {
            for (int m : levels[i - 1].members)
                if (!levels[i].contains(m))
                    throw std::invalid_argument("levels not nested at index " +
                                                std::to_string(i));
            if (levels[i].members.size() == levels[i - 1].members.size())
                throw std::invalid_argument("level inclusion not strict at index " +
                                            std::to_string(i));
        }
    }
    if (levels.back().members.size() != sys->roots.size())
        throw std::invalid_argument("outermost level must be the full system");
    if (!split_center.empty() && split_center.size() != levels.size())
        throw std::invalid_argument("split_center length mismatch");
}

void DepthSequence::validate(int d) const {
    if ((int)r.size() != d + 1)
        throw std::invalid_argument("depth sequence needs d+1 entries");
    if (r[0].sign() < 0) throw std::invalid_argument("r_0 must be nonnegative");
    for (int i = 0; i + 1 < d; ++i)
        if (!(r[i] < r[i + 1]))
            throw std::invalid_argument("depth order violated: need r_" + std::to_string(i) +
                                        " < r_" + std::to_string(i + 1));
    if (d >= 1 && !(r[d - 1] <= r[d]))
        throw std::invalid_argument("depth order violated: need r_" + std::to_string(d - 1) +
                                    " <= r_" + std::to_string(d));
}

void DatumSkeleton::validate() const {
    chain.validate();
    depths.validate(d());
    if (p < 2) throw std::invalid_argument("residue characteristic must be at least 2");
    // x must be a vertex of the innermost level's affine structure: the walls of
    // that level through x cut its span down to a point
    const RootSubsystem& inner = chain.levels.front();
    std::vector<int> integral;
    for (int m : inner.members)
        if (root_eval(*chain.sys, m, x).is_integer()) integral.push_back(m);
    RootSubsystem at_x{chain.sys, integral};
    if (at_x.span_rank() != inner.span_rank())
        throw std::invalid_argument("base point is not a vertex for the innermost level");
}

namespace {

FiltrationProfile skeleton_profile(const DatumSkeleton& sk, bool plus_flags, bool torus_plus) {
    const RootSystem& sys = *sk.chain.sys;
    FiltrationProfile f;
    f.sys = &sys;
    f.base = sk.x;
    f.torus_depth = torus_plus ? Depth::just_after(Rat(0)) : Depth::at(Rat(0));
    f.root_depths.assign(sys.roots.size(), Depth::at(Rat(0)));
    for (size_t a = 0; a < sys.roots.size(); ++a) {
        int lv = sk.chain.level_of((int)a);
        Rat depth = lv == 0 ? Rat(0) : sk.depths.s(lv - 1);
        bool plus = plus_flags || (torus_plus && lv == 0);
        f.root_depths[a] = plus ? Depth::just_after(depth) : Depth::at(depth);
    }
    bool split0 = !sk.chain.split_center.empty() && sk.chain.split_center[0];
    f.center_level = split0 ? -1 : 0;
    return f;
}

} // namespace

FiltrationProfile j_profile(const DatumSkeleton& sk) {
    return skeleton_profile(sk, false, false);
}

FiltrationProfile h_profile(const DatumSkeleton& sk) {
    // depth 0 on the innermost level, s_{i-1}+ further out
    FiltrationProfile f = skeleton_profile(sk, true, false);
    for (size_t a = 0; a < f.root_depths.size(); ++a)
        if (sk.chain.level_of((int)a) == 0) f.root_depths[a] = Depth::at(Rat(0));
    return f;
}

FiltrationProfile h_plus_profile(const DatumSkeleton& sk) {
    return skeleton_profile(sk, true, true);
}

FiltrationProfile j_profile_at_level(const DatumSkeleton& sk, int i) {
    if (i < 0 || i > sk.d()) throw std::out_of_range("level out of range");
    FiltrationProfile f = j_profile(sk);
    for (size_t a = 0; a < f.root_depths.size(); ++a)
        if (sk.chain.level_of((int)a) > i) f.root_depths[a] = Depth::infinite();
    return f;
}

FiltrationProfile filtered_profile(ProfileBase base, const Depth& t, const DatumSkeleton& sk) {
    FiltrationProfile f = base == ProfileBase::J ? j_profile(sk) : h_plus_profile(sk);
    if (base == ProfileBase::H) {
        // H itself carries plain depth 0 at the innermost level; the plus flags
        // there come only from the filtration bound t
        FiltrationProfile h = h_profile(sk);
        f.torus_depth = h.torus_depth;
        f.root_depths = h.root_depths;
    }
    f.torus_depth = depth_max(f.torus_depth, t);
    for (auto& dep : f.root_depths) dep = depth_max(dep, t);
    return f;
}

ScriptJPair script_j_profiles(int i, const DatumSkeleton& sk) {
    if (i < 0 || i >= sk.d()) throw std::out_of_range("level out of range");
    const RootSystem& sys = *sk.chain.sys;
    ScriptJPair out;
    for (int variant = 0; variant < 2; ++variant) {
        FiltrationProfile f;
        f.sys = &sys;
        f.base = sk.x;
        f.torus_depth = Depth::at(sk.depths.r[i]);
        f.root_depths.assign(sys.roots.size(), Depth::infinite());
        for (size_t a = 0; a < sys.roots.size(); ++a) {
            int lv = sk.chain.level_of((int)a);
            if (lv <= i) f.root_depths[a] = Depth::at(sk.depths.r[i]);
            else if (lv == i + 1)
                f.root_depths[a] = variant ? Depth::just_after(sk.depths.s(i))
                                           : Depth::at(sk.depths.s(i));
        }
        f.center_level = i;
        if (variant == 0) out.plain = f; else out.plus = f;
    }
    return out;
}

std::vector<GenericityWall> genericity_walls(int i, const RootSubsystem& l,
                                             const DatumSkeleton& sk, const Box& box) {
    if (i < 1 || i > sk.d()) throw std::out_of_range("level out of range");
    const RootSystem& sys = *sk.chain.sys;
    const RootSubsystem& phi_i = sk.chain.levels[i];
    for (int m : l.members)
        if (!phi_i.contains(m)) throw std::invalid_argument("subsystem not inside the level");
    Rat s = sk.depths.s(i - 1);
    std::vector<GenericityWall> out;
    const size_t dim = box.lo.size();
    for (int m : phi_i.members) {
        if (l.contains(m)) continue;
        // offsets n with { <a,p> + n = s } meeting the box
        Rat lo, hi;
        bool first = true;
        for (size_t mask = 0; mask < (size_t(1) << dim); ++mask) {
            Vec corner(dim);
            for (size_t c = 0; c < dim; ++c)
                corner[c] = (mask >> c) & 1 ? box.hi[c] : box.lo[c];
            Rat v = root_eval(sys, m, corner);
            if (first) { lo = hi = v; first = false; }
            else {
                if (v < lo) lo = v;
                if (hi < v) hi = v;
            }
        }
        for (long long n = (s - hi).ceil(); n <= (s - lo).floor(); ++n)
            out.push_back(GenericityWall{m, n, s});
    }
    return out;
}

} // namespace bk
