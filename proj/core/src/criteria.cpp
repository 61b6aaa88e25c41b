#include "bk/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

std::string verdict_kind_str(VerdictKind k) {
    switch (k) {
        case VerdictKind::TypeBearing: return "TypeBearing";
        case VerdictKind::AtypicalThmA: return "AtypicalThmA";
        case VerdictKind::AtypicalThmB: return "AtypicalThmB";
        case VerdictKind::Undecided: return "Undecided";
    }
    return "?";
}

Shadow shadow_at(const AtlasPoint& zin, const DatumSkeleton& sk, const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    AtlasPoint z = canonical_point(atlas, zin);
    RootSubsystem at_x = quotient_root_system(sys, atlas.x);
    std::vector<int> level0;
    for (int m : at_x.members)
        if (sk.chain.levels.front().contains(m)) level0.push_back(m);
    Shadow sh{make_subsystem(sys, level0), {}, true};
    for (int m : sh.quotient.members) {
        // the affine root through x for this direction, evaluated in z's chart
        Rat off = -root_eval(sys, m, atlas.x); // integral by construction
        if ((root_eval(sys, m, z.coords) + off).sign() >= 0) sh.present.push_back(m);
    }
    return sh;
}

std::optional<Vec> thmA_applies(const AtlasPoint& z, const DatumSkeleton& sk,
                                const Atlas& atlas) {
    Shadow sh = shadow_at(z, sk, atlas);
    if (sh.quotient.members.empty()) return std::nullopt;
    return exists_proper_parabolic_containing(sh.quotient, sh.present);
}

namespace {

bool in_base_fiber(const Atlas& atlas, const AtlasPoint& foot) {
    // the fiber over the base point: same chart-0 root-span coordinates,
    // arbitrary central coordinates
    AtlasPoint c = canonical_point(atlas, foot);
    if (c.chart != 0) return false;
    ReducedCoords rc_foot = reduced_coords(*atlas.sys, c.coords);
    ReducedCoords rc_x = reduced_coords(*atlas.sys, atlas.x);
    return rc_foot.reduced == rc_x.reduced;
}

} // namespace

ProjCheck projection_criterion(const AtlasPoint& zin, const DatumSkeleton& sk,
                               const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    AtlasPoint z = canonical_point(atlas, zin);
    Region trace = trace_subbuilding(0, sk, atlas);
    ProjCheck out;
    try {
        ProjectionResult pr = project_to_trace(atlas, z, trace);
        out.horizon = pr.horizon;
        if (!in_base_fiber(atlas, pr.foot)) {
            out.applies = true;
            return out;
        }
    } catch (const HorizonError&) {
        out.horizon = true;
        return out;
    }

    // refinement: project the fixed region of the subgroup common to the
    // parahoric at x and the parahoric at z (an under-approximation, hence
    // sound); if any of its projected vertices leaves the base fiber, the
    // criterion holds
    const size_t dim = atlas.box.lo.size();
    ConvexPoly gamma = poly_box(atlas.box.lo, atlas.box.hi);
    for (size_t a = 0; a < sys.roots.size(); ++a) {
        long long off = std::max(min_offset(sys, (int)a, atlas.x, Depth::at(Rat(0))),
                                 min_offset(sys, (int)a, z.coords, Depth::at(Rat(0))));
        Vec cov(dim, Rat(0));
        for (size_t j = 0; j < (size_t)sys.rank; ++j)
            for (size_t i = 0; i < (size_t)sys.rank; ++i)
                cov[j] += sys.roots[a][i] * sys.gram[i][j];
        gamma.faces.push_back(HalfSpace{cov, Rat(off), false});
    }
    Region trace_for_feet = trace_subbuilding(0, sk, atlas);
    for (const Vec& v : gamma.vertices(dim)) {
        try {
            ProjectionResult pr =
                project_to_trace(atlas, AtlasPoint{z.chart, v}, trace_for_feet);
            out.horizon = out.horizon || pr.horizon;
            if (!in_base_fiber(atlas, pr.foot)) {
                out.applies = true;
                return out;
            }
        } catch (const HorizonError&) {
            out.horizon = true;
        }
    }
    return out;
}

Region theta_region(const Rat& t, const DatumSkeleton& sk, const Atlas& atlas) {
    const int d = sk.d();
    Rat top = d > 0 ? sk.depths.s(d - 1) : Rat(0);
    if (t.sign() <= 0 || t > top) throw std::out_of_range("filtration value out of range");
    // largest level whose previous jump lies below t (s_{-1} = 0)
    int level = 0;
    for (int i = 1; i <= d; ++i)
        if (sk.depths.s(i - 1) < t) level = i;
    FiltrationProfile h_t_plus =
        filtered_profile(ProfileBase::H, Depth::just_after(t), sk);
    RegionResult fixed_h = fixed_region_profile(h_t_plus, &sk, atlas);
    Region fixed_z = fixed_region_torus(level, Depth::at(t), sk, atlas);
    return region_subtract(fixed_h.region, fixed_z);
}

std::vector<Rat> theta_critical_values(const DatumSkeleton& sk) {
    const int d = sk.d();
    if (d == 0) return {};
    Rat top = sk.depths.s(d - 1);
    std::vector<Rat> base{Rat(0), top};
    for (long long n = 1; Rat(n) <= top; ++n) base.push_back(Rat(n));
    for (int i = 0; i < d; ++i) {
        if (sk.depths.s(i) <= top) base.push_back(sk.depths.s(i));
        if (sk.depths.r[i] <= top && sk.depths.r[i].sign() > 0) base.push_back(sk.depths.r[i]);
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    std::vector<Rat> out;
    for (size_t i = 0; i < base.size(); ++i) {
        if (base[i].sign() > 0) out.push_back(base[i]);
        if (i + 1 < base.size()) out.push_back((base[i] + base[i + 1]) / Rat(2));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Region theta_union(const DatumSkeleton& sk, const Atlas& atlas) {
    Region out;
    for (const Rat& t : theta_critical_values(sk)) {
        Region r = theta_region(t, sk, atlas);
        for (auto& [chart, polys] : r.charts)
            for (auto& poly : polys) out.add(chart, std::move(poly));
    }
    return out;
}

std::optional<std::pair<Rat, AtlasPoint>> thmB_applies(const AtlasPoint& z,
                                                       const DatumSkeleton& sk,
                                                       const Atlas& atlas) {
    Segment seg = geodesic(atlas, AtlasPoint{0, atlas.x}, z);
    for (const Rat& t : theta_critical_values(sk)) {
        Region r = theta_region(t, sk, atlas);
        auto w = segment_meets(seg, r);
        if (w) return std::make_pair(t, canonical_point(atlas, *w));
    }
    return std::nullopt;
}

bool on_complementary_trace(const AtlasPoint& zin, const Atlas& atlas,
                            const std::vector<ComplementaryRay>& rays) {
    AtlasPoint z = canonical_point(atlas, zin);
    if (z.chart != 0) return false;
    Vec v = sub(z.coords, atlas.x);
    if (is_zero(v)) return true;
    for (const auto& ray : rays) {
        // v = s * dir for some s >= 0
        Rat s;
        bool set = false, ok = true;
        for (size_t i = 0; i < v.size(); ++i) {
            Rat di = i < ray.dir.size() ? ray.dir[i] : Rat(0);
            if (di.sign() == 0) {
                if (v[i].sign() != 0) { ok = false; break; }
            } else {
                Rat si = v[i] / di;
                if (!set) { s = si; set = true; }
                else if (s != si) { ok = false; break; }
            }
        }
        if (ok && set && s.sign() >= 0) return true;
    }
    return false;
}

Verdict classify(const AtlasPoint& zin, const DatumSkeleton& sk, const Atlas& atlas,
                 const std::vector<ComplementaryRay>& rays) {
    Verdict v;
    AtlasPoint z = canonical_point(atlas, zin);

    RegionResult j_fixed = fixed_region_profile(j_profile(sk), &sk, atlas);
    if (j_fixed.taint) v.annotations.push_back("tameness-assumed");
    if (j_fixed.region.contains(z.chart, z.coords)) {
        v.kind = VerdictKind::TypeBearing;
        return v;
    }

    bool on_comp = on_complementary_trace(z, atlas, rays);
    bool horizon = false;
    if (!on_comp) {
        auto lambda = thmA_applies(z, sk, atlas);
        if (lambda) {
            v.kind = VerdictKind::AtypicalThmA;
            v.parabolic_witness = *lambda;
            return v;
        }
        ProjCheck pc = projection_criterion(z, sk, atlas);
        horizon = pc.horizon;
        if (pc.applies) {
            v.kind = VerdictKind::AtypicalThmA;
            return v;
        }
    } else {
        v.annotations.push_back("complementary-levi-trace");
    }

    try {
        auto tb = thmB_applies(z, sk, atlas);
        if (tb) {
            v.kind = VerdictKind::AtypicalThmB;
            v.theta_witness = tb;
            return v;
        }
    } catch (const NoCommonChart&) {
        v.annotations.push_back("no-common-chart");
    }

    v.kind = VerdictKind::Undecided;
    if (horizon) v.annotations.push_back("projection-horizon");
    Shadow sh = shadow_at(z, sk, atlas);
    if (sh.surjective()) v.annotations.push_back("shadow-surjective");
    try {
        ProjectionResult pr = project_to_trace(atlas, z, trace_subbuilding(0, sk, atlas));
        if (in_base_fiber(atlas, pr.foot)) v.annotations.push_back("delta");
    } catch (const HorizonError&) {
        v.annotations.push_back("projection-horizon");
    }
    return v;
}

} // namespace bk
