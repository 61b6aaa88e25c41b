#include "bk/apartment.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

long long Depth::eff_int() const {
    if (inf) throw std::logic_error("no integer jump past infinity");
    return plus ? value.floor() + 1 : value.ceil();
}

std::string Depth::str() const {
    if (inf) return "inf";
    return value.str() + (plus ? "+" : "");
}

Depth depth_max(const Depth& a, const Depth& b) { return a < b ? b : a; }
Depth depth_min(const Depth& a, const Depth& b) { return a < b ? a : b; }

Rat root_eval(const RootSystem& sys, int root, const Vec& p) {
    const Vec& a = sys.roots[root];
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].sign() == 0) continue;
        for (size_t j = 0; j < a.size() && j < p.size(); ++j)
            if (p[j].sign() != 0) s += a[i] * sys.gram[i][j] * p[j];
    }
    return s;
}

Rat affine_eval(const RootSystem& sys, const AffineRoot& psi, const Vec& p) {
    return root_eval(sys, psi.root, p) + Rat(psi.offset);
}

long long min_offset(const RootSystem& sys, int root, const Vec& x, const Depth& d) {
    if (d.inf) throw std::logic_error("no finite offset reaches infinity");
    Rat bound = d.value - root_eval(sys, root, x);
    return d.plus ? bound.floor() + 1 : bound.ceil();
}

bool FiltrationProfile::concave() const {
    const int n = (int)sys->roots.size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            int s = sys->index_of(add(sys->roots[a], sys->roots[b]));
            if (s >= 0) {
                if (!(root_depths[s] <= root_depths[a] + root_depths[b])) return false;
            } else if (is_zero(add(sys->roots[a], sys->roots[b]))) {
                if (!(torus_depth <= root_depths[a] + root_depths[b])) return false;
            }
        }
    }
    // root against torus: depth(a) <= depth(a) + depth(torus) always holds when
    // torus depth is nonnegative, which validation guarantees elsewhere
    return true;
}

bool FiltrationProfile::contains(const FiltrationProfile& finer) const {
    if (!(torus_depth <= finer.torus_depth)) return false;
    for (size_t i = 0; i < root_depths.size(); ++i)
        if (!(root_depths[i] <= finer.root_depths[i])) return false;
    return true;
}

FiltrationProfile mp_profile(const RootSystem& sys, const Vec& x, const Depth& r) {
    FiltrationProfile f;
    f.sys = &sys;
    f.base = x;
    f.torus_depth = r;
    f.root_depths.assign(sys.roots.size(), r);
    f.center_level = -1;
    return f;
}

FiltrationProfile profile_pointwise_max(const FiltrationProfile& a, const FiltrationProfile& b) {
    if (a.sys != b.sys || !(a.base == b.base))
        throw std::invalid_argument("profiles live at different points");
    FiltrationProfile f = a;
    f.torus_depth = depth_max(a.torus_depth, b.torus_depth);
    for (size_t i = 0; i < f.root_depths.size(); ++i)
        f.root_depths[i] = depth_max(a.root_depths[i], b.root_depths[i]);
    f.center_level = std::max(a.center_level, b.center_level);
    return f;
}

FiltrationProfile profile_pointwise_min(const FiltrationProfile& a, const FiltrationProfile& b) {
    if (a.sys != b.sys || !(a.base == b.base))
        throw std::invalid_argument("profiles live at different points");
    FiltrationProfile f = a;
    f.torus_depth = depth_min(a.torus_depth, b.torus_depth);
    for (size_t i = 0; i < f.root_depths.size(); ++i)
        f.root_depths[i] = depth_min(a.root_depths[i], b.root_depths[i]);
    f.center_level = std::min(a.center_level, b.center_level);
    return f;
}

RootSubsystem quotient_root_system(const RootSystem& sys, const Vec& x) {
    std::vector<int> members;
    for (size_t i = 0; i < sys.roots.size(); ++i)
        if (root_eval(sys, (int)i, x).is_integer()) members.push_back((int)i);
    return make_subsystem(sys, members);
}

namespace {

// affine roots whose wall meets the box: for each root, offsets n with
// min <a,p> <= -n <= max <a,p> over the box corners
std::vector<AffineRoot> relevant_walls(const RootSystem& sys, const Box& box) {
    std::vector<AffineRoot> out;
    const size_t dim = box.lo.size();
    for (size_t r = 0; r < sys.roots.size(); ++r) {
        // extremize the linear functional over the box, corner by corner
        Rat lo, hi;
        bool first = true;
        for (size_t mask = 0; mask < (size_t(1) << dim); ++mask) {
            Vec corner(dim);
            for (size_t c = 0; c < dim; ++c)
                corner[c] = (mask >> c) & 1 ? box.hi[c] : box.lo[c];
            Rat v = root_eval(sys, (int)r, corner);
            if (first) { lo = hi = v; first = false; }
            else {
                if (v < lo) lo = v;
                if (hi < v) hi = v;
            }
        }
        for (long long n = (-hi).ceil(); n <= (-lo).floor(); ++n)
            out.push_back(AffineRoot{(int)r, n});
    }
    return out;
}

} // namespace

bool Facet::operator==(const Facet& o) const {
    if (signs.size() != o.signs.size()) return false;
    for (size_t i = 0; i < signs.size(); ++i) {
        if (signs[i].first.root != o.signs[i].first.root) return false;
        if (signs[i].first.offset != o.signs[i].first.offset) return false;
        if (signs[i].second != o.signs[i].second) return false;
    }
    return true;
}

Facet facet_of(const RootSystem& sys, const Vec& x, const Box& box) {
    Facet f;
    for (const AffineRoot& psi : relevant_walls(sys, box)) {
        int s = affine_eval(sys, psi, x).sign();
        f.signs.push_back({psi, s});
        if (s == 0) f.zero_set.push_back(psi);
    }
    return f;
}

bool facet_adjacent(const Facet& a, const Facet& b) {
    if (a.signs.size() != b.signs.size()) return false;
    bool a_in_closure_b = true, b_in_closure_a = true;
    for (size_t i = 0; i < a.signs.size(); ++i) {
        int sa = a.signs[i].second, sb = b.signs[i].second;
        if (sa != sb) {
            if (sa != 0) a_in_closure_b = false;
            if (sb != 0) b_in_closure_a = false;
        }
    }
    return a_in_closure_b || b_in_closure_a;
}

bool is_vertex(const RootSystem& sys, const Vec& x, const Box& box) {
    Facet f = facet_of(sys, x, box);
    // the zero walls must cut the root span down to a point
    std::vector<Vec> basis;
    for (const AffineRoot& psi : f.zero_set) {
        Vec v = sys.roots[psi.root];
        for (const Vec& b : basis) {
            size_t lead = 0;
            while (lead < b.size() && b[lead].sign() == 0) ++lead;
            if (lead < b.size() && v[lead].sign() != 0) v = sub(v, scale(v[lead] / b[lead], b));
        }
        if (!is_zero(v)) basis.push_back(v);
    }
    return (int)basis.size() == sys.rank;
}

ReducedCoords reduced_coords(const RootSystem& sys, const Vec& x) {
    ReducedCoords rc;
    for (size_t i = 0; i < x.size(); ++i) {
        if ((int)i < sys.rank) rc.reduced.push_back(x[i]);
        else rc.central.push_back(x[i]);
    }
    return rc;
}

} // namespace bk
