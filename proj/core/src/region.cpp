#include "bk/region.hpp"

namespace bk {

bool ConvexPoly::contains(const Vec& p) const {
    for (const auto& h : faces)
        if (!h.holds(p)) return false;
    return true;
}

namespace {

// constraints as rows (c_0..c_{k-1}, offset, strict) meaning sum c_i x_i + off >= 0 (> if strict)
struct Row {
    Vec coef;
    Rat off;
    bool strict;
};

// Fourier-Motzkin feasibility with strictness tracking
bool feasible(std::vector<Row> rows, size_t dim) {
    for (size_t var = dim; var-- > 0;) {
        std::vector<Row> pos, neg, zero;
        for (auto& r : rows) {
            int s = r.coef[var].sign();
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
            else zero.push_back(r);
        }
        std::vector<Row> next = std::move(zero);
        for (const auto& a : pos) {
            for (const auto& b : neg) {
                // eliminate var: a gives x >= L, b gives x <= U; require L <= U
                Rat ca = a.coef[var], cb = b.coef[var];
                Row r;
                r.coef.assign(dim, Rat(0));
                for (size_t i = 0; i < dim; ++i)
                    r.coef[i] = a.coef[i] * (-cb) + b.coef[i] * ca;
                r.off = a.off * (-cb) + b.off * ca;
                r.strict = a.strict || b.strict;
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    for (const auto& r : rows) {
        int s = r.off.sign();
        if (r.strict ? s <= 0 : s < 0) return false;
    }
    return true;
}

} // namespace

bool ConvexPoly::empty(size_t dim) const {
    std::vector<Row> rows;
    for (const auto& h : faces) {
        Row r;
        r.coef = h.normal;
        r.coef.resize(dim, Rat(0));
        r.off = h.offset;
        r.strict = h.strict;
        rows.push_back(std::move(r));
    }
    return !feasible(std::move(rows), dim);
}

std::optional<Rat> ConvexPoly::segment_param(const Vec& p, const Vec& q) const {
    // parameterize p + t(q-p), t in [0,1]; each face restricts t to an interval
    Rat lo(0), hi(1);
    bool lo_strict = false, hi_strict = false;
    for (const auto& h : faces) {
        Rat at_p = dot(h.normal, p) + h.offset;
        Rat at_q = dot(h.normal, q) + h.offset;
        Rat slope = at_q - at_p; // value(t) = at_p + slope * t
        if (slope.sign() == 0) {
            if (h.strict ? at_p.sign() <= 0 : at_p.sign() < 0) return std::nullopt;
            continue;
        }
        Rat t0 = -at_p / slope;
        if (slope.sign() > 0) {
            // t >= t0 (strict if face strict)
            if (t0 > lo || (t0 == lo && h.strict && !lo_strict)) { lo = t0; lo_strict = h.strict; }
        } else {
            if (t0 < hi || (t0 == hi && h.strict && !hi_strict)) { hi = t0; hi_strict = h.strict; }
        }
    }
    if (lo < hi) return (lo + hi) / Rat(2);
    if (lo == hi && !lo_strict && !hi_strict) return lo;
    return std::nullopt;
}

std::vector<Vec> ConvexPoly::vertices(size_t dim) const {
    std::vector<Vec> out;
    std::vector<size_t> pick(dim);
    // all dim-subsets of faces whose walls intersect in a feasible point
    std::vector<size_t> idx;
    for (size_t i = 0; i < faces.size(); ++i) idx.push_back(i);
    if (dim == 0 || faces.size() < dim) return out;
    std::vector<size_t> comb(dim);
    // iterative combination enumeration
    for (size_t i = 0; i < dim; ++i) comb[i] = i;
    while (true) {
        Mat a(dim, Vec(dim));
        Vec b(dim);
        for (size_t r = 0; r < dim; ++r) {
            const HalfSpace& h = faces[comb[r]];
            for (size_t c = 0; c < dim; ++c) a[r][c] = c < h.normal.size() ? h.normal[c] : Rat(0);
            b[r] = -h.offset;
        }
        Vec sol = solve_linear(a, b);
        if (!sol.empty()) {
            // feasibility in the closed polyhedron
            bool ok = true;
            for (const auto& h : faces)
                if ((dot(h.normal, sol) + h.offset).sign() < 0) { ok = false; break; }
            if (ok) {
                bool dup = false;
                for (const auto& v : out)
                    if (v == sol) { dup = true; break; }
                if (!dup) out.push_back(sol);
            }
        }
        // next combination
        size_t k = dim;
        while (k > 0) {
            --k;
            if (comb[k] + (dim - k) < faces.size()) {
                ++comb[k];
                for (size_t j = k + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (k == 0) return out;
        }
    }
}

ConvexPoly poly_intersect(const ConvexPoly& a, const ConvexPoly& b) {
    ConvexPoly out = a;
    out.faces.insert(out.faces.end(), b.faces.begin(), b.faces.end());
    return out;
}

std::vector<ConvexPoly> poly_subtract(const ConvexPoly& a, const ConvexPoly& b) {
    // prefix decomposition: keep b's faces 0..i-1, negate face i
    std::vector<ConvexPoly> out;
    ConvexPoly prefix = a;
    for (const auto& h : b.faces) {
        ConvexPoly piece = prefix;
        piece.faces.push_back(h.complement());
        out.push_back(std::move(piece));
        prefix.faces.push_back(h);
    }
    return out;
}

ConvexPoly poly_point(const Vec& p) {
    ConvexPoly poly;
    for (size_t i = 0; i < p.size(); ++i) {
        Vec e(p.size(), Rat(0));
        e[i] = Rat(1);
        poly.faces.push_back(HalfSpace{e, -p[i], false});
        poly.faces.push_back(HalfSpace{scale(Rat(-1), e), p[i], false});
    }
    return poly;
}

ConvexPoly poly_box(const Vec& lo, const Vec& hi) {
    ConvexPoly poly;
    for (size_t i = 0; i < lo.size(); ++i) {
        Vec e(lo.size(), Rat(0));
        e[i] = Rat(1);
        poly.faces.push_back(HalfSpace{e, -lo[i], false});
        poly.faces.push_back(HalfSpace{scale(Rat(-1), e), hi[i], false});
    }
    return poly;
}

bool Region::contains(int chart, const Vec& p) const {
    auto it = charts.find(chart);
    if (it == charts.end()) return false;
    for (const auto& poly : it->second)
        if (poly.contains(p)) return true;
    return false;
}

bool Region::empty(size_t dim) const {
    for (const auto& [chart, polys] : charts)
        for (const auto& poly : polys)
            if (!poly.empty(dim)) return false;
    return true;
}

void Region::intersect_chart(int chart, const ConvexPoly& poly) {
    auto it = charts.find(chart);
    if (it == charts.end()) return;
    for (auto& p : it->second) p = poly_intersect(p, poly);
}

void Region::intersect_all(const ConvexPoly& poly) {
    for (auto& [chart, polys] : charts)
        for (auto& p : polys) p = poly_intersect(p, poly);
}

void Region::subtract_chart(int chart, const ConvexPoly& poly) {
    auto it = charts.find(chart);
    if (it == charts.end()) return;
    std::vector<ConvexPoly> next;
    for (const auto& p : it->second) {
        auto pieces = poly_subtract(p, poly);
        next.insert(next.end(), pieces.begin(), pieces.end());
    }
    it->second = std::move(next);
}

bool Region::meets_segment(int chart, const Vec& p, const Vec& q) const {
    auto it = charts.find(chart);
    if (it == charts.end()) return false;
    for (const auto& poly : it->second)
        if (poly.meets_segment(p, q)) return true;
    return false;
}

Region region_intersect(const Region& a, const Region& b, size_t dim) {
    Region out;
    for (const auto& [chart, polys] : a.charts) {
        auto it = b.charts.find(chart);
        if (it == b.charts.end()) continue;
        for (const auto& pa : polys) {
            for (const auto& pb : it->second) {
                ConvexPoly piece = poly_intersect(pa, pb);
                if (!piece.empty(dim)) out.add(chart, std::move(piece));
            }
        }
    }
    return out;
}

Region region_subtract(const Region& a, const Region& b) {
    Region out;
    for (const auto& [chart, polys] : a.charts) {
        std::vector<ConvexPoly> pieces = polys;
        auto it = b.charts.find(chart);
        if (it != b.charts.end()) {
            for (const auto& pb : it->second) {
                std::vector<ConvexPoly> next;
                for (const auto& pa : pieces) {
                    auto cut = poly_subtract(pa, pb);
                    next.insert(next.end(), cut.begin(), cut.end());
                }
                pieces = std::move(next);
            }
        }
        for (auto& p : pieces) out.add(chart, std::move(p));
    }
    return out;
}

bool region_subset(const Region& a, const Region& b, size_t dim) {
    return region_subtract(a, b).empty(dim);
}

} // namespace bk
