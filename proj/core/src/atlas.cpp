#include "bk/atlas.hpp"

#include <algorithm>
#include <functional>

namespace bk {

namespace {

// covector of <root, .> through the gram form, padded to full dimension
Vec root_covector(const RootSystem& sys, int root, size_t dim) {
    Vec c(dim, Rat(0));
    const Vec& a = sys.roots[root];
    for (size_t j = 0; j < (size_t)sys.rank; ++j)
        for (size_t i = 0; i < a.size(); ++i) c[j] += a[i] * sys.gram[i][j];
    return c;
}

Vec vec_covector(const RootSystem& sys, const Vec& a, size_t dim) {
    Vec c(dim, Rat(0));
    for (size_t j = 0; j < (size_t)sys.rank; ++j)
        for (size_t i = 0; i < a.size() && i < (size_t)sys.rank; ++i)
            c[j] += a[i] * sys.gram[i][j];
    return c;
}

// full metric: gram on root coordinates, identity on central ones
Rat sq_metric(const RootSystem& sys, const Vec& v) {
    Rat s;
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = 0; j < v.size(); ++j) {
            Rat g = (i < (size_t)sys.rank && j < (size_t)sys.rank)
                        ? sys.gram[i][j]
                        : (i == j ? Rat(1) : Rat(0));
            if (g.sign() != 0) s += v[i] * g * v[j];
        }
    }
    return s;
}

Mat full_gram(const RootSystem& sys, size_t dim) {
    Mat g(dim, Vec(dim, Rat(0)));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            g[i][j] = (i < (size_t)sys.rank && j < (size_t)sys.rank)
                          ? sys.gram[i][j]
                          : (i == j ? Rat(1) : Rat(0));
    return g;
}

// component of root b transverse to the span of the subsystem, via the gram form
Vec transverse_part(const RootSystem& sys, const RootSubsystem& subsys, const Vec& b) {
    // independent spanning subset of the subsystem
    std::vector<Vec> u;
    for (int m : subsys.members) {
        Vec v = sys.roots[m];
        Vec red = v;
        for (const Vec& w : u) {
            size_t lead = 0;
            while (lead < w.size() && w[lead].sign() == 0) ++lead;
            if (lead < w.size() && red[lead].sign() != 0)
                red = sub(red, scale(red[lead] / w[lead], w));
        }
        if (!is_zero(red)) u.push_back(v);
    }
    if (u.empty()) return b;
    const size_t k = u.size();
    Mat m(k, Vec(k));
    Vec rhs(k);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) m[i][j] = pair(sys.gram, u[i], u[j]);
        rhs[i] = pair(sys.gram, u[i], b);
    }
    Vec coef = solve_linear(m, rhs);
    Vec res = b;
    for (size_t j = 0; j < k; ++j) res = sub(res, scale(coef[j], u[j]));
    return res;
}

// the pair of half-spaces |<functional, p - x>| <= bound
void band_faces(ConvexPoly& poly, const Vec& cov, const Vec& x, const Rat& bound) {
    Rat at_x = dot(cov, x);
    poly.faces.push_back(HalfSpace{cov, bound - at_x, false});
    poly.faces.push_back(HalfSpace{scale(Rat(-1), cov), bound + at_x, false});
}

HalfSpace wall_halfspace(const Atlas& atlas, int chart, const Rat& extra, bool strict = false) {
    const Fold& f = atlas.fold_of(chart);
    Vec cov = root_covector(*atlas.sys, f.root, atlas.box.lo.size());
    return HalfSpace{cov, f.depth + extra, strict};
}

} // namespace

void Atlas::validate() const {
    if (!sys) throw std::invalid_argument("atlas has no root system");
    if (x.size() != box.lo.size() || box.lo.size() != box.hi.size())
        throw std::invalid_argument("atlas dimensions disagree");
    for (size_t i = 0; i < x.size(); ++i) {
        if (!(box.lo[i] <= x[i]) || !(x[i] <= box.hi[i]))
            throw std::invalid_argument("base point outside bounding box");
    }
    for (const Fold& f : folds) {
        if (f.root < 0 || f.root >= (int)sys->roots.size())
            throw std::invalid_argument("fold root out of range");
        if ((root_eval(*sys, f.root, x) + f.depth).sign() < 0)
            throw std::invalid_argument("base point outside a fold's shared half-space");
    }
}

Rat Atlas::wall_value(int chart, const Vec& p) const {
    const Fold& f = fold_of(chart);
    return root_eval(*sys, f.root, p) + f.depth;
}

Vec Atlas::reflect(int chart, const Vec& p) const {
    const Fold& f = fold_of(chart);
    const Vec& beta = sys->roots[f.root];
    Rat val = wall_value(chart, p);
    Rat factor = Rat(2) * val / sq_norm(sys->gram, beta);
    Vec out = p;
    for (size_t i = 0; i < beta.size(); ++i) out[i] -= factor * beta[i];
    return out;
}

AtlasPoint canonical_point(const Atlas& atlas, const AtlasPoint& p) {
    if (p.chart > 0 && atlas.wall_value(p.chart, p.coords).sign() >= 0)
        return AtlasPoint{0, p.coords};
    return p;
}

Segment geodesic(const Atlas& atlas, const AtlasPoint& pin, const AtlasPoint& qin) {
    AtlasPoint p = canonical_point(atlas, pin);
    AtlasPoint q = canonical_point(atlas, qin);
    if (p.chart == q.chart) return Segment{p.chart, p.coords, q.coords};
    if (p.chart > 0 && q.chart > 0) throw NoCommonChart();
    const AtlasPoint& base = p.chart == 0 ? p : q;
    const AtlasPoint& folded = p.chart == 0 ? q : p;
    if (atlas.wall_value(folded.chart, base.coords).sign() >= 0)
        return Segment{folded.chart, p.coords, q.coords};
    throw NoCommonChart();
}

std::optional<AtlasPoint> segment_meets(const Segment& seg, const Region& r) {
    for (const auto& [chart, polys] : r.charts) {
        for (const auto& poly : polys) {
            ConvexPoly test = poly;
            // cross-chart pieces count only on the shared side of each wall,
            // where coordinates agree; the extra wall faces are added by the
            // caller via theta/fixed region construction. Same-chart pieces
            // are tested directly.
            if (chart != seg.chart) continue;
            auto t = test.segment_param(seg.a, seg.b);
            if (t) {
                Vec w(seg.a.size());
                for (size_t i = 0; i < w.size(); ++i)
                    w[i] = seg.a[i] + (*t) * (seg.b[i] - seg.a[i]);
                return AtlasPoint{seg.chart, w};
            }
        }
    }
    return std::nullopt;
}

Region whole_patch(const Atlas& atlas) {
    Region r;
    for (int c = 0; c < atlas.chart_count(); ++c)
        r.add(c, poly_box(atlas.box.lo, atlas.box.hi));
    return r;
}

RegionResult fixed_region_root_element(int root, const Depth& n, long long p,
                                       const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    const size_t dim = atlas.box.lo.size();
    RegionResult out;
    if (n.inf) { // no element: fixes everything it generates nothing against
        out.region = whole_patch(atlas);
        return out;
    }
    long long n_off = min_offset(sys, root, atlas.x, n);
    HalfSpace original{root_covector(sys, root, dim), Rat(n_off), false};
    for (int chart = 0; chart < atlas.chart_count(); ++chart) {
        ConvexPoly poly = poly_box(atlas.box.lo, atlas.box.hi);
        poly.faces.push_back(original);
        if (chart > 0) {
            const Fold& f = atlas.fold_of(chart);
            if (f.root == root) {
                // the element lies in the same root group as the fold: they commute
            } else if (sys.negate(f.root) == root) {
                // opposite root group: rank-1 closed form; the fixed set in the
                // folded chart is additionally bounded by the conjugated wall
                Vec neg = scale(Rat(-1), original.normal);
                poly.faces.push_back(HalfSpace{neg, Rat(n_off) + Rat(2) * f.depth, false});
            } else {
                try {
                    auto terms = chevalley_commutator(sys, root, f.root, Rat(n_off), f.depth, p);
                    for (const auto& t : terms) {
                        poly.faces.push_back(
                            HalfSpace{root_covector(sys, t.root, dim), t.valuation, false});
                        if (!t.exact) out.taint = true;
                    }
                } catch (const std::invalid_argument&) {
                    // proportional pair in a product system cannot happen here;
                    // non-interacting roots yield no extra terms
                }
            }
        }
        out.region.add(chart, std::move(poly));
    }
    return out;
}

Region fixed_region_torus(int level, const Depth& t, const DatumSkeleton& sk,
                          const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    const size_t dim = atlas.box.lo.size();
    const int d = sk.d();
    bool split = !sk.chain.split_center.empty() && (size_t)level < sk.chain.split_center.size() &&
                 sk.chain.split_center[level];
    if (t.inf || level == d || split) return whole_patch(atlas);
    Rat bound((long long)t.eff_int());
    const RootSubsystem& phi_i = sk.chain.levels[level];

    ConvexPoly band; // in shared coordinates, relative to x
    for (size_t b = 0; b < sys.roots.size(); ++b) {
        if (phi_i.contains((int)b)) continue;
        Vec perp = transverse_part(sys, phi_i, sys.roots[b]);
        if (is_zero(perp)) continue;
        band_faces(band, vec_covector(sys, perp, dim), atlas.x, bound);
    }

    Region out;
    for (int chart = 0; chart < atlas.chart_count(); ++chart) {
        ConvexPoly poly = poly_box(atlas.box.lo, atlas.box.hi);
        poly.faces.insert(poly.faces.end(), band.faces.begin(), band.faces.end());
        if (chart > 0) {
            const Fold& f = atlas.fold_of(chart);
            if (!phi_i.contains(f.root))
                poly.faces.push_back(wall_halfspace(atlas, chart, bound));
        }
        out.add(chart, std::move(poly));
    }
    return out;
}

RegionResult fixed_region_profile(const FiltrationProfile& f, const DatumSkeleton* sk,
                                  const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    RegionResult out;
    out.region = whole_patch(atlas);
    long long p = sk ? sk->p : 5;

    // split-torus part: fixes every apartment; across a fold the conjugated
    // torus element moves points further than its depth allows
    if (!f.torus_depth.inf) {
        Rat bound((long long)f.torus_depth.eff_int());
        for (int chart = 1; chart < atlas.chart_count(); ++chart)
            out.region.intersect_chart(chart, ConvexPoly{{wall_halfspace(atlas, chart, bound)}});
    }

    // anisotropic center of the profile's level: bounded transverse band
    if (f.center_level >= 0 && sk && f.center_level < sk->d()) {
        Region center = fixed_region_torus(f.center_level, f.torus_depth, *sk, atlas);
        for (const auto& [chart, polys] : center.charts)
            for (const auto& poly : polys) out.region.intersect_chart(chart, poly);
    }

    for (size_t a = 0; a < sys.roots.size(); ++a) {
        if (f.root_depths[a].inf) continue;
        RegionResult rr = fixed_region_root_element((int)a, f.root_depths[a], p, atlas);
        out.taint = out.taint || rr.taint;
        for (const auto& [chart, polys] : rr.region.charts)
            for (const auto& poly : polys) out.region.intersect_chart(chart, poly);
    }
    return out;
}

Region trace_subbuilding(int level, const DatumSkeleton& sk, const Atlas& atlas) {
    const RootSystem& sys = *atlas.sys;
    const size_t dim = atlas.box.lo.size();
    if (level == sk.d()) return whole_patch(atlas);
    const RootSubsystem& phi_i = sk.chain.levels[level];

    ConvexPoly flat; // { <perp functional, p - x> = 0 } for every outside root
    for (size_t b = 0; b < sys.roots.size(); ++b) {
        if (phi_i.contains((int)b)) continue;
        Vec perp = transverse_part(sys, phi_i, sys.roots[b]);
        if (is_zero(perp)) continue;
        band_faces(flat, vec_covector(sys, perp, dim), atlas.x, Rat(0));
    }

    Region out;
    for (int chart = 0; chart < atlas.chart_count(); ++chart) {
        ConvexPoly poly = poly_box(atlas.box.lo, atlas.box.hi);
        poly.faces.insert(poly.faces.end(), flat.faces.begin(), flat.faces.end());
        if (chart > 0) {
            const Fold& f = atlas.fold_of(chart);
            if (!phi_i.contains(f.root))
                poly.faces.push_back(wall_halfspace(atlas, chart, Rat(0)));
        }
        out.add(chart, std::move(poly));
    }
    return out;
}

Rat sq_distance(const Atlas& atlas, const AtlasPoint& pin, const AtlasPoint& qin) {
    const RootSystem& sys = *atlas.sys;
    AtlasPoint p = canonical_point(atlas, pin);
    AtlasPoint q = canonical_point(atlas, qin);
    if (p.chart == q.chart) return sq_metric(sys, sub(p.coords, q.coords));
    if (p.chart == 0 || q.chart == 0) {
        const AtlasPoint& base = p.chart == 0 ? p : q;
        const AtlasPoint& folded = p.chart == 0 ? q : p;
        if (atlas.wall_value(folded.chart, base.coords).sign() >= 0)
            return sq_metric(sys, sub(base.coords, folded.coords));
        return sq_metric(sys, sub(base.coords, atlas.reflect(folded.chart, folded.coords)));
    }
    const Fold& fp = atlas.fold_of(p.chart);
    const Fold& fq = atlas.fold_of(q.chart);
    if (fp.root == fq.root && fp.depth == fq.depth)
        return sq_metric(sys, sub(p.coords, atlas.reflect(q.chart, q.coords)));
    throw HorizonError();
}

namespace {

struct NearCandidate {
    Vec q;      // in the frame of the query point
    Rat sq;
};

// closed-poly nearest point under the full metric, by active-set enumeration
std::optional<NearCandidate> nearest_in_poly(const RootSystem& sys, const Vec& p,
                                             const ConvexPoly& poly) {
    const size_t dim = p.size();
    Mat g = full_gram(sys, dim);
    std::optional<NearCandidate> best;
    const size_t nf = poly.faces.size();
    size_t max_k = std::min(dim, nf);
    std::vector<size_t> comb;
    auto try_active = [&](const std::vector<size_t>& act) {
        const size_t k = act.size();
        const size_t n = dim + k;
        Mat a(n, Vec(n, Rat(0)));
        Vec b(n, Rat(0));
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) a[i][j] = g[i][j];
            for (size_t j = 0; j < k; ++j) {
                const HalfSpace& h = poly.faces[act[j]];
                a[i][dim + j] = i < h.normal.size() ? h.normal[i] : Rat(0);
            }
            b[i] = dot(g[i], p);
        }
        for (size_t r = 0; r < k; ++r) {
            const HalfSpace& h = poly.faces[act[r]];
            for (size_t c = 0; c < dim; ++c) a[dim + r][c] = c < h.normal.size() ? h.normal[c] : Rat(0);
            b[dim + r] = -h.offset;
        }
        Vec sol = solve_linear(a, b);
        if (sol.empty()) return;
        Vec q(sol.begin(), sol.begin() + dim);
        for (const auto& h : poly.faces)
            if ((dot(h.normal, q) + h.offset).sign() < 0) return;
        Rat sq = sq_metric(sys, sub(p, q));
        if (!best || sq < best->sq) best = NearCandidate{q, sq};
    };
    // enumerate all subsets of size 0..max_k
    std::vector<size_t> stack;
    // simple recursive enumeration via lambda
    std::function<void(size_t)> rec = [&](size_t start) {
        try_active(stack);
        if (stack.size() == max_k) return;
        for (size_t i = start; i < nf; ++i) {
            stack.push_back(i);
            rec(i + 1);
            stack.pop_back();
        }
    };
    rec(0);
    return best;
}

ConvexPoly closed_copy(const ConvexPoly& poly) {
    ConvexPoly out = poly;
    for (auto& h : out.faces) h.strict = false;
    return out;
}

ConvexPoly reflect_poly(const Atlas& atlas, int chart, const ConvexPoly& poly) {
    // image of the poly under the wall reflection: q' in image iff refl(q') in poly
    const RootSystem& sys = *atlas.sys;
    const size_t dim = atlas.box.lo.size();
    const Fold& f = atlas.fold_of(chart);
    const Vec& beta = sys.roots[f.root];
    Rat nrm = sq_norm(sys.gram, beta);
    Vec beta_cov = root_covector(sys, f.root, dim);
    ConvexPoly out;
    for (const auto& h : poly.faces) {
        // refl(q) = q - (2 (<beta,q>+m)/|beta|^2) beta
        Rat coef; // <normal, beta> (plain dot; normal is a covector)
        for (size_t i = 0; i < beta.size() && i < h.normal.size(); ++i)
            coef += h.normal[i] * beta[i];
        Rat fac = Rat(2) * coef / nrm;
        Vec nn = h.normal;
        nn.resize(dim, Rat(0));
        for (size_t i = 0; i < dim; ++i) nn[i] -= fac * beta_cov[i];
        Rat off = h.offset - fac * f.depth;
        out.faces.push_back(HalfSpace{nn, off, h.strict});
    }
    return out;
}

} // namespace

ProjectionResult project_to_trace(const Atlas& atlas, const AtlasPoint& pin, const Region& t) {
    const RootSystem& sys = *atlas.sys;
    const size_t dim = atlas.box.lo.size();
    AtlasPoint p = canonical_point(atlas, pin);
    bool horizon = false;

    struct Hit {
        AtlasPoint foot;
        Rat sq;
    };
    std::vector<Hit> hits;
    auto consider = [&](const ConvexPoly& poly, int foot_chart, int reflect_chart) {
        auto near = nearest_in_poly(sys, p.coords, closed_copy(poly));
        if (!near) return;
        Vec coords = reflect_chart >= 0 ? atlas.reflect(reflect_chart, near->q) : near->q;
        AtlasPoint foot = canonical_point(atlas, AtlasPoint{foot_chart, coords});
        hits.push_back(Hit{foot, near->sq});
    };

    for (const auto& [chart, polys] : t.charts) {
        for (const auto& poly : polys) {
            if (chart == p.chart) {
                consider(poly, chart, -1);
                continue;
            }
            if (p.chart == 0) {
                // target in a folded chart
                if (atlas.wall_value(chart, p.coords).sign() >= 0) {
                    consider(poly, chart, -1); // p lies in that chart too
                } else {
                    ConvexPoly shared = poly;
                    shared.faces.push_back(wall_halfspace(atlas, chart, Rat(0)));
                    consider(shared, chart, -1);
                    ConvexPoly beyond = poly;
                    beyond.faces.push_back(wall_halfspace(atlas, chart, Rat(0)).complement());
                    if (!closed_copy(beyond).empty(dim))
                        consider(reflect_poly(atlas, chart, beyond), chart, chart);
                }
                continue;
            }
            // p in a folded chart, strictly beyond its wall
            auto handle_base_coords = [&](ConvexPoly piece, int foot_chart) {
                // piece is in base coordinates; split by p's wall
                ConvexPoly shared = piece;
                shared.faces.push_back(wall_halfspace(atlas, p.chart, Rat(0)));
                consider(shared, foot_chart, -1);
                ConvexPoly beyond = piece;
                beyond.faces.push_back(wall_halfspace(atlas, p.chart, Rat(0)).complement());
                if (!closed_copy(beyond).empty(dim))
                    consider(reflect_poly(atlas, p.chart, beyond), foot_chart, p.chart);
            };
            if (chart == 0) {
                handle_base_coords(poly, 0);
                continue;
            }
            // target in a different folded chart
            const Fold& fp = atlas.fold_of(p.chart);
            const Fold& fc = atlas.fold_of(chart);
            ConvexPoly shared = poly;
            shared.faces.push_back(wall_halfspace(atlas, chart, Rat(0)));
            handle_base_coords(shared, chart);
            ConvexPoly beyond = poly;
            beyond.faces.push_back(wall_halfspace(atlas, chart, Rat(0)).complement());
            if (!closed_copy(beyond).empty(dim)) {
                if (fp.root == fc.root && fp.depth == fc.depth) {
                    // same wall: branches at a common wall, one reflection apart
                    consider(reflect_poly(atlas, chart, beyond), chart, chart);
                } else {
                    horizon = true;
                }
            }
        }
    }

    if (hits.empty()) throw HorizonError();
    // global minimum and uniqueness of the minimizing building point
    size_t best = 0;
    for (size_t i = 1; i < hits.size(); ++i) {
        if (hits[i].sq < hits[best].sq) best = i;
        else if (hits[i].sq == hits[best].sq) {
            // lexicographic tie-break on (chart, coords)
            const AtlasPoint& a = hits[i].foot;
            const AtlasPoint& b = hits[best].foot;
            if (a.chart < b.chart) best = i;
            else if (a.chart == b.chart && std::lexicographical_compare(
                         a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end()))
                best = i;
        }
    }
    bool unique = true;
    for (size_t i = 0; i < hits.size(); ++i)
        if (hits[i].sq == hits[best].sq && !(hits[i].foot == hits[best].foot)) unique = false;
    return ProjectionResult{hits[best].foot, hits[best].sq, unique, horizon};
}

} // namespace bk
