#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bk/linalg.hpp"

namespace bk {

// { p : <normal, p> + offset >= 0 }, or > 0 when strict
struct HalfSpace {
    Vec normal;
    Rat offset;
    bool strict = false;

    bool holds(const Vec& p) const {
        Rat v = dot(normal, p) + offset;
        return strict ? v.sign() > 0 : v.sign() >= 0;
    }
    HalfSpace complement() const {
        return HalfSpace{scale(Rat(-1), normal), -offset, !strict};
    }
};

struct ConvexPoly {
    std::vector<HalfSpace> faces;

    bool contains(const Vec& p) const;
    bool empty(size_t dim) const; // exact, honors strictness
    // parameter t in [0,1] with p + t(q-p) inside the set, if any (interior of
    // the feasible interval when possible)
    std::optional<Rat> segment_param(const Vec& p, const Vec& q) const;
    bool meets_segment(const Vec& p, const Vec& q) const {
        return segment_param(p, q).has_value();
    }
    // vertices of the polyhedron (dim-fold face intersections that are feasible)
    std::vector<Vec> vertices(size_t dim) const;
};

ConvexPoly poly_intersect(const ConvexPoly& a, const ConvexPoly& b);
// a minus b, as a disjoint finite union
std::vector<ConvexPoly> poly_subtract(const ConvexPoly& a, const ConvexPoly& b);
// the single point {p} as equalities
ConvexPoly poly_point(const Vec& p);
// axis box [lo,hi]
ConvexPoly poly_box(const Vec& lo, const Vec& hi);

// finite union of convex pieces per chart id
struct Region {
    std::map<int, std::vector<ConvexPoly>> charts;

    bool contains(int chart, const Vec& p) const;
    bool empty(size_t dim) const;
    void add(int chart, ConvexPoly poly) { charts[chart].push_back(std::move(poly)); }
    void intersect_chart(int chart, const ConvexPoly& poly);
    void intersect_all(const ConvexPoly& poly); // every chart
    void subtract_chart(int chart, const ConvexPoly& poly);
    bool meets_segment(int chart, const Vec& p, const Vec& q) const;
};

Region region_intersect(const Region& a, const Region& b, size_t dim);
Region region_subtract(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b, size_t dim);

} // namespace bk
