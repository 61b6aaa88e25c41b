#include <doctest.h>

#include "bk/region.hpp"

using namespace bk;

namespace {

HalfSpace hs(long long nx, long long ny, const Rat& off, bool strict = false) {
    return HalfSpace{Vec{Rat(nx), Rat(ny)}, off, strict};
}

// all points of the (1/den)-grid over [-range, range]^2
std::vector<Vec> grid(long long range, long long den) {
    std::vector<Vec> out;
    for (long long i = -range * den; i <= range * den; ++i)
        for (long long j = -range * den; j <= range * den; ++j)
            out.push_back(Vec{Rat(i, den), Rat(j, den)});
    return out;
}

} // namespace

TEST_CASE("half space membership and complement") {
    HalfSpace h = hs(1, 0, Rat(-1)); // x >= 1
    CHECK(h.holds(Vec{Rat(1), Rat(5)}));
    CHECK(h.holds(Vec{Rat(2), Rat(0)}));
    CHECK(!h.holds(Vec{Rat(1, 2), Rat(0)}));
    HalfSpace c = h.complement(); // x < 1
    CHECK(c.strict);
    CHECK(!c.holds(Vec{Rat(1), Rat(0)}));
    CHECK(c.holds(Vec{Rat(1, 2), Rat(0)}));
    for (const Vec& p : grid(2, 3)) CHECK(h.holds(p) != c.holds(p));
}

TEST_CASE("emptiness is exact and honors strictness") {
    ConvexPoly line{{hs(1, 0, Rat(0)), hs(-1, 0, Rat(0))}}; // x = 0
    CHECK(!line.empty(2));
    ConvexPoly open_contradiction{{hs(1, 0, Rat(0), true), hs(-1, 0, Rat(0))}};
    CHECK(open_contradiction.empty(2));
    ConvexPoly pinched{{hs(1, 0, Rat(-1)), hs(-1, 0, Rat(1)), hs(1, 0, Rat(-1), true)}};
    CHECK(pinched.empty(2)); // x >= 1, x <= 1, x > 1
    ConvexPoly open_box{{hs(1, 0, Rat(0), true), hs(-1, 0, Rat(1), true),
                         hs(0, 1, Rat(0), true), hs(0, -1, Rat(1), true)}};
    CHECK(!open_box.empty(2));
    CHECK(open_box.contains(Vec{Rat(1, 2), Rat(1, 2)}));
    CHECK(!open_box.contains(Vec{Rat(0), Rat(1, 2)}));
    ConvexPoly wedge{{hs(1, 1, Rat(0)), hs(-1, 1, Rat(0)), hs(0, 1, Rat(-1))}};
    CHECK(!wedge.empty(2)); // |x| <= y with y >= 1
    ConvexPoly far{{hs(1, 0, Rat(-10)), hs(-1, 0, Rat(-10))}};
    CHECK(far.empty(2)); // x >= 10 and x <= -10
    CHECK(ConvexPoly{}.contains(Vec{Rat(7), Rat(7)})); // no faces: everything
    // one dimension: plain interval logic
    ConvexPoly seg{{HalfSpace{Vec{Rat(1)}, Rat(0)}, HalfSpace{Vec{Rat(-1)}, Rat(1)}}};
    CHECK(!seg.empty(1));
    CHECK(seg.contains(Vec{Rat(1, 3)}));
    CHECK(!seg.contains(Vec{Rat(2)}));
}

TEST_CASE("segment clipping against a polyhedron") {
    ConvexPoly band{{hs(1, 0, Rat(-1)), hs(-1, 0, Rat(2))}}; // 1 <= x <= 2
    Vec a{Rat(0), Rat(0)}, b{Rat(4), Rat(0)};
    auto t = band.segment_param(a, b);
    REQUIRE(t.has_value());
    Rat x = a[0] + *t * (b[0] - a[0]);
    CHECK(Rat(1) <= x);
    CHECK(x <= Rat(2));
    CHECK(band.meets_segment(b, a));
    CHECK(!band.meets_segment(a, Vec{Rat(1, 2), Rat(0)}));
    // touching only at an endpoint
    CHECK(band.meets_segment(a, Vec{Rat(1), Rat(0)}));
    ConvexPoly open_band{{hs(1, 0, Rat(-1), true), hs(-1, 0, Rat(2))}}; // x > 1
    CHECK(!open_band.meets_segment(a, Vec{Rat(1), Rat(0)}));
    CHECK(open_band.meets_segment(a, Vec{Rat(3, 2), Rat(0)}));
    // degenerate segment = point test
    CHECK(band.meets_segment(Vec{Rat(3, 2), Rat(1)}, Vec{Rat(3, 2), Rat(1)}));
    CHECK(!band.meets_segment(a, a));
}

TEST_CASE("vertex enumeration") {
    ConvexPoly square = poly_box(Vec{Rat(0), Rat(0)}, Vec{Rat(1), Rat(2)});
    auto vs = square.vertices(2);
    REQUIRE(vs.size() == 4);
    for (const Vec& v : vs) {
        CHECK((v[0] == Rat(0) || v[0] == Rat(1)));
        CHECK((v[1] == Rat(0) || v[1] == Rat(2)));
    }
    ConvexPoly tri{{hs(0, 1, Rat(0)), hs(1, -1, Rat(0)), hs(-1, -1, Rat(2))}};
    vs = tri.vertices(2);
    REQUIRE(vs.size() == 3);
    for (const Vec& v : vs) CHECK(tri.contains(v));
    ConvexPoly pt = poly_point(Vec{Rat(1, 3), Rat(-2)});
    vs = pt.vertices(2);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == Vec{Rat(1, 3), Rat(-2)});
    // unbounded in one direction: only the corner vertices exist
    ConvexPoly quadrant{{hs(1, 0, Rat(0)), hs(0, 1, Rat(0))}};
    vs = quadrant.vertices(2);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == Vec{Rat(0), Rat(0)});
}

TEST_CASE("set difference covers exactly and disjointly") {
    ConvexPoly outer = poly_box(Vec{Rat(-1), Rat(-1)}, Vec{Rat(1), Rat(1)});
    ConvexPoly inner = poly_box(Vec{Rat(-1, 2), Rat(-1, 2)}, Vec{Rat(1, 2), Rat(1, 2)});
    auto pieces = poly_subtract(outer, inner);
    for (const Vec& p : grid(2, 4)) {
        int hits = 0;
        for (const auto& piece : pieces)
            if (piece.contains(p)) ++hits;
        bool want = outer.contains(p) && !inner.contains(p);
        CHECK(hits == (want ? 1 : 0));
    }
    // subtracting something disjoint keeps the set intact
    ConvexPoly far = poly_box(Vec{Rat(5), Rat(5)}, Vec{Rat(6), Rat(6)});
    pieces = poly_subtract(outer, far);
    for (const Vec& p : grid(2, 3)) {
        int hits = 0;
        for (const auto& piece : pieces)
            if (piece.contains(p)) ++hits;
        CHECK(hits == (outer.contains(p) ? 1 : 0));
    }
    // subtracting a superset leaves nothing
    for (const auto& piece : poly_subtract(inner, outer)) CHECK(piece.empty(2));
}

TEST_CASE("intersection composes faces") {
    ConvexPoly a = poly_box(Vec{Rat(0), Rat(0)}, Vec{Rat(2), Rat(2)});
    ConvexPoly b = poly_box(Vec{Rat(1), Rat(1)}, Vec{Rat(3), Rat(3)});
    ConvexPoly c = poly_intersect(a, b);
    for (const Vec& p : grid(3, 2))
        CHECK(c.contains(p) == (a.contains(p) && b.contains(p)));
}

TEST_CASE("regions: per-chart unions with algebra") {
    Region r;
    r.add(0, poly_box(Vec{Rat(0), Rat(0)}, Vec{Rat(1), Rat(1)}));
    r.add(1, poly_box(Vec{Rat(-1), Rat(-1)}, Vec{Rat(0), Rat(0)}));
    CHECK(r.contains(0, Vec{Rat(1, 2), Rat(1, 2)}));
    CHECK(!r.contains(0, Vec{Rat(-1, 2), Rat(-1, 2)}));
    CHECK(r.contains(1, Vec{Rat(-1, 2), Rat(-1, 2)}));
    CHECK(!r.contains(2, Vec{Rat(0), Rat(0)}));
    CHECK(!r.empty(2));
    CHECK(r.meets_segment(0, Vec{Rat(-1), Rat(1, 2)}, Vec{Rat(2), Rat(1, 2)}));
    CHECK(!r.meets_segment(1, Vec{Rat(1), Rat(1)}, Vec{Rat(2), Rat(2)}));

    Region s = r;
    s.intersect_chart(0, poly_box(Vec{Rat(1, 2), Rat(0)}, Vec{Rat(2), Rat(2)}));
    CHECK(s.contains(0, Vec{Rat(3, 4), Rat(1, 2)}));
    CHECK(!s.contains(0, Vec{Rat(1, 4), Rat(1, 2)}));
    CHECK(s.contains(1, Vec{Rat(-1, 2), Rat(-1, 2)})); // untouched chart

    Region t = r;
    t.intersect_all(poly_box(Vec{Rat(-1, 4), Rat(-1, 4)}, Vec{Rat(1, 4), Rat(1, 4)}));
    CHECK(t.contains(0, Vec{Rat(1, 8), Rat(1, 8)}));
    CHECK(t.contains(1, Vec{Rat(-1, 8), Rat(-1, 8)}));
    CHECK(!t.contains(0, Vec{Rat(1, 2), Rat(1, 2)}));

    Region u = r;
    u.subtract_chart(0, poly_box(Vec{Rat(0), Rat(0)}, Vec{Rat(1), Rat(1)}));
    CHECK(!u.contains(0, Vec{Rat(1, 2), Rat(1, 2)}));
    CHECK(u.contains(1, Vec{Rat(-1, 2), Rat(-1, 2)}));

    CHECK(region_subset(t, r, 2));
    CHECK(!region_subset(r, t, 2));
    Region diff = region_subtract(r, t);
    Region meet = region_intersect(r, t, 2);
    for (int chart : {0, 1})
        for (const Vec& p : grid(1, 4)) {
            CHECK(diff.contains(chart, p) == (r.contains(chart, p) && !t.contains(chart, p)));
            CHECK(meet.contains(chart, p) == (r.contains(chart, p) && t.contains(chart, p)));
        }
    Region empty_r = region_subtract(r, r);
    CHECK(empty_r.empty(2));
}
