#include <doctest.h>

#include <algorithm>

#include "bk/criteria.hpp"
#include "fixtures.hpp"

using namespace bk;

namespace {

bool has_annotation(const Verdict& v, const std::string& a) {
    return std::find(v.annotations.begin(), v.annotations.end(), a) != v.annotations.end();
}

std::vector<ComplementaryRay> standard_rays() {
    return {ComplementaryRay{Vec{Rat(1), Rat(0)}}, ComplementaryRay{Vec{Rat(-1), Rat(1)}}};
}

} // namespace

TEST_CASE("stabilizer shadow at sample points") {
    Fixture fx = c2_vertical(Rat(3));
    Shadow sh = shadow_at(AtlasPoint{0, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas);
    CHECK(sh.quotient.members.size() == 2); // the vertical pair survives at x
    CHECK(sh.present.size() == 1);
    CHECK(fx.sys->roots[sh.present[0]] == Vec{Rat(0), Rat(2)});
    CHECK(!sh.surjective());

    sh = shadow_at(AtlasPoint{0, Vec{Rat(1, 4), Rat(-1, 4)}}, fx.sk, fx.atlas);
    REQUIRE(sh.present.size() == 1);
    CHECK(fx.sys->roots[sh.present[0]] == Vec{Rat(0), Rat(-2)});

    sh = shadow_at(AtlasPoint{0, Vec{Rat(1, 4), Rat(0)}}, fx.sk, fx.atlas);
    CHECK(sh.surjective()); // both vertical walls still hold on the axis

    // shadow is containment-monotone along the sample: every present root of a
    // farther point stays present at a scaled-down point on the same ray
    for (long long i = -4; i <= 4; ++i)
        for (long long j = -4; j <= 4; ++j) {
            Vec z{Rat(i, 4), Rat(j, 4)};
            Shadow far = shadow_at(AtlasPoint{0, z}, fx.sk, fx.atlas);
            Shadow near = shadow_at(AtlasPoint{0, scale(Rat(1, 2), z)}, fx.sk, fx.atlas);
            for (int m : far.present)
                CHECK(std::find(near.present.begin(), near.present.end(), m) !=
                      near.present.end());
        }
}

TEST_CASE("parabolic shadow criterion") {
    Fixture fx = c2_vertical(Rat(3));
    auto w = thmA_applies(AtlasPoint{0, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas);
    REQUIRE(w.has_value());
    // witness: nonnegative on present roots, negative somewhere on the quotient
    Shadow sh = shadow_at(AtlasPoint{0, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas);
    bool strict = false;
    for (int m : sh.present) CHECK(pair(fx.sys->gram, *w, fx.sys->roots[m]).sign() >= 0);
    for (int m : sh.quotient.members)
        if (pair(fx.sys->gram, *w, fx.sys->roots[m]).sign() < 0) strict = true;
    CHECK(strict);
    CHECK(!thmA_applies(AtlasPoint{0, Vec{Rat(1, 4), Rat(0)}}, fx.sk, fx.atlas).has_value());
    // in the folded branch the same wall test applies in branch coordinates
    CHECK(thmA_applies(AtlasPoint{1, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas).has_value());
}

TEST_CASE("projection dichotomy against the trace fiber") {
    Fixture fx = c2_vertical(Rat(3), /*with_fold=*/false, Rat(1));
    // off the horizontal axis the foot leaves the base fiber
    ProjCheck pc = projection_criterion(AtlasPoint{0, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk,
                                        fx.atlas);
    CHECK(pc.applies);
    CHECK(!pc.horizon);
    pc = projection_criterion(AtlasPoint{0, Vec{Rat(-1, 2), Rat(3, 4)}}, fx.sk, fx.atlas);
    CHECK(pc.applies);
    // on the axis every candidate, including the refinement vertices, lands on x
    for (const Rat& s : {Rat(1, 4), Rat(1, 2), Rat(-1, 4), Rat(1)}) {
        pc = projection_criterion(AtlasPoint{0, Vec{s, Rat(0)}}, fx.sk, fx.atlas);
        CHECK(!pc.applies);
        CHECK(!pc.horizon);
    }
    pc = projection_criterion(AtlasPoint{0, fx.sk.x}, fx.sk, fx.atlas);
    CHECK(!pc.applies);
}

TEST_CASE("theta layer: domain, frozen shape, criticals") {
    Fixture fx = c2_vertical(Rat(3));
    CHECK_THROWS_AS(theta_region(Rat(0), fx.sk, fx.atlas), std::out_of_range);
    CHECK_THROWS_AS(theta_region(Rat(-1), fx.sk, fx.atlas), std::out_of_range);
    CHECK_THROWS_AS(theta_region(Rat(2), fx.sk, fx.atlas), std::out_of_range);

    Region th1 = theta_region(Rat(1), fx.sk, fx.atlas);
    // base chart: { 1/2 < |p1| <= 1, |p2| <= 1 }
    CHECK(th1.contains(0, Vec{Rat(3, 4), Rat(0)}));
    CHECK(th1.contains(0, Vec{Rat(-3, 4), Rat(1)}));
    CHECK(th1.contains(0, Vec{Rat(1), Rat(-1)}));
    CHECK(!th1.contains(0, Vec{Rat(1, 2), Rat(0)}));
    CHECK(!th1.contains(0, Vec{Rat(1, 4), Rat(0)}));
    CHECK(!th1.contains(0, Vec{Rat(5, 4), Rat(0)}));
    CHECK(!th1.contains(0, Vec{Rat(3, 4), Rat(9, 8)}));
    CHECK(theta_region(Rat(1, 2), fx.sk, fx.atlas).empty(2));
    CHECK(theta_region(Rat(3, 2), fx.sk, fx.atlas).empty(2));

    auto crit = theta_critical_values(fx.sk);
    CHECK(crit == std::vector<Rat>{Rat(1, 2), Rat(1), Rat(5, 4), Rat(3, 2)});

    // d = 0: no layers at all
    Fixture flat = c2_full_level(Rat(3));
    CHECK(theta_critical_values(flat.sk).empty());
    CHECK(theta_union(flat.sk, flat.atlas).empty(2));

    // two-step chain: all values fall in (0, s_1]
    Fixture two = c2_two_step(Rat(1), Rat(2), Rat(2));
    auto crit2 = theta_critical_values(two.sk);
    CHECK(crit2 == std::vector<Rat>{Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)});
    for (const Rat& t : crit2) CHECK_NOTHROW(theta_region(t, two.sk, two.atlas));
    CHECK_THROWS_AS(theta_region(Rat(9, 8), two.sk, two.atlas), std::out_of_range);

    // the critical discretization loses no points: a finer sweep of t adds nothing
    Region uni = theta_union(fx.sk, fx.atlas);
    for (long long num = 1; num <= 12; ++num) {
        Rat t(num, 8);
        if (t > fx.sk.depths.s(0)) break;
        Region r = theta_region(t, fx.sk, fx.atlas);
        for (long long i = -8; i <= 8; ++i)
            for (long long j = -8; j <= 8; ++j)
                for (int chart = 0; chart < fx.atlas.chart_count(); ++chart) {
                    Vec p{Rat(i, 4), Rat(j, 4)};
                    if (r.contains(chart, p)) CHECK(uni.contains(chart, p));
                }
    }
}

TEST_CASE("deep-element witness along the geodesic") {
    Fixture fx = c2_vertical(Rat(3));
    auto tb = thmB_applies(AtlasPoint{0, Vec{Rat(3, 4), Rat(0)}}, fx.sk, fx.atlas);
    REQUIRE(tb.has_value());
    CHECK(tb->first == Rat(1));
    const AtlasPoint& w = tb->second;
    CHECK(w.chart == 0);
    CHECK(w.coords[1] == Rat(0));
    CHECK(Rat(1, 2) < w.coords[0]);
    CHECK(w.coords[0] <= Rat(3, 4));
    CHECK(theta_region(Rat(1), fx.sk, fx.atlas).contains(0, w.coords));

    CHECK(!thmB_applies(AtlasPoint{0, Vec{Rat(1, 4), Rat(0)}}, fx.sk, fx.atlas).has_value());
    CHECK(!thmB_applies(AtlasPoint{0, Vec{Rat(1, 2), Rat(1, 2)}}, fx.sk, fx.atlas).has_value());
    // deep into the branch the geodesic crosses the branch copy of the layer
    auto tb2 = thmB_applies(AtlasPoint{1, Vec{Rat(3, 4), Rat(1, 2)}}, fx.sk, fx.atlas);
    REQUIRE(tb2.has_value());
    CHECK(tb2->first == Rat(1));
}

TEST_CASE("membership in the excluded trace rays") {
    Fixture fx = c2_vertical(Rat(3));
    auto rays = standard_rays();
    CHECK(on_complementary_trace(AtlasPoint{0, fx.sk.x}, fx.atlas, rays));
    CHECK(on_complementary_trace(AtlasPoint{0, Vec{Rat(1, 2), Rat(0)}}, fx.atlas, rays));
    CHECK(on_complementary_trace(AtlasPoint{0, Vec{Rat(-1, 2), Rat(1, 2)}}, fx.atlas, rays));
    CHECK(!on_complementary_trace(AtlasPoint{0, Vec{Rat(-1, 2), Rat(0)}}, fx.atlas, rays));
    CHECK(!on_complementary_trace(AtlasPoint{0, Vec{Rat(1, 2), Rat(-1, 2)}}, fx.atlas, rays));
    CHECK(!on_complementary_trace(AtlasPoint{0, Vec{Rat(1, 2), Rat(1, 4)}}, fx.atlas, rays));
    // branch points beyond the wall never lie on the base-chart rays
    CHECK(!on_complementary_trace(AtlasPoint{1, Vec{Rat(1, 2), Rat(1, 2)}}, fx.atlas, rays));
    // shared-side branch alias is pulled back first
    CHECK(on_complementary_trace(AtlasPoint{1, Vec{Rat(1, 2), Rat(0)}}, fx.atlas, rays));
    CHECK(!on_complementary_trace(AtlasPoint{0, Vec{Rat(1, 2), Rat(0)}}, fx.atlas, {}));
}

TEST_CASE("full classification on the worked patch") {
    Fixture fx = c2_vertical(Rat(3));
    auto rays = standard_rays();

    Verdict v = classify(AtlasPoint{0, fx.sk.x}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::TypeBearing);

    v = classify(AtlasPoint{0, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::AtypicalThmA);
    CHECK(v.parabolic_witness.has_value());

    v = classify(AtlasPoint{1, Vec{Rat(1, 4), Rat(1, 4)}}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::AtypicalThmA);

    // on a complementary ray the shadow and projection branches are skipped
    v = classify(AtlasPoint{0, Vec{Rat(3, 4), Rat(0)}}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::AtypicalThmB);
    REQUIRE(v.theta_witness.has_value());
    CHECK(v.theta_witness->first == Rat(1));
    CHECK(has_annotation(v, "complementary-levi-trace"));

    v = classify(AtlasPoint{0, Vec{Rat(1, 4), Rat(0)}}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::Undecided);
    CHECK(has_annotation(v, "complementary-levi-trace"));
    CHECK(has_annotation(v, "shadow-surjective"));
    CHECK(has_annotation(v, "delta"));

    // off the rays the near-axis point is undecided without the exclusions
    v = classify(AtlasPoint{0, Vec{Rat(-1, 4), Rat(0)}}, fx.sk, fx.atlas, rays);
    CHECK(v.kind == VerdictKind::Undecided);
    CHECK(!has_annotation(v, "complementary-levi-trace"));

    CHECK(verdict_kind_str(VerdictKind::TypeBearing) == "TypeBearing");
    CHECK(verdict_kind_str(VerdictKind::AtypicalThmA) == "AtypicalThmA");
    CHECK(verdict_kind_str(VerdictKind::AtypicalThmB) == "AtypicalThmB");
    CHECK(verdict_kind_str(VerdictKind::Undecided) == "Undecided");
}
