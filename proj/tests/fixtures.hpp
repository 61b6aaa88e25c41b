#pragma once

#include <memory>

#include "bk/atlas.hpp"
#include "bk/datum.hpp"

// shared hand-built configurations used across the suites
struct Fixture {
    std::shared_ptr<bk::RootSystem> sys;
    bk::DatumSkeleton sk;
    bk::Atlas atlas;
};

// C2 with the vertical long pair {±2e2} as the inner level, base point at the
// origin, both filtration depths r0; optionally one chart folded along the
// horizontal wall { -2 p2 >= 0 }
inline Fixture c2_vertical(const bk::Rat& r0, bool with_fold = true,
                           const bk::Rat& box_radius = bk::Rat(2)) {
    using namespace bk;
    Fixture fx;
    fx.sys = std::make_shared<RootSystem>(build_root_system(SystemLabel::B2C2));
    const RootSystem& sys = *fx.sys;
    int up = sys.index_of(Vec{Rat(0), Rat(2)});
    int down = sys.index_of(Vec{Rat(0), Rat(-2)});
    fx.sk.chain.sys = fx.sys.get();
    fx.sk.chain.levels = {make_subsystem(sys, {up, down}), full_subsystem(sys)};
    fx.sk.x = Vec{Rat(0), Rat(0)};
    fx.sk.depths.r = {r0, r0};
    fx.sk.p = 5;
    fx.sk.validate();
    fx.atlas.sys = fx.sys.get();
    fx.atlas.x = fx.sk.x;
    if (with_fold) fx.atlas.folds.push_back(Fold{down, Rat(0)});
    fx.atlas.box = Box{Vec{-box_radius, -box_radius}, Vec{box_radius, box_radius}};
    fx.atlas.validate();
    return fx;
}

// rank-1 toral datum: empty inner level, folds along -alpha at depths 0..fold_max
inline Fixture a1_toral(const bk::Rat& r0, int fold_max = 4,
                        const bk::Rat& box_radius = bk::Rat(3)) {
    using namespace bk;
    Fixture fx;
    fx.sys = std::make_shared<RootSystem>(build_root_system(SystemLabel::A1));
    int down = fx.sys->index_of(Vec{Rat(-1)});
    fx.sk.chain.sys = fx.sys.get();
    fx.sk.chain.levels = {make_subsystem(*fx.sys, {}), full_subsystem(*fx.sys)};
    fx.sk.x = Vec{Rat(0)};
    fx.sk.depths.r = {r0, r0};
    fx.sk.p = 5;
    fx.sk.validate();
    fx.atlas.sys = fx.sys.get();
    fx.atlas.x = fx.sk.x;
    for (int m = 0; m <= fold_max; ++m) fx.atlas.folds.push_back(Fold{down, Rat(m)});
    fx.atlas.box = Box{Vec{-box_radius}, Vec{box_radius}};
    fx.atlas.validate();
    return fx;
}

// three-step chain in C2: {±2e2} inside the long subsystem {±2e1, ±2e2}
inline Fixture c2_two_step(const bk::Rat& r0, const bk::Rat& r1, const bk::Rat& r2) {
    using namespace bk;
    Fixture fx;
    fx.sys = std::make_shared<RootSystem>(build_root_system(SystemLabel::B2C2));
    const RootSystem& sys = *fx.sys;
    int up = sys.index_of(Vec{Rat(0), Rat(2)});
    int down = sys.index_of(Vec{Rat(0), Rat(-2)});
    int right = sys.index_of(Vec{Rat(2), Rat(0)});
    int left = sys.index_of(Vec{Rat(-2), Rat(0)});
    fx.sk.chain.sys = fx.sys.get();
    fx.sk.chain.levels = {make_subsystem(sys, {up, down}),
                          make_subsystem(sys, {up, down, right, left}), full_subsystem(sys)};
    fx.sk.x = Vec{Rat(0), Rat(0)};
    fx.sk.depths.r = {r0, r1, r2};
    fx.sk.p = 5;
    fx.sk.validate();
    fx.atlas.sys = fx.sys.get();
    fx.atlas.x = fx.sk.x;
    fx.atlas.box = Box{Vec{Rat(-2), Rat(-2)}, Vec{Rat(2), Rat(2)}};
    fx.atlas.validate();
    return fx;
}

// degenerate chain: the full system is the only level (d = 0)
inline Fixture c2_full_level(const bk::Rat& r0) {
    using namespace bk;
    Fixture fx;
    fx.sys = std::make_shared<RootSystem>(build_root_system(SystemLabel::B2C2));
    fx.sk.chain.sys = fx.sys.get();
    fx.sk.chain.levels = {full_subsystem(*fx.sys)};
    fx.sk.x = Vec{Rat(0), Rat(0)};
    fx.sk.depths.r = {r0};
    fx.sk.p = 5;
    fx.sk.validate();
    fx.atlas.sys = fx.sys.get();
    fx.atlas.x = fx.sk.x;
    fx.atlas.box = Box{Vec{Rat(-2), Rat(-2)}, Vec{Rat(2), Rat(2)}};
    fx.atlas.validate();
    return fx;
}
