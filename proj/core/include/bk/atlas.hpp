#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bk/datum.hpp"
#include "bk/region.hpp"

namespace bk {

// chart glued to the base apartment along { <root,p> + depth >= 0 }
struct Fold {
    int root = -1;
    Rat depth;
};

struct Atlas {
    const RootSystem* sys = nullptr;
    Vec x;                   // shared base point, contained in every chart
    std::vector<Fold> folds; // chart id k+1 is folds[k]; chart 0 is the base
    Box box;                 // all regions are clipped to this box

    int chart_count() const { return (int)folds.size() + 1; }
    const Fold& fold_of(int chart) const { return folds[chart - 1]; }
    void validate() const;
    // value of the fold wall functional <beta,p> + m at p
    Rat wall_value(int chart, const Vec& p) const;
    // reflection across the fold wall of a chart, with respect to the gram form
    Vec reflect(int chart, const Vec& p) const;
};

struct AtlasPoint {
    int chart = 0;
    Vec coords;

    bool operator==(const AtlasPoint& o) const { return chart == o.chart && coords == o.coords; }
};

// shared-half-space points are identified with the base chart
AtlasPoint canonical_point(const Atlas& atlas, const AtlasPoint& p);

struct NoCommonChart : std::runtime_error {
    NoCommonChart() : std::runtime_error("no chart contains both endpoints") {}
};
struct HorizonError : std::runtime_error {
    HorizonError() : std::runtime_error("target unreachable within one fold") {}
};

struct Segment {
    int chart = 0;
    Vec a;
    Vec b;
};

Segment geodesic(const Atlas& atlas, const AtlasPoint& p, const AtlasPoint& q);

std::optional<AtlasPoint> segment_meets(const Segment& seg, const Region& r);

struct RegionResult {
    Region region;
    bool taint = false; // some structure constant was not a unit: bound only
};

RegionResult fixed_region_root_element(int root, const Depth& n, long long p,
                                       const Atlas& atlas);

// fixed set of the level-i central torus filtration at depth t
Region fixed_region_torus(int level, const Depth& t, const DatumSkeleton& sk,
                          const Atlas& atlas);

// sk may be null only when the profile carries no center level
RegionResult fixed_region_profile(const FiltrationProfile& f, const DatumSkeleton* sk,
                                  const Atlas& atlas);

Region trace_subbuilding(int level, const DatumSkeleton& sk, const Atlas& atlas);

struct ProjectionResult {
    AtlasPoint foot;
    Rat sq_dist;
    bool unique = true;
    bool horizon = false; // part of the target was unreachable within one fold
};

ProjectionResult project_to_trace(const Atlas& atlas, const AtlasPoint& p, const Region& t);

// squared distance in the model (throws HorizonError across unrelated folds)
Rat sq_distance(const Atlas& atlas, const AtlasPoint& p, const AtlasPoint& q);

// everything in the box, per chart
Region whole_patch(const Atlas& atlas);

} // namespace bk
