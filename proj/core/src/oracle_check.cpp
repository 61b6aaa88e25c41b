#include "bk/oracle_check.hpp"

#include <algorithm>

namespace bk {

namespace {

struct DictEntry {
    int chart;
    Rat coord;
    TreeVertex vertex;
};

Depth depth_at(const Rat& t) { return Depth::at(t); }

} // namespace

std::vector<OracleMismatch> oracle_compare_rank1(const DatumSkeleton& sk, const Atlas& atlas,
                                                 const TreeModel& model,
                                                 const std::vector<Rat>& torus_values) {
    std::vector<OracleMismatch> bad;
    const RootSystem& sys = *atlas.sys;
    if (sys.rank != 1) {
        bad.push_back({0, Rat(0), "oracle requires a rank-1 system"});
        return bad;
    }
    if (!is_zero(atlas.x)) {
        bad.push_back({0, Rat(0), "oracle requires the base point at the origin"});
        return bad;
    }
    const int alpha = sys.index_of(Vec{Rat(1)});
    const int neg_alpha = sys.index_of(Vec{Rat(-1)});

    // vertex dictionary: atlas points <-> tree lattice classes
    std::vector<DictEntry> dict;
    TreeVertex base = tree_base();
    for (long long k = -2 * model.radius; k <= 2 * model.radius; ++k) {
        Rat c(k, 2);
        if (c < atlas.box.lo[0] || c > atlas.box.hi[0]) continue;
        TreeVertex v = apartment_vertex(c, model.p);
        if (tree_distance(base, v, model.p) > model.radius) continue;
        dict.push_back({0, c, v});
    }
    for (int chart = 1; chart < atlas.chart_count(); ++chart) {
        const Fold& f = atlas.fold_of(chart);
        if (f.root != neg_alpha || !f.depth.is_integer() || f.depth.sign() < 0) {
            bad.push_back({chart, Rat(0), "oracle folds must be (-1) at integer depth"});
            return bad;
        }
        int m = (int)f.depth.num();
        for (long long k = -2 * model.radius; k <= 2 * model.radius; ++k) {
            Rat c(k, 2);
            if (c < atlas.box.lo[0] || c > atlas.box.hi[0]) continue;
            if (atlas.wall_value(chart, Vec{c}).sign() >= 0) continue; // shared: chart 0 covers
            TreeVertex v = folded_vertex(model, m, c);
            if (tree_distance(base, v, model.p) > model.radius) continue;
            dict.push_back({chart, c, v});
        }
    }

    auto check_region = [&](const Region& region, const TreeElement& g, const std::string& tag) {
        for (const DictEntry& e : dict) {
            bool atlas_fixed = region.contains(e.chart, Vec{e.coord});
            bool tree_fixed = fixes_vertex(model, g, e.vertex);
            if (atlas_fixed != tree_fixed)
                bad.push_back({e.chart, e.coord,
                               tag + ": atlas " + (atlas_fixed ? "fixes" : "moves") +
                                   ", tree " + (tree_fixed ? "fixes" : "moves")});
        }
    };

    const bool toral = sk.chain.levels.front().members.empty();

    for (const Rat& t : torus_values) {
        Depth dt = depth_at(t);
        int eff = (int)dt.eff_int();

        // split torus element of depth t; unrepresentable depths (small p) are skipped
        try {
            FiltrationProfile f;
            f.sys = &sys;
            f.base = atlas.x;
            f.torus_depth = dt;
            f.root_depths.assign(sys.roots.size(), Depth::infinite());
            f.center_level = -1;
            RegionResult rr = fixed_region_profile(f, nullptr, atlas);
            check_region(rr.region, tree_torus(model, eff), "split torus t=" + t.str());
        } catch (const std::invalid_argument&) {
        }

        // anisotropic center of a toral datum
        if (toral) {
            try {
                Region r = fixed_region_torus(0, dt, sk, atlas);
                check_region(r, tree_anisotropic(model, eff), "anisotropic t=" + t.str());
            } catch (const std::invalid_argument&) {
            }
        }

        // H_{t+} for a toral d = 1 datum: generated by the depth-jump elements
        if (toral && sk.d() == 1) {
            FiltrationProfile h = filtered_profile(ProfileBase::H, Depth::just_after(t), sk);
            RegionResult rr = fixed_region_profile(h, &sk, atlas);
            std::vector<TreeElement> gens;
            gens.push_back(tree_anisotropic(model, (int)h.torus_depth.eff_int()));
            long long n_up = min_offset(sys, alpha, atlas.x, h.root_depths[alpha]);
            long long n_dn = min_offset(sys, neg_alpha, atlas.x, h.root_depths[neg_alpha]);
            gens.push_back(tree_unipotent_upper(model, (int)n_up));
            gens.push_back(tree_unipotent_lower(model, (int)n_dn));
            for (const DictEntry& e : dict) {
                bool atlas_fixed = rr.region.contains(e.chart, Vec{e.coord});
                bool tree_fixed = true;
                for (const TreeElement& g : gens)
                    if (!fixes_vertex(model, g, e.vertex)) { tree_fixed = false; break; }
                if (atlas_fixed != tree_fixed)
                    bad.push_back({e.chart, e.coord,
                                   "H t=" + t.str() + ": atlas " +
                                       (atlas_fixed ? "fixes" : "moves") + ", tree " +
                                       (tree_fixed ? "fixes" : "moves")});
            }
        }
    }

    // projection feet from folded vertices onto the base apartment line
    Region line;
    line.add(0, poly_box(atlas.box.lo, atlas.box.hi));
    for (const DictEntry& e : dict) {
        if (e.chart == 0) continue;
        ProjectionResult pr = project_to_trace(atlas, AtlasPoint{e.chart, Vec{e.coord}}, line);
        // tree side: nearest base-line vertex
        long long best = -1;
        Rat best_c;
        for (const DictEntry& b : dict) {
            if (b.chart != 0) continue;
            long long d = tree_distance(e.vertex, b.vertex, model.p);
            if (best < 0 || d < best) { best = d; best_c = b.coord; }
        }
        AtlasPoint foot = canonical_point(atlas, pr.foot);
        if (foot.chart != 0 || foot.coords[0] != best_c)
            bad.push_back({e.chart, e.coord,
                           "projection foot: atlas " + foot.coords[0].str() + ", tree " +
                               best_c.str()});
    }

    return bad;
}

} // namespace bk
