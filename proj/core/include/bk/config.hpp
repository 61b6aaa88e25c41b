#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bk/atlas.hpp"
#include "bk/criteria.hpp"
#include "bk/datum.hpp"

namespace bk {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct LatticeSpec {
    Vec lo;
    Vec hi;
    Rat spacing;
};

struct ConfigFile {
    SystemLabel label = SystemLabel::B2C2;
    long long p = 5;
    std::vector<std::vector<Vec>> levels; // levels 0..d-1 by root coordinates
    std::vector<bool> split_center;       // optional; empty = all anisotropic
    std::vector<Rat> r;
    Vec x;
    std::vector<std::pair<Vec, Rat>> folds; // (root coords, depth)
    Box box;
    std::vector<Vec> rays; // complementary trace directions
    std::vector<AtlasPoint> queries;
    std::optional<LatticeSpec> lattice;
    long long render_scale = 80;
    std::vector<std::string> layers;
};

ConfigFile parse_config(const std::string& text);
std::string serialize_config(const ConfigFile& cfg);

struct BuiltConfig {
    std::shared_ptr<RootSystem> sys; // stable address: skeleton/atlas point at it
    DatumSkeleton skeleton;
    Atlas atlas;
    std::vector<ComplementaryRay> rays;
};

// resolves root coordinates to indices, validates every downstream invariant;
// throws ConfigError (line 0) naming the violated constraint
BuiltConfig build_config(const ConfigFile& cfg);

// query list expanded: explicit points first, then lattice points row-major
std::vector<AtlasPoint> expand_queries(const ConfigFile& cfg);

} // namespace bk
