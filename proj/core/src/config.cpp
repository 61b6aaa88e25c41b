#include "bk/config.hpp"

#include <sstream>

namespace bk {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Rat parse_rat(const std::string& tok, int line) {
    auto r = Rat::parse(tok);
    if (!r) throw ConfigError(line, "expected a rational, got '" + tok + "'");
    return *r;
}

Vec parse_vec(const std::vector<std::string>& toks, size_t from, size_t to, int line) {
    Vec v;
    for (size_t i = from; i < to; ++i) v.push_back(parse_rat(toks[i], line));
    return v;
}

// "(a,b)" or "(a)" -> coordinate vector
Vec parse_tuple(const std::string& tok, int line) {
    if (tok.size() < 3 || tok.front() != '(' || tok.back() != ')')
        throw ConfigError(line, "expected a coordinate tuple like (1,0), got '" + tok + "'");
    Vec v;
    std::string body = tok.substr(1, tok.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string piece = comma == std::string::npos ? body.substr(pos)
                                                       : body.substr(pos, comma - pos);
        v.push_back(parse_rat(trim(piece), line));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

std::string tuple_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

std::string vec_str(const Vec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].str();
    }
    return s;
}

} // namespace

ConfigFile parse_config(const std::string& text) {
    ConfigFile cfg;
    cfg.box.lo.clear();
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    bool saw_label = false, saw_x = false, saw_box = false, saw_r = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError(line, "unterminated section header");
            section = s.substr(1, s.size() - 2);
            if (section != "system" && section != "datum" && section != "atlas" &&
                section != "complementary" && section != "query" && section != "render")
                throw ConfigError(line, "unknown section '" + section + "'");
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        auto toks = split_ws(val);
        if (section == "system") {
            if (key == "label") {
                auto lab = parse_system_label(val);
                if (!lab) throw ConfigError(line, "unsupported system label '" + val + "'");
                cfg.label = *lab;
                saw_label = true;
            } else if (key == "p") {
                cfg.p = parse_rat(val, line).num();
                if (cfg.p < 2) throw ConfigError(line, "p must be at least 2");
            } else {
                throw ConfigError(line, "unknown key '" + key + "' in [system]");
            }
        } else if (section == "datum") {
            if (key.rfind("level", 0) == 0) {
                size_t idx = std::stoul(key.substr(5));
                if (cfg.levels.size() <= idx) cfg.levels.resize(idx + 1);
                std::vector<Vec> roots;
                for (const auto& t : toks) roots.push_back(parse_tuple(t, line));
                cfg.levels[idx] = roots;
            } else if (key == "r") {
                for (const auto& t : toks) cfg.r.push_back(parse_rat(t, line));
                saw_r = true;
            } else if (key == "x") {
                cfg.x = parse_vec(toks, 0, toks.size(), line);
                saw_x = true;
            } else if (key == "split_center") {
                for (const auto& t : toks) {
                    if (t != "0" && t != "1")
                        throw ConfigError(line, "split_center entries must be 0 or 1");
                    cfg.split_center.push_back(t == "1");
                }
            } else {
                throw ConfigError(line, "unknown key '" + key + "' in [datum]");
            }
        } else if (section == "atlas") {
            if (key == "fold") {
                if (toks.size() != 2) throw ConfigError(line, "fold needs: (root tuple) depth");
                cfg.folds.push_back({parse_tuple(toks[0], line), parse_rat(toks[1], line)});
            } else if (key == "box") {
                if (toks.size() % 2 != 0 || toks.empty())
                    throw ConfigError(line, "box needs: lo... hi...");
                size_t half = toks.size() / 2;
                cfg.box.lo = parse_vec(toks, 0, half, line);
                cfg.box.hi = parse_vec(toks, half, toks.size(), line);
                saw_box = true;
            } else {
                throw ConfigError(line, "unknown key '" + key + "' in [atlas]");
            }
        } else if (section == "complementary") {
            if (key == "ray") cfg.rays.push_back(parse_vec(toks, 0, toks.size(), line));
            else throw ConfigError(line, "unknown key '" + key + "' in [complementary]");
        } else if (section == "query") {
            if (key == "point") {
                AtlasPoint q;
                size_t from = 0;
                if (!toks.empty() && toks[0].rfind("chart", 0) == 0) {
                    q.chart = std::stoi(toks[0].substr(5));
                    from = 1;
                }
                q.coords = parse_vec(toks, from, toks.size(), line);
                cfg.queries.push_back(q);
            } else if (key == "lattice") {
                if (toks.size() < 3 || toks.size() % 2 == 0)
                    throw ConfigError(line, "lattice needs: lo... hi... spacing");
                size_t half = (toks.size() - 1) / 2;
                LatticeSpec spec;
                spec.lo = parse_vec(toks, 0, half, line);
                spec.hi = parse_vec(toks, half, toks.size() - 1, line);
                spec.spacing = parse_rat(toks.back(), line);
                if (spec.spacing.sign() <= 0)
                    throw ConfigError(line, "lattice spacing must be positive");
                cfg.lattice = spec;
            } else {
                throw ConfigError(line, "unknown key '" + key + "' in [query]");
            }
        } else if (section == "render") {
            if (key == "scale") {
                cfg.render_scale = parse_rat(val, line).num();
                if (cfg.render_scale <= 0) throw ConfigError(line, "scale must be positive");
            } else if (key == "layers") {
                cfg.layers = toks;
            } else {
                throw ConfigError(line, "unknown key '" + key + "' in [render]");
            }
        } else {
            throw ConfigError(line, "key outside any section");
        }
    }
    if (!saw_label) throw ConfigError(0, "missing [system] label");
    if (!saw_x) throw ConfigError(0, "missing [datum] x");
    if (!saw_r) throw ConfigError(0, "missing [datum] r");
    if (!saw_box) throw ConfigError(0, "missing [atlas] box");
    return cfg;
}

std::string serialize_config(const ConfigFile& cfg) {
    std::ostringstream out;
    out << "[system]\n";
    out << "label = " << system_label_str(cfg.label) << "\n";
    out << "p = " << cfg.p << "\n\n";
    out << "[datum]\n";
    for (size_t i = 0; i < cfg.levels.size(); ++i) {
        out << "level" << i << " =";
        for (const auto& r : cfg.levels[i]) out << " " << tuple_str(r);
        out << "\n";
    }
    out << "r =";
    for (const auto& v : cfg.r) out << " " << v.str();
    out << "\n";
    out << "x = " << vec_str(cfg.x) << "\n";
    if (!cfg.split_center.empty()) {
        out << "split_center =";
        for (bool b : cfg.split_center) out << " " << (b ? 1 : 0);
        out << "\n";
    }
    out << "\n[atlas]\n";
    for (const auto& [root, depth] : cfg.folds)
        out << "fold = " << tuple_str(root) << " " << depth.str() << "\n";
    out << "box = " << vec_str(cfg.box.lo) << " " << vec_str(cfg.box.hi) << "\n";
    if (!cfg.rays.empty()) {
        out << "\n[complementary]\n";
        for (const auto& r : cfg.rays) out << "ray = " << vec_str(r) << "\n";
    }
    if (!cfg.queries.empty() || cfg.lattice) {
        out << "\n[query]\n";
        for (const auto& q : cfg.queries) {
            out << "point = ";
            if (q.chart != 0) out << "chart" << q.chart << " ";
            out << vec_str(q.coords) << "\n";
        }
        if (cfg.lattice)
            out << "lattice = " << vec_str(cfg.lattice->lo) << " " << vec_str(cfg.lattice->hi)
                << " " << cfg.lattice->spacing.str() << "\n";
    }
    out << "\n[render]\n";
    out << "scale = " << cfg.render_scale << "\n";
    if (!cfg.layers.empty()) {
        out << "layers =";
        for (const auto& l : cfg.layers) out << " " << l;
        out << "\n";
    }
    return out.str();
}

BuiltConfig build_config(const ConfigFile& cfg) {
    BuiltConfig built;
    built.sys = std::make_shared<RootSystem>(build_root_system(cfg.label));
    const RootSystem& sys = *built.sys;

    auto resolve = [&](const Vec& coords) -> int {
        int idx = sys.index_of(coords);
        if (idx < 0) throw ConfigError(0, "not a root of the system: " + tuple_str(coords));
        return idx;
    };

    LeviChain chain;
    chain.sys = built.sys.get();
    for (const auto& level : cfg.levels) {
        std::vector<int> members;
        for (const auto& r : level) members.push_back(resolve(r));
        chain.levels.push_back(make_subsystem(sys, members));
    }
    chain.levels.push_back(full_subsystem(sys));
    if (!cfg.split_center.empty()) {
        chain.split_center = cfg.split_center;
        chain.split_center.resize(chain.levels.size(), false);
    }

    DatumSkeleton sk;
    sk.chain = std::move(chain);
    sk.x = cfg.x;
    sk.depths.r = cfg.r;
    sk.p = cfg.p;
    try {
        sk.validate();
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }

    Atlas atlas;
    atlas.sys = built.sys.get();
    atlas.x = cfg.x;
    atlas.box = cfg.box;
    for (const auto& [root, depth] : cfg.folds) atlas.folds.push_back(Fold{resolve(root), depth});
    try {
        atlas.validate();
    } catch (const std::exception& e) {
        throw ConfigError(0, e.what());
    }

    built.skeleton = std::move(sk);
    built.atlas = std::move(atlas);
    for (const auto& r : cfg.rays) built.rays.push_back(ComplementaryRay{r});
    return built;
}

std::vector<AtlasPoint> expand_queries(const ConfigFile& cfg) {
    std::vector<AtlasPoint> out = cfg.queries;
    if (cfg.lattice) {
        const LatticeSpec& spec = *cfg.lattice;
        // row-major over dimensions, last dimension fastest
        std::vector<Rat> cur = spec.lo;
        const size_t dim = spec.lo.size();
        while (true) {
            out.push_back(AtlasPoint{0, cur});
            size_t k = dim;
            while (k > 0) {
                --k;
                cur[k] += spec.spacing;
                if (cur[k] <= spec.hi[k]) break;
                cur[k] = spec.lo[k];
                if (k == 0) return out;
            }
        }
    }
    return out;
}

} // namespace bk
