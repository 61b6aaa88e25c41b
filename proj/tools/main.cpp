#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bk/oracle_check.hpp"
#include "bk/render.hpp"
#include "bk/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitHorizon = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bk::ConfigError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

// opt-in atlas growth: each configured fold gains n parallel charts further out
void extend_folds(bk::ConfigFile& cfg, int n) {
    std::vector<std::pair<bk::Vec, bk::Rat>> extra;
    for (const auto& [root, depth] : cfg.folds)
        for (int k = 1; k <= n; ++k) extra.push_back({root, depth + bk::Rat(k)});
    cfg.folds.insert(cfg.folds.end(), extra.begin(), extra.end());
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string piece =
            comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fixed-point regions and point classification on a building patch"};
    app.require_subcommand(1);

    int extend = 0;
    bool strict = false;
    app.add_option("--extend-folds", extend, "grow the atlas by n parallel charts per fold");
    app.add_flag("--strict", strict, "treat horizon/incompleteness as a failure (exit 3)");

    std::string cfg_path, out_path, layers_arg, t_arg;
    long long oracle_p = 5;
    bool ascii = false;

    auto* c_classify = app.add_subcommand("classify", "classify every query point");
    c_classify->add_option("config", cfg_path)->required();
    c_classify->add_option("--out", out_path);

    auto* c_render = app.add_subcommand("render", "render region layers");
    c_render->add_option("config", cfg_path)->required();
    c_render->add_option("--layers", layers_arg);
    c_render->add_option("--out", out_path);
    c_render->add_flag("--ascii", ascii);

    auto* c_regions = app.add_subcommand("regions", "dump a theta layer's polyhedra");
    c_regions->add_option("config", cfg_path)->required();
    c_regions->add_option("--t", t_arg)->required();
    c_regions->add_option("--out", out_path);

    auto* c_oracle = app.add_subcommand("oracle-check", "rank-1 tree cross-check");
    c_oracle->add_option("config", cfg_path)->required();
    c_oracle->add_option("--p", oracle_p);

    CLI11_PARSE(app, argc, argv);

    try {
        bk::ConfigFile cfg = bk::parse_config(read_file(cfg_path));
        if (extend > 0) extend_folds(cfg, extend);

        if (c_classify->parsed()) {
            std::string report = bk::run_classify(cfg);
            if (strict && report.find("horizon") != std::string::npos) {
                write_out(out_path, report);
                return kExitHorizon;
            }
            write_out(out_path, report);
            return kExitOk;
        }
        if (c_render->parsed()) {
            if (ascii) {
                write_out(out_path, bk::render_ascii(cfg));
            } else {
                std::vector<std::string> layers = split_csv(layers_arg);
                if (layers.empty()) layers = {"walls"};
                write_out(out_path, bk::render_svg(cfg, layers));
            }
            return kExitOk;
        }
        if (c_regions->parsed()) {
            auto t = bk::Rat::parse(t_arg);
            if (!t) throw bk::ConfigError(0, "--t expects a rational like 3/2");
            bk::BuiltConfig built = bk::build_config(cfg);
            bk::Region theta = bk::theta_region(*t, built.skeleton, built.atlas);
            nlohmann::ordered_json doc;
            doc["schema"] = "regions/1";
            doc["t"] = t->str();
            nlohmann::ordered_json charts = nlohmann::ordered_json::array();
            const size_t dim = cfg.box.lo.size();
            for (const auto& [chart, polys] : theta.charts) {
                nlohmann::ordered_json cj;
                cj["chart"] = chart;
                nlohmann::ordered_json pj = nlohmann::ordered_json::array();
                for (const auto& poly : polys) {
                    if (poly.empty(dim)) continue;
                    nlohmann::ordered_json fj = nlohmann::ordered_json::array();
                    for (const auto& h : poly.faces) {
                        nlohmann::ordered_json f;
                        nlohmann::ordered_json normal = nlohmann::ordered_json::array();
                        for (const auto& c : h.normal) normal.push_back(c.str());
                        f["normal"] = normal;
                        f["offset"] = h.offset.str();
                        f["strict"] = h.strict;
                        fj.push_back(std::move(f));
                    }
                    pj.push_back(std::move(fj));
                }
                cj["pieces"] = std::move(pj);
                charts.push_back(std::move(cj));
            }
            doc["charts"] = std::move(charts);
            write_out(out_path, doc.dump(2) + "\n");
            return kExitOk;
        }
        if (c_oracle->parsed()) {
            bk::BuiltConfig built = bk::build_config(cfg);
            bk::TreeModel model;
            model.p = oracle_p;
            std::vector<bk::Rat> ts = {bk::Rat(0), bk::Rat(1, 2), bk::Rat(1), bk::Rat(3, 2),
                                       bk::Rat(2)};
            auto bad = bk::oracle_compare_rank1(built.skeleton, built.atlas, model, ts);
            if (bad.empty()) {
                std::cout << "oracle-check: all vertices agree\n";
                return kExitOk;
            }
            for (const auto& m : bad)
                std::cerr << "mismatch chart " << m.chart << " coord " << m.coord.str() << ": "
                          << m.what << "\n";
            return 1;
        }
    } catch (const bk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const bk::HorizonError& e) {
        std::cerr << "horizon: " << e.what() << "\n";
        return strict ? kExitHorizon : kExitOk;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
