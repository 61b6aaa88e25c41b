#include "bk/report.hpp"

#include <json.hpp>

namespace bk {

namespace {

nlohmann::ordered_json vec_json(const Vec& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

} // namespace

std::string run_classify(const ConfigFile& cfg) {
    BuiltConfig built = build_config(cfg);
    nlohmann::ordered_json doc;
    doc["schema"] = "report/1";
    doc["system"] = system_label_str(cfg.label);
    doc["p"] = cfg.p;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const AtlasPoint& q : expand_queries(cfg)) {
        Verdict v = classify(q, built.skeleton, built.atlas, built.rays);
        nlohmann::ordered_json rec;
        rec["chart"] = q.chart;
        rec["coords"] = vec_json(q.coords);
        rec["kind"] = verdict_kind_str(v.kind);
        if (v.parabolic_witness) rec["parabolic_witness"] = vec_json(*v.parabolic_witness);
        if (v.theta_witness) {
            rec["theta_t"] = v.theta_witness->first.str();
            rec["theta_point_chart"] = v.theta_witness->second.chart;
            rec["theta_point"] = vec_json(v.theta_witness->second.coords);
        }
        rec["annotations"] = v.annotations;
        records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

} // namespace bk
