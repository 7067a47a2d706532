#include "errcode/report_json.hpp"

namespace errcode {

nlohmann::json to_json(const VerificationReport& r, CodeKind kind) {
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["valid"] = r.valid;
    auto& dom = j["domination_failures"] = nlohmann::json::array();
    for (const auto& f : r.domination_failures) dom.push_back({{"vertex", f.v}, {"count", f.count}, {"required", f.required}});
    auto& dist = j["distinguishing_failures"] = nlohmann::json::array();
    for (const auto& f : r.distinguishing_failures)
        dist.push_back({{"u", f.u},
                        {"v", f.v},
                        {"symmetric_difference", f.symmetric},
                        {"u_only", f.u_only},
                        {"v_only", f.v_only},
                        {"required", f.required}});
    return j;
}

nlohmann::json to_json(const ExistenceReport& r) {
    nlohmann::json j;
    j["exists"] = r.exists;
    j["criterion"] = r.criterion;
    auto& failed = j["failed_properties"] = nlohmann::json::array();
    for (auto p : r.failed_properties) failed.push_back(to_string(p));
    auto& w = j["witnesses"] = nlohmann::json::object();
    if (!r.twin_witnesses.empty()) {
        auto& a = w["twins"] = nlohmann::json::array();
        for (const auto& t : r.twin_witnesses)
            a.push_back({{"u", t.u}, {"v", t.v}, {"kind", t.kind == TwinKind::open ? "open" : "closed"}});
    }
    if (!r.low_degree_witnesses.empty()) w["low_degree"] = r.low_degree_witnesses;
    if (!r.adjacent_degree2_witnesses.empty()) w["adjacent_degree2"] = r.adjacent_degree2_witnesses;
    if (!r.triangle_witnesses.empty()) {
        auto& a = w["triangles"] = nlohmann::json::array();
        for (const auto& t : r.triangle_witnesses)
            a.push_back({{"triangle", {t.triangle.a, t.triangle.b, t.triangle.c}},
                         {"u", t.u},
                         {"v", t.v},
                         {"symmetric_difference", t.symmetric}});
    }
    return j;
}

nlohmann::json to_json(const std::optional<OptimalCode>& c) {
    if (!c) return {{"exists", false}};
    return {{"exists", true},
            {"size", c->size},
            {"detectors", c->detectors},
            {"method", to_string(c->method)},
            {"nodes_explored", c->nodes_explored}};
}

nlohmann::json to_json(const RoundtripReport& r) {
    nlohmann::json j{{"sat", r.sat}, {"K", r.K}, {"agrees", r.agrees}};
    j["min_size"] = r.min_size ? nlohmann::json(*r.min_size) : nlohmann::json(nullptr);
    j["decoded_assignment"] = r.decoded ? nlohmann::json(*r.decoded) : nlohmann::json(nullptr);
    return j;
}

}  // namespace errcode
