#pragma once

// JSON / CSV serialization of models, reports, verdicts, and Hopf roots.

#include "biharm/bitension.hpp"
#include "biharm/classify.hpp"
#include "biharm/hopf.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>

namespace biharm {

using nlohmann::json;

inline json to_json(const SpaceFormModel& m) {
    json j;
    switch (m.kind()) {
        case ModelKind::UnitSphere: j["kind"] = "unit-sphere"; break;
        case ModelKind::DeformedSphere: j["kind"] = "deformed-sphere"; j["a"] = m.a(); break;
        case ModelKind::FlatSasakian: j["kind"] = "flat"; break;
    }
    j["n"] = m.n();
    j["c"] = m.c();
    return j;
}

inline json to_json(const BiharmonicReport& r) {
    json j;
    j["tension_norm_max"] = r.tension_norm_max;
    j["bitension_direct_max"] = r.bitension_direct_max;
    j["bitension_frenet_max"] = r.bitension_frenet_max;
    j["legendre_residual"] = r.legendre_res;
    j["tolerance"] = r.tolerance;
    j["verdict"] = to_string(r.verdict);
    return j;
}

inline json to_json(const ClassificationVerdict& v) {
    json j;
    j["case"] = to_string(v.case_tag);
    j["verdict"] = to_string(v.verdict);
    if (v.required_ambient_n) j["required_ambient_n"] = *v.required_ambient_n;
    if (v.case_tag == CaseTag::IV) j["alpha0"] = v.alpha0;
    if (!v.note.empty()) j["note"] = v.note;
    j["all_constraints_ok"] = v.all_ok();
    json cs = json::array();
    for (const auto& c : v.constraints) {
        cs.push_back({{"name", c.name},
                      {"target", c.target},
                      {"measured", c.measured},
                      {"residual", c.residual},
                      {"ok", c.ok}});
    }
    j["constraints"] = cs;
    return j;
}

inline json to_json(const HopfRoot& r) {
    return json{{"tan2_u", r.tan2_u},
                {"u", r.u},
                {"verdict", to_string(r.verdict)},
                {"mean_curvature", r.mean_curvature},
                {"cmc_residual", r.cmc_residual}};
}

inline json to_json(const std::vector<HopfRoot>& roots) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(to_json(r));
    return arr;
}

namespace detail {
inline std::string fmt17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
}  // namespace detail

// one row per retained sample: s, ||tau||, ||tau2 direct||, ||tau2 frenet||
inline void write_report_csv(std::ostream& os, const BiharmonicReport& r) {
    os << "s,tension_norm,bitension_direct_norm,bitension_frenet_norm\n";
    for (const auto& row : r.per_sample) {
        os << detail::fmt17(row.s) << ',' << detail::fmt17(row.tension) << ','
           << detail::fmt17(row.bit_direct) << ',' << detail::fmt17(row.bit_frenet) << '\n';
    }
}

inline void write_roots_csv(std::ostream& os, const std::vector<HopfRoot>& roots) {
    os << "tan2_u,u,verdict,mean_curvature,cmc_residual\n";
    for (const auto& r : roots) {
        os << detail::fmt17(r.tan2_u) << ',' << detail::fmt17(r.u) << ',' << to_string(r.verdict)
           << ',' << detail::fmt17(r.mean_curvature) << ',' << detail::fmt17(r.cmc_residual)
           << '\n';
    }
}

}  // namespace biharm
