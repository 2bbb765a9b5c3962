#pragma once

#include "polyrec/verify.hpp"

#include <json.hpp>

namespace polyrec {

inline nlohmann::json to_json(const RecurrenceParams& p) {
    return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
}

inline double as_double(const Real& r) { return r.convert_to<double>(); }

inline nlohmann::json to_json(const Complex& z) {
    return {{"re", as_double(z.re)}, {"im", as_double(z.im)}};
}

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json details = nlohmann::json::array();
    for (const DetailRecord& d : rep.details) {
        nlohmann::json rec = {{"n", d.n}, {"passed", d.passed}, {"margin", as_double(d.margin)}};
        if (!d.note.empty()) rec["note"] = d.note;
        details.push_back(rec);
    }
    return {{"claim", rep.claim},
            {"params", to_json(rep.params)},
            {"horizon", rep.horizon},
            {"passed", rep.passed},
            {"worst_margin", as_double(rep.worst_margin)},
            {"details", details}};
}

inline nlohmann::json to_json(const CriticalScalars& s) {
    nlohmann::json j = {{"x_A", as_double(s.x_A)},
                        {"x_B", as_double(s.x_B)},
                        {"B_at_xA", as_double(s.B_at_xA)},
                        {"delta_delta", as_double(s.delta_delta)},
                        {"x_delta_minus", to_json(s.x_delta_minus)},
                        {"x_delta_plus", to_json(s.x_delta_plus)},
                        {"delta_g", as_double(s.delta_g)},
                        {"F", as_double(s.F)}};
    auto opt = [](const std::optional<Real>& v) {
        return v ? nlohmann::json(as_double(*v)) : nlohmann::json(nullptr);
    };
    j["x_g_minus"] = opt(s.x_g_minus);
    j["x_g_plus"] = opt(s.x_g_plus);
    j["x_h"] = opt(s.x_h);
    j["u"] = opt(s.u);
    j["v"] = opt(s.v);
    return j;
}

inline nlohmann::json to_json(const LimitSet& ls) {
    nlohmann::json j;
    j["kind"] = limit_kind_name(ls.kind);
    j["circle"] = {{"center", as_double(ls.circle_center)},
                   {"radius", as_double(ls.circle_radius)}};
    if (ls.kind == LimitKind::Arc) {
        j["arc"] = {{"endpoints", {to_json(ls.arc_endpoint_minus), to_json(ls.arc_endpoint_plus)}},
                    {"through", as_double(ls.arc_through)}};
    }
    if (ls.kind == LimitKind::Interval || ls.kind == LimitKind::Lollipop) {
        j["interval"] = {as_double(ls.interval_lo), as_double(ls.interval_hi)};
    }
    nlohmann::json iso = nlohmann::json::array();
    for (const Complex& z : ls.isolated) iso.push_back(to_json(z));
    j["isolated"] = iso;
    j["scalars"] = to_json(ls.scalars);
    return j;
}

inline nlohmann::json to_json(const ScanSummary& sum) {
    nlohmann::json pts = nlohmann::json::array();
    for (const ScanPoint& pt : sum.points) {
        const char* outcome = nullptr;
        switch (pt.outcome) {
            case ScanOutcome::CriterionTruePass: outcome = "criterion-true-pass"; break;
            case ScanOutcome::CriterionTrueFail: outcome = "criterion-true-fail"; break;
            case ScanOutcome::FailureFound: outcome = "failure-found"; break;
            case ScanOutcome::Inconclusive: outcome = "inconclusive"; break;
        }
        pts.push_back({{"params", to_json(pt.params)},
                       {"criterion", pt.criterion},
                       {"outcome", outcome},
                       {"first_failure_n", pt.first_failure_n}});
    }
    return {{"horizon", sum.horizon},
            {"false_negatives", sum.false_negatives},
            {"inconclusive", sum.inconclusive},
            {"points", pts}};
}

}  // namespace polyrec
