#pragma once

/**
 * @file json.hpp
 * @brief JSON serialization for reports and certificates.
 */

#include <symcong/evaluation.hpp>
#include <symcong/ideal.hpp>

#include <json.hpp>

namespace symcong {

/// Versioned report document:
/// {version, expr, n, p_min, p_max, results:[{p, pass, valuation?,
///  residue?}], skipped:[{p, reason}], summary:{tested, passed, failed,
///  skipped}}
inline nlohmann::json to_json(const CongruenceReport& r) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& pr : r.results) {
        nlohmann::json item{{"p", pr.p}, {"pass", pr.pass}};
        if (pr.valuation_infinite) item["valuation"] = "infinity";
        else if (pr.valuation) item["valuation"] = *pr.valuation;
        if (!pr.pass) item["residue"] = pr.residue.get_str();
        results.push_back(std::move(item));
    }
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& sk : r.skipped)
        skipped.push_back({{"p", sk.p}, {"reason", sk.reason}});
    return nlohmann::json{
        {"version", 1},
        {"expr", r.expr},
        {"n", r.n},
        {"p_min", r.p_min},
        {"p_max", r.p_max},
        {"results", std::move(results)},
        {"skipped", std::move(skipped)},
        {"summary",
         {{"tested", r.results.size()},
          {"passed", r.passed()},
          {"failed", r.failed()},
          {"skipped", r.skipped.size()}}},
    };
}

/// {expr, n, member, representation:{k: expr}, normal_form, conditional_note}
inline nlohmann::json to_json(const MembershipCertificate& cert, const std::string& expr) {
    nlohmann::json rep = nlohmann::json::object();
    for (const auto& [k, r] : cert.representation)
        rep[std::to_string(k)] = to_string(r);
    return nlohmann::json{
        {"version", 1},
        {"expr", expr},
        {"n", cert.n},
        {"member", cert.member},
        {"representation", std::move(rep)},
        {"normal_form", to_string(cert.normal_form)},
        {"conditional_note",
         cert.member
             ? "membership implies the congruence unconditionally"
             : "non-membership implies congruence failure only under the "
               "Bernoulli independence conjecture"},
    };
}

}  // namespace symcong
