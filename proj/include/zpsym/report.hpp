#pragma once

/**
 * Verification records: both sides of an identity plus the verdict.
 * pass is true exactly when lhs and rhs are structurally equal.
 */

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <variant>

#include "zpsym/rational.hpp"
#include "zpsym/series.hpp"

namespace zpsym {

struct verification_report {
    using side = std::variant<rational, truncated_series>;

    std::string identity;
    nlohmann::ordered_json params;
    side lhs;
    side rhs;
    bool pass = false;
};

inline verification_report make_report(std::string identity, nlohmann::ordered_json params,
                                       verification_report::side lhs,
                                       verification_report::side rhs) {
    verification_report r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.pass = lhs == rhs;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

inline nlohmann::ordered_json to_json(const verification_report::side& s) {
    if (std::holds_alternative<rational>(s))
        return std::get<rational>(s).to_string();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : std::get<truncated_series>(s).coefficients())
        coeffs.push_back(c.to_string());
    return coeffs;
}

inline nlohmann::ordered_json to_json(const verification_report& r) {
    return nlohmann::ordered_json{{"identity", r.identity},
                                  {"params", r.params},
                                  {"lhs", to_json(r.lhs)},
                                  {"rhs", to_json(r.rhs)},
                                  {"pass", r.pass}};
}

} // namespace zpsym
