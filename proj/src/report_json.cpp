#include "tcore/report_json.hpp"

#include <stdexcept>

namespace tcore::io {

using nlohmann::json;

namespace {

std::int64_t read_int(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument("missing field '" + key + "'");
    }
    const json& v = j.at(key);
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t used = 0;
        long long out = 0;
        try {
            out = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw std::invalid_argument("field '" + key + "' is not a decimal integer: '" + s + "'");
        }
        return out;
    }
    throw std::invalid_argument("field '" + key + "' must be an integer");
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(std::to_string(*v)) : json(nullptr);
}

template <class T>
std::optional<T> read_opt(const json& j, const std::string& key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return static_cast<T>(read_int(j, key));
}

json check_json(const rs::CoefficientCheck& c) {
    return {{"n", std::to_string(c.n)}, {"residue", std::to_string(c.residue)}, {"t_prime", std::to_string(c.t_prime)}};
}

rs::CoefficientCheck check_from(const json& j) {
    return {read_int(j, "t_prime"), read_int(j, "n"), static_cast<std::uint64_t>(std::stoull(j.at("residue").get<std::string>()))};
}

} // namespace

rs::CongruenceClaim claim_from_json(const json& j) {
    return {read_int(j, "p"), read_int(j, "m"), read_int(j, "t"), read_int(j, "u")};
}

json to_json(const rs::CongruenceClaim& c) {
    return {{"m", std::to_string(c.m)}, {"p", std::to_string(c.p)}, {"t", std::to_string(c.t)}, {"u", std::to_string(c.u)}};
}

json to_json(const rs::VerificationReport& r) {
    json out;
    out["claim"] = to_json(r.claim);
    out["kappa"] = opt(r.kappa);
    out["p_hat"] = opt(r.p_hat);
    out["A_t"] = opt(r.A_t);
    out["eps2"] = opt(r.eps2);
    out["epsp"] = opt(r.epsp);
    out["level"] = opt(r.level);
    json pset = json::array();
    for (auto t : r.P_set) {
        pset.push_back(std::to_string(t));
    }
    out["P_set"] = pset;
    out["nu"] = r.nu ? json(to_string(*r.nu)) : json(nullptr);
    out["bound"] = opt(r.bound);
    out["theorem_bound"] = opt(r.theorem_bound);
    out["closed_form_bound"] = opt(r.closed_form_bound);
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(check_json(c));
    }
    out["checks"] = checks;
    out["verdict"] = rs::to_string(r.verdict);
    out["witness"] = r.witness ? check_json(*r.witness) : json(nullptr);
    out["reason"] = r.reason;
    return out;
}

rs::VerificationReport report_from_json(const json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("report must be a JSON object");
    }
    rs::VerificationReport r;
    r.claim = claim_from_json(j.at("claim"));
    r.kappa = read_opt<std::int64_t>(j, "kappa");
    r.p_hat = read_opt<std::int64_t>(j, "p_hat");
    r.A_t = read_opt<std::int64_t>(j, "A_t");
    r.eps2 = read_opt<int>(j, "eps2");
    r.epsp = read_opt<int>(j, "epsp");
    r.level = read_opt<std::int64_t>(j, "level");
    for (const auto& t : j.at("P_set")) {
        r.P_set.push_back(std::stoll(t.get<std::string>()));
    }
    if (!j.at("nu").is_null()) {
        r.nu = parse_rational(j.at("nu").get<std::string>());
    }
    r.bound = read_opt<std::int64_t>(j, "bound");
    r.theorem_bound = read_opt<std::int64_t>(j, "theorem_bound");
    r.closed_form_bound = read_opt<std::int64_t>(j, "closed_form_bound");
    for (const auto& c : j.at("checks")) {
        r.checks.push_back(check_from(c));
    }
    r.verdict = rs::parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness").is_null()) {
        r.witness = check_from(j.at("witness"));
    }
    r.reason = j.value("reason", "");
    return r;
}

json to_json(const eta::CuspReport& r) {
    json orders = json::object();
    for (const auto& [d, order] : r.cusp_orders) {
        orders[std::to_string(d)] = to_string(order);
    }
    return {{"conditions_24", {{"delta_sum", r.conditions_24.delta_sum}, {"level_sum", r.conditions_24.level_sum}}},
            {"cusp_orders", orders},
            {"holomorphic", r.holomorphic},
            {"integral_weight", r.integral_weight},
            {"weight", to_string(r.weight)}};
}

json to_json(const density::DensityTable& table) {
    json rows = json::array();
    for (std::size_t i = 0; i < table.checkpoints.size(); ++i) {
        rows.push_back({{"X", std::to_string(table.checkpoints[i])},
                        {"density", to_string(table.densities[i])},
                        {"numerator", std::to_string(table.numerators[i])}});
    }
    return {{"modulus", std::to_string(table.modulus)}, {"rows", rows}, {"t", std::to_string(table.t)}};
}

} // namespace tcore::io
