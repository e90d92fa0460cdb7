#include "hyperladder/json_io.hpp"

#include "hyperladder/errors.hpp"

namespace hyperladder {

Json polynomial_to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw DomainError("rational values must be \"p/q\" strings or integers, got " + j.dump());
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("polynomial must be a JSON array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

FamilySpec family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family")) throw DomainError("family config needs a \"family\" key");
    const FamilyKind kind = parse_family_kind(j.at("family").get<std::string>());
    std::map<std::string, Rational> params;
    Normalization norm = Normalization::conventional;
    for (const auto& [key, value] : j.items()) {
        if (key == "family") continue;
        if (key == "normalization") {
            const auto n = value.get<std::string>();
            if (n == "monic") norm = Normalization::monic;
            else if (n != "conventional") throw DomainError("unknown normalization '" + n + "'");
            continue;
        }
        params[key] = rational_from_json(value);
    }
    return make_family(kind, params, norm);
}

Json family_to_json(const FamilySpec& family) {
    Json out;
    out["family"] = std::string(to_string(family.kind));
    for (const auto& [k, v] : family.params) out[k] = to_string(v);
    if (family.normalization == Normalization::monic) out["normalization"] = "monic";
    return out;
}

Json report_to_json(const LadderReport& report) {
    Json out;
    out["identity"] = report.identity;
    out["family"] = report.family;
    out["l"] = report.l;
    out["m"] = report.m;
    out["status"] = report.passed ? "pass" : "fail";
    out["residual"] = to_string(report.residual);
    if (!report.detail.empty()) out["detail"] = report.detail;
    return out;
}

Json identity_to_json(const IdentityResult& result, const std::string& family) {
    Json out;
    out["identity"] = result.identity;
    out["family"] = family;
    out["status"] = result.passed ? "pass" : "fail";
    out["exact"] = result.exact;
    out["worst"] = result.worst;
    if (!result.exact) out["tolerance"] = result.tolerance;
    if (!result.detail.empty()) out["detail"] = result.detail;
    return out;
}

}  // namespace hyperladder
