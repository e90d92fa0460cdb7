#include "run_config.hpp"

#include <hyperladder/errors.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace hyperladder::cli {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string as_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw DomainError("rational config values must be strings \"p/q\" or integers, got " + v.dump());
}

}  // namespace

FamilySpec RunConfig::make() const {
    const std::string name = lower(family);
    const Normalization norm = monic ? Normalization::monic : Normalization::conventional;
    if (name == "poschl-teller" || name == "poeschl-teller" || name == "pt") {
        const Rational half(1, 2);
        const Rational a = mu.empty() ? parse_rational(alpha) : parse_rational(mu) - half;
        const Rational b = eta.empty() ? parse_rational(beta) : parse_rational(eta) - half;
        return make_family(FamilyKind::jacobi, {{"alpha", a}, {"beta", b}}, norm);
    }
    const FamilyKind kind = parse_family_kind(name);
    std::map<std::string, Rational> params;
    if (kind != FamilyKind::hermite) params["alpha"] = parse_rational(alpha);
    if (kind == FamilyKind::jacobi || kind == FamilyKind::hypergeometric) params["beta"] = parse_rational(beta);
    return make_family(kind, params, norm);
}

std::complex<double> RunConfig::z_value() const {
    const auto comma = z.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(z, &used);
            if (used != z.size()) throw DomainError("");
            return {re, 0.0};
        }
        const std::string re_text = z.substr(0, comma);
        const std::string im_text = z.substr(comma + 1);
        const double re = std::stod(re_text, &used);
        if (used != re_text.size()) throw DomainError("");
        const double im = std::stod(im_text, &used);
        if (used != im_text.size()) throw DomainError("");
        return {re, im};
    } catch (const std::exception&) {
        throw DomainError("cannot parse --z '" + z + "', expected re,im");
    }
}

void RunConfig::check() const {
    if (l < 0) throw DomainError("--l must be >= 0");
    if (m < 0) throw DomainError("--m must be >= 0");
    if (lmax < 0) throw DomainError("--lmax must be >= 0");
    if (mmax < -1) throw DomainError("--mmax must be >= 0");
    if (tol < 0.0 || !std::isfinite(tol)) throw DomainError("--tol must be > 0");
    if (grid < 0) throw DomainError("--grid must be > 0");
    if (sign < -1 || sign > 1) throw DomainError("--sign must be +1 or -1");
    if (count < 1) throw DomainError("--count must be >= 1");
    if (!format.empty() && format != "json" && format != "csv") throw DomainError("--format must be json or csv");
}

Json RunConfig::to_json() const {
    Json j;
    j["family"] = family;
    j["alpha"] = alpha;
    j["beta"] = beta;
    if (!mu.empty()) j["mu"] = mu;
    if (!eta.empty()) j["eta"] = eta;
    j["monic"] = monic;
    j["l"] = l;
    j["m"] = m;
    j["lmax"] = lmax;
    j["mmax"] = mmax;
    j["tol"] = tol;
    j["grid"] = grid;
    j["sign"] = sign;
    j["count"] = count;
    j["z"] = z;
    j["format"] = format;
    return j;
}

void RunConfig::merge(const Json& j, const std::vector<std::string>& locked) {
    if (!j.is_object()) throw DomainError("config file must hold a JSON object");
    auto take = [&](const char* key, auto&& setter) {
        if (!j.contains(key)) return;
        if (std::find(locked.begin(), locked.end(), key) != locked.end()) return;
        try {
            setter(j.at(key));
        } catch (const Json::exception& e) {
            throw DomainError(std::string("config key '") + key + "': " + e.what());
        }
    };
    take("family", [&](const Json& v) { family = v.get<std::string>(); });
    take("alpha", [&](const Json& v) { alpha = as_text(v); });
    take("beta", [&](const Json& v) { beta = as_text(v); });
    take("mu", [&](const Json& v) { mu = as_text(v); });
    take("eta", [&](const Json& v) { eta = as_text(v); });
    take("monic", [&](const Json& v) { monic = v.get<bool>(); });
    take("normalization", [&](const Json& v) { monic = v.get<std::string>() == "monic"; });
    take("l", [&](const Json& v) { l = v.get<int>(); });
    take("m", [&](const Json& v) { m = v.get<int>(); });
    take("lmax", [&](const Json& v) { lmax = v.get<int>(); });
    take("mmax", [&](const Json& v) { mmax = v.get<int>(); });
    take("tol", [&](const Json& v) { tol = v.get<double>(); });
    take("grid", [&](const Json& v) { grid = v.get<int>(); });
    take("sign", [&](const Json& v) { sign = v.get<int>(); });
    take("count", [&](const Json& v) { count = v.get<int>(); });
    take("z", [&](const Json& v) { z = v.get<std::string>(); });
    take("out", [&](const Json& v) { out = v.get<std::string>(); });
    take("format", [&](const Json& v) { format = v.get<std::string>(); });
}

std::uint64_t config_hash(const std::string& command, const RunConfig& config) {
    const std::string text = Json{{"command", command}, {"config", config.to_json()}}.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace hyperladder::cli
