#include "hyperladder/family.hpp"

#include "hyperladder/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace hyperladder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Polynomial linear(long c0, long c1) { return Polynomial({Rational(c0), Rational(c1)}); }

void require_above_minus_one(const std::map<std::string, Rational>& params, const char* key) {
    auto it = params.find(key);
    if (it != params.end() && it->second <= -1)
        throw DomainError(std::string("parameter out of range: ") + key + " = " + it->second.get_str() +
                          " must be > -1");
}

std::vector<Rational> interior_samples(const Interval& iv) {
    std::vector<Rational> out;
    if (iv.finite()) {
        Rational a(iv.lower), b(iv.upper);
        for (int k = 1; k < 16; ++k) out.emplace_back(a + (b - a) * Rational(k, 16));
        return out;
    }
    const std::vector<Rational> mags = {Rational(1, 64), Rational(1, 4), Rational(1), Rational(3), Rational(10),
                                        Rational(100), Rational(1000)};
    for (const auto& x : mags) {
        if (std::isfinite(iv.lower)) out.push_back(Rational(iv.lower) + x);
        else if (std::isfinite(iv.upper)) out.push_back(Rational(iv.upper) - x);
        else {
            out.push_back(x);
            out.push_back(-x);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::hypergeometric: return "hypergeometric";
        case FamilyKind::jacobi: return "jacobi";
        case FamilyKind::laguerre: return "laguerre";
        case FamilyKind::hermite: return "hermite";
    }
    return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    for (auto kind : {FamilyKind::hypergeometric, FamilyKind::jacobi, FamilyKind::laguerre, FamilyKind::hermite})
        if (lower == to_string(kind)) return kind;
    throw DomainError("unknown family '" + std::string(name) + "'");
}

bool Interval::finite() const { return std::isfinite(lower) && std::isfinite(upper); }

double WeightForm::operator()(double s) const {
    double value = std::exp(exponent_poly.evaluate(s));
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        value *= std::pow(f.base.evaluate(s), f.exponent.get_d());
    }
    return value;
}

Polynomial WeightForm::pearson_quotient(const Polynomial& sigma) const {
    // [sigma rho]'/rho = sigma' + sigma q' + sum_i e_i base_i' sigma/base_i
    Polynomial out = sigma.derivative() + sigma * exponent_poly.derivative();
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        auto [quot, rem] = sigma.divide(f.base);
        if (!rem.is_zero())
            throw DomainError("weight factor (" + f.base.to_string() + ") does not divide sigma");
        out += quot * (f.exponent * f.base.coeff(1));
    }
    return out;
}

Rational FamilySpec::param(const std::string& key) const {
    auto it = params.find(key);
    return it == params.end() ? Rational(0) : it->second;
}

std::string FamilySpec::id() const {
    std::ostringstream os;
    os << to_string(kind);
    if (!params.empty()) {
        os << '(';
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) os << ',';
            first = false;
            os << k << '=' << v.get_str();
        }
        os << ')';
    }
    if (normalization == Normalization::monic) os << "[monic]";
    return os.str();
}

FamilySpec make_family(FamilyKind kind, const std::map<std::string, Rational>& params, Normalization normalization) {
    FamilySpec f;
    f.kind = kind;
    f.normalization = normalization;

    auto allow = [&](std::initializer_list<const char*> keys) {
        for (const auto& [k, v] : params) {
            if (std::none_of(keys.begin(), keys.end(), [&](const char* key) { return k == key; }))
                throw DomainError("family " + std::string(to_string(kind)) + " has no parameter '" + k + "'");
        }
        for (const char* key : keys) f.params[key] = params.count(key) ? params.at(key) : Rational(0);
    };

    switch (kind) {
        case FamilyKind::hypergeometric: {
            allow({"alpha", "beta"});
            const Rational a = f.params["alpha"], b = f.params["beta"];
            f.interval = {0.0, 1.0};
            f.sigma = Polynomial({Rational(0), Rational(1), Rational(-1)});
            f.tau = Polynomial({a + 1, -(a + b + 2)});
            f.weight.factors = {{linear(0, 1), a}, {linear(1, -1), b}};
            break;
        }
        case FamilyKind::jacobi: {
            allow({"alpha", "beta"});
            const Rational a = f.params["alpha"], b = f.params["beta"];
            f.interval = {-1.0, 1.0};
            f.sigma = Polynomial({Rational(1), Rational(0), Rational(-1)});
            f.tau = Polynomial({b - a, -(a + b + 2)});
            f.weight.factors = {{linear(1, -1), a}, {linear(1, 1), b}};
            break;
        }
        case FamilyKind::laguerre: {
            allow({"alpha"});
            const Rational a = f.params["alpha"];
            f.interval = {0.0, kInf};
            f.sigma = linear(0, 1);
            f.tau = Polynomial({a + 1, Rational(-1)});
            f.weight.factors = {{linear(0, 1), a}};
            f.weight.exponent_poly = linear(0, -1);
            break;
        }
        case FamilyKind::hermite: {
            allow({});
            f.interval = {-kInf, kInf};
            f.sigma = Polynomial::constant(Rational(1));
            f.tau = linear(0, -2);
            f.weight.exponent_poly = Polynomial({Rational(0), Rational(0), Rational(-1)});
            break;
        }
    }
    validate(f);
    return f;
}

void validate(const FamilySpec& family) {
    require_above_minus_one(family.params, "alpha");
    require_above_minus_one(family.params, "beta");

    if (family.sigma.degree() > 2 || family.sigma.is_zero())
        throw DomainError("sigma must be a nonzero polynomial of degree <= 2");
    if (family.tau.degree() != 1) throw DomainError("tau must have degree exactly 1");
    if (family.sigma_second() > 0) throw DomainError("sigma'' must be <= 0");
    if (family.tau_slope() >= 0) throw DomainError("tau' must be < 0");

    for (const auto& s : interior_samples(family.interval))
        if (family.sigma(s) <= 0) throw DomainError("sigma is not positive on the open interval");

    Polynomial quotient = family.weight.pearson_quotient(family.sigma);
    if (!(quotient == family.tau))
        throw InternalError("Pearson identity fails for " + family.id() + ": [sigma rho]'/rho = " +
                            quotient.to_string() + " but tau = " + family.tau.to_string());
}

Rational eigenvalue(const FamilySpec& family, int l) {
    if (l < 0) throw DomainError("eigenvalue index must be nonnegative");
    const Rational ll(l);
    return -ll * (ll - 1) / 2 * family.sigma_second() - ll * family.tau_slope();
}

namespace {

Polynomial rodrigues_core(const FamilySpec& family, int l) {
    const Polynomial dsigma = family.sigma.derivative();
    Polynomial q = Polynomial::constant(Rational(1));
    for (int k = l; k >= 1; --k) q = family.sigma * q.derivative() + (family.tau + dsigma * Rational(k - 1)) * q;
    return q;
}

Rational conventional_constant(FamilyKind kind, int l) {
    switch (kind) {
        case FamilyKind::jacobi: {
            Rational b = 1 / factorial(static_cast<unsigned>(l));
            Integer two_l;
            mpz_ui_pow_ui(two_l.get_mpz_t(), 2, static_cast<unsigned long>(l));
            b /= two_l;
            return l % 2 ? Rational(-b) : b;
        }
        case FamilyKind::hermite: return Rational(l % 2 ? -1 : 1);
        case FamilyKind::laguerre:
        case FamilyKind::hypergeometric: return 1 / factorial(static_cast<unsigned>(l));
    }
    return Rational(1);
}

}  // namespace

Rational rodrigues_constant(const FamilySpec& family, int l) {
    if (l < 0) throw DomainError("polynomial degree must be nonnegative");
    if (family.normalization == Normalization::monic) return 1 / rodrigues_core(family, l).leading();
    return conventional_constant(family.kind, l);
}

Polynomial classical_polynomial(const FamilySpec& family, int l) {
    if (l < 0) throw DomainError("polynomial degree must be nonnegative");
    Polynomial q = rodrigues_core(family, l);
    if (q.degree() != l) throw InternalError("Rodrigues descent produced degree " + std::to_string(q.degree()));
    if (family.normalization == Normalization::monic) return q * (1 / q.leading());
    return q * conventional_constant(family.kind, l);
}

Polynomial ode_residual(const FamilySpec& family, const Polynomial& phi, const Rational& lambda) {
    return family.sigma * phi.derivative(2) + family.tau * phi.derivative() + phi * lambda;
}

RecurrenceCoefficients recurrence_coefficients_from_zero(const FamilySpec& family, int l) {
    if (l < 0) throw DomainError("recurrence index must be nonnegative");
    const Polynomial prev = l > 0 ? classical_polynomial(family, l - 1) : Polynomial{};
    const Polynomial cur = classical_polynomial(family, l);
    const Polynomial next = classical_polynomial(family, l + 1);
    const Polynomial s_cur = Polynomial::identity() * cur;

    // Triangular solve on the top three coefficients of s*Phi_l.
    RecurrenceCoefficients rc;
    rc.alpha = s_cur.leading() / next.leading();
    Polynomial rest = s_cur - next * rc.alpha;
    rc.beta = rest.coeff(l) / cur.leading();
    rest -= cur * rc.beta;
    rc.gamma = l > 0 ? rest.coeff(l - 1) / prev.leading() : Rational(0);
    rest -= prev * rc.gamma;
    if (!rest.is_zero())
        throw InternalError("three-term recurrence residual nonzero for " + family.id() + " at l=" +
                            std::to_string(l) + ": " + rest.to_string());
    return rc;
}

RecurrenceCoefficients recurrence_coefficients(const FamilySpec& family, int l) {
    if (l < 1) throw DomainError("recurrence_coefficients requires l >= 1");
    return recurrence_coefficients_from_zero(family, l);
}

double total_mass(const FamilySpec& family) {
    const double a = family.param("alpha").get_d();
    const double b = family.param("beta").get_d();
    switch (family.kind) {
        case FamilyKind::hypergeometric: return std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
        case FamilyKind::jacobi:
            return std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
        case FamilyKind::laguerre: return std::tgamma(a + 1);
        case FamilyKind::hermite: return std::sqrt(std::acos(-1.0));
    }
    return 0.0;
}

bool boundary_spot_check(const FamilySpec& family, int k_max, double threshold) {
    auto boundary_term = [&](double s, int k) {
        return std::abs(family.sigma.evaluate(s) * family.weight(s) * std::pow(s, k));
    };
    auto check_end = [&](double end, double inward) {
        for (int k = 0; k <= k_max; ++k) {
            if (std::isfinite(end)) {
                // Must shrink as the endpoint is approached.
                double prev = boundary_term(end + inward * 1e-2, k);
                for (double d : {1e-4, 1e-6, 1e-8}) {
                    double cur = boundary_term(end + inward * d, k);
                    if (!(cur < prev)) return false;
                    prev = cur;
                }
            } else {
                double far = end > 0 ? 200.0 : -200.0;
                if (!(boundary_term(far, k) < threshold)) return false;
            }
        }
        return true;
    };
    return check_end(family.interval.lower, 1.0) && check_end(family.interval.upper, -1.0);
}

}  // namespace hyperladder
