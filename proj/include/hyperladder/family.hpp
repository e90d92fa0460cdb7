#pragma once

#include "hyperladder/polynomial.hpp"
#include "hyperladder/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hyperladder {

enum class FamilyKind { hypergeometric, jacobi, laguerre, hermite };

std::string_view to_string(FamilyKind kind);
/// Case-insensitive; throws DomainError for an unknown name.
FamilyKind parse_family_kind(std::string_view name);

enum class Normalization { conventional, monic };

/// Open interval (lower, upper); endpoints may be infinite.
struct Interval {
    double lower;
    double upper;

    bool finite() const;
    bool contains(double s) const { return s > lower && s < upper; }
};

/// Weight of the form exp(q(s)) * prod_i base_i(s)^exponent_i with linear bases.
struct WeightForm {
    struct Factor {
        Polynomial base;
        Rational exponent;
    };

    std::vector<Factor> factors;
    Polynomial exponent_poly;

    double operator()(double s) const;

    /// [sigma*rho]'/rho as an exact polynomial, or DomainError when the
    /// quotient is not polynomial (some base does not divide sigma).
    Polynomial pearson_quotient(const Polynomial& sigma) const;
};

/// One equation of hypergeometric type sigma*y'' + tau*y' + lambda*y = 0 together
/// with its orthogonality interval and weight.
struct FamilySpec {
    FamilyKind kind = FamilyKind::jacobi;
    Interval interval{-1.0, 1.0};
    Polynomial sigma;
    Polynomial tau;
    WeightForm weight;
    std::map<std::string, Rational> params;
    Normalization normalization = Normalization::conventional;

    Rational param(const std::string& key) const;
    /// Stable identifier, e.g. "jacobi(alpha=1/2,beta=0)".
    std::string id() const;

    /// sigma'' and tau' as constants.
    Rational sigma_second() const { return sigma.coeff(2) * 2; }
    Rational tau_slope() const { return tau.coeff(1); }
};

/// Builds a Table-style family. Recognised parameters: "alpha" (hypergeometric,
/// jacobi, laguerre) and "beta" (hypergeometric, jacobi); missing ones default to 0.
/// Hermite is stored with tau = -2s so that the Pearson identity holds for exp(-s^2).
FamilySpec make_family(FamilyKind kind, const std::map<std::string, Rational>& params = {},
                       Normalization normalization = Normalization::conventional);

/// Re-checks every structural invariant; throws DomainError or InternalError.
void validate(const FamilySpec& family);

/// lambda_l = -l(l-1)/2 sigma'' - l tau'
Rational eigenvalue(const FamilySpec& family, int l);

/// Constant B_l in the Rodrigues formula (or the monic rescaling when requested).
Rational rodrigues_constant(const FamilySpec& family, int l);

/// Phi_l via the descent recursion q_l = 1, q_{k-1} = sigma q_k' + (tau + (k-1) sigma') q_k,
/// Phi_l = B_l q_0, which equals B_l/rho [sigma^l rho]^(l) under the Pearson identity.
Polynomial classical_polynomial(const FamilySpec& family, int l);

/// sigma*Phi'' + tau*Phi' + lambda*Phi.
Polynomial ode_residual(const FamilySpec& family, const Polynomial& phi, const Rational& lambda);

struct RecurrenceCoefficients {
    Rational alpha;
    Rational beta;
    Rational gamma;
};

/// Exact (alpha_l, beta_l, gamma_l) with s Phi_l = alpha_l Phi_{l+1} + beta_l Phi_l + gamma_l Phi_{l-1}.
/// Requires l >= 1.
RecurrenceCoefficients recurrence_coefficients(const FamilySpec& family, int l);

/// Recurrence coefficients for any l >= 0; gamma_0 is zero.
RecurrenceCoefficients recurrence_coefficients_from_zero(const FamilySpec& family, int l);

/// Integral of rho over the interval.
double total_mass(const FamilySpec& family);

/// Numerical spot check that sigma*rho*s^k is negligible next to both endpoints for k <= k_max.
bool boundary_spot_check(const FamilySpec& family, int k_max = 8, double threshold = 1e-6);

}  // namespace hyperladder
