#pragma once

#include "hyperladder/errors.hpp"
#include "hyperladder/family.hpp"
#include "hyperladder/ladder.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hyperladder {

/// Gauss rule for the family weight: integrates rho * p exactly for deg p <= exact_degree.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exact_degree = 0;
};

/// n-node Gauss rule from the exact three-term recurrence (Jacobi-matrix eigenproblem),
/// nodes polished by Newton steps on the orthonormal recurrence. Rules are memoised
/// per (family, n) behind a mutex.
QuadratureRule gauss_rule(const FamilySpec& family, int n);

/// Sum of w_i p(x_i), with p evaluated exactly at each node.
double integrate(const Polynomial& p, const QuadratureRule& rule);

using RealFunction = std::function<double(double)>;

/// <f, g> = int f g rho. Both ASF must share m; the integrand is then a polynomial
/// of degree deg P_f + deg P_g + m deg sigma, which must not exceed rule.exact_degree.
double inner_product(const ASF& f, const ASF& g, const QuadratureRule& rule);
/// Same, picking a rule of sufficient degree.
double inner_product(const ASF& f, const ASF& g);
double inner_product(const RealFunction& f, const RealFunction& g, const QuadratureRule& rule);

/// ||phi|| = sqrt(<phi, phi>).
double norm(const ASF& phi);

/// Coefficients in the orthonormal basis |m+n, m>, n = 0, 1, ...
template <class Scalar>
struct BasisVector {
    int m = 0;
    std::vector<Scalar> coeffs;

    std::size_t truncation() const { return coeffs.size(); }
};

using RealVector = BasisVector<double>;
using ComplexVector = BasisVector<std::complex<double>>;

constexpr int kDefaultTruncation = 64;

/// e_n = lambda_{m+n} - lambda_m.
double level_gap(const FamilySpec& family, int m, int n);
/// sqrt(e_n).
double ladder_factor(const FamilySpec& family, int m, int n);

/// a_m |l,m> = sqrt(lambda_l - lambda_m) |l-1,m>.
template <class Scalar>
BasisVector<Scalar> annihilate(const FamilySpec& family, const BasisVector<Scalar>& v) {
    BasisVector<Scalar> out{v.m, std::vector<Scalar>(v.coeffs.empty() ? 0 : v.coeffs.size() - 1)};
    for (std::size_t n = 1; n < v.coeffs.size(); ++n)
        out.coeffs[n - 1] = v.coeffs[n] * ladder_factor(family, v.m, static_cast<int>(n));
    return out;
}

/// a_m^+ |l,m> = sqrt(lambda_{l+1} - lambda_m) |l+1,m>. Grows the vector by one level.
template <class Scalar>
BasisVector<Scalar> create(const FamilySpec& family, const BasisVector<Scalar>& v) {
    BasisVector<Scalar> out{v.m, std::vector<Scalar>(v.coeffs.size() + 1)};
    for (std::size_t n = 0; n < v.coeffs.size(); ++n)
        out.coeffs[n + 1] = v.coeffs[n] * ladder_factor(family, v.m, static_cast<int>(n) + 1);
    return out;
}

/// U_m |l,m> = |l+1,m+1> (direction +1) or its inverse (direction -1).
template <class Scalar>
BasisVector<Scalar> shift_u(const BasisVector<Scalar>& v, int direction) {
    if (direction != 1 && direction != -1) throw DomainError("shift_u direction must be +1 or -1");
    if (direction == -1 && v.m == 0) throw DomainError("shift_u(-1) needs m >= 1");
    return BasisVector<Scalar>{v.m + direction, v.coeffs};
}

template <class Scalar>
double vector_norm(const BasisVector<Scalar>& v) {
    double acc = 0.0;
    for (const auto& c : v.coeffs) acc += std::norm(c);
    return std::sqrt(acc);
}

/// Normalised state |m+n, m> padded to `truncation` levels.
RealVector basis_state(int m, int n, int truncation = kDefaultTruncation);

/// Result of a sweep of numerical or exact checks.
struct IdentityResult {
    std::string identity;
    bool passed = true;
    bool exact = false;
    double worst = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct CheckReport {
    std::string family;
    std::vector<IdentityResult> results;

    bool passed() const;
};

/// [a,a^+] = R_m, [a^+,R] = sigma'' a^+, [a,R] = -sigma'' a, [H,a] = -R a, [H,a^+] = a^+ R,
/// U R U^+ = R_{m+1} + sigma'', H - lambda_m = a^+ a on |l,m>, m <= l <= l_max.
/// Each identity is checked exactly on the eigenvalue arithmetic and numerically on
/// basis coefficients (relative to the magnitude of the operator products).
CheckReport commutator_checks(const FamilySpec& family, int m, int l_max, double coeff_tol = 1e-12);

enum class AlgebraTag { su11, heisenberg_weyl };
std::string_view to_string(AlgebraTag tag);

struct AlgebraClass {
    AlgebraTag tag;
    /// K-operator commutators, only populated when sigma'' < 0.
    std::vector<IdentityResult> k_checks;
};

/// su(1,1) when sigma'' < 0, Heisenberg-Weyl when sigma'' = 0.
AlgebraClass classify_algebra(const FamilySpec& family, int m = 0, int l_max = 30, double coeff_tol = 1e-12);

/// max |<Phi_{l,m}, Phi_{k,m}>| / (||Phi_{l,m}|| ||Phi_{k,m}||) over l != k.
IdentityResult orthogonality_sweep(const FamilySpec& family, int l_max, int m_max, double tol = 1e-11);

/// max relative deviation of ||Phi_{l,m+1}|| / ||Phi_{l,m}|| from sqrt(lambda_l - lambda_m).
IdentityResult norm_ladder_sweep(const FamilySpec& family, int l_max, double tol = 1e-10);

/// <A_m Phi_{l,m}, Phi_{k,m+1}> against <Phi_{l,m}, A_m^+ Phi_{k,m+1}>, relative.
IdentityResult adjointness_sweep(const FamilySpec& family, int l_max, int m_max, double tol = 1e-10);

/// (a^+)^{l-m}|m,m> / sqrt(prod) against the projection of Phi_{l,m}/||Phi_{l,m}||
/// onto |k,m>, compared up to a global sign.
IdentityResult creation_chain_sweep(const FamilySpec& family, int m, int l_max, double tol = 1e-9);

}  // namespace hyperladder
