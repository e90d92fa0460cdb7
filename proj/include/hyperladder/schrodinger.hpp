#pragma once

#include "hyperladder/family.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hyperladder {

using RealMap = std::function<double(double)>;

/// s = s(x) with ds/dx = sign * kappa(s(x)), mapping x_domain monotonically onto (a, b).
struct ChangeOfVariable {
    FamilyKind family = FamilyKind::jacobi;
    int sign = 1;
    Interval x_domain{0.0, 1.0};
    RealMap s_of_x;
    RealMap ds_dx;
    RealMap d2s_dx2;
    std::string closed_form;

    /// kappa(s(x)) = sign * ds/dx, which avoids sqrt(sigma) cancellation near the endpoints.
    double kappa(double x) const { return sign * ds_dx(x); }
};

/// Sign used when the caller does not choose one: -1 for Jacobi (s = cos x), +1 otherwise.
int default_sign(FamilyKind kind);

/// Closed forms: Jacobi s = cos x on (0, pi); hypergeometric s = sin^2(x/2) on (0, pi);
/// Laguerre s = x^2/4 on (0, inf); Hermite s = x. The opposite sign is obtained by the
/// reflection x -> -x, which is again closed form. sign = 0 selects default_sign.
ChangeOfVariable change_of_variable(const FamilySpec& family, int sign = 0);

/// max |ds/dx - sign*sqrt(sigma(s(x)))| over `samples` interior points.
double change_of_variable_defect(const FamilySpec& family, const ChangeOfVariable& cov, int samples = 257);

enum class DerivativeMode { analytic, finite_difference };

/// W_m = -tau/(2 kappa) - sign (2m-1)/(2 kappa) d kappa/dx, both evaluated at s(x).
/// Throws DomainError when x is not interior to cov.x_domain.
double superpotential(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x);

/// dW_m/dx, closed form or 4th-order central differences with a Richardson step.
double superpotential_derivative(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x,
                                 DerivativeMode mode = DerivativeMode::analytic);

/// V_m(x) = lambda_m + W_m^2 - sign * dW_m/dx.
double potential_value(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x,
                       DerivativeMode mode = DerivativeMode::analytic);

/// V_{m+1}(x) through the partner line: lambda_m + W_m^2 + sign * dW_m/dx.
double partner_potential_value(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x,
                               DerivativeMode mode = DerivativeMode::analytic);

struct PotentialProfile {
    int m = 0;
    int sign = 1;
    Rational lambda_m;
    std::vector<double> grid;
    std::vector<double> values;
    /// Grid indices whose value was not finite; kept in `values` as NaN.
    std::vector<std::size_t> flagged;
};

/// Samples V_m on `grid`. Every point must be interior to cov.x_domain.
PotentialProfile potential(const FamilySpec& family, int m, const ChangeOfVariable& cov,
                           const std::vector<double>& grid, DerivativeMode mode = DerivativeMode::analytic);

/// max |V_{m+1}(own Riccati line) - V_{m+1}(partner line of V_m)| over the grid.
double riccati_partner_defect(const FamilySpec& family, int m, const ChangeOfVariable& cov,
                              const std::vector<double>& grid, DerivativeMode mode = DerivativeMode::analytic);

/// Psi_{l,m}(x) = sqrt(kappa rho) kappa^m Phi_l^(m) at s(x), unnormalised.
double wavefunction_value(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov, double x);

struct Wavefunction {
    int l = 0;
    int m = 0;
    std::vector<double> grid;
    std::vector<double> values;
    /// Factor applied to the raw samples (L2 normalisation and sign fix).
    double scale = 1.0;
    /// max |-Psi'' + V_m Psi - lambda_l Psi| over interior grid points, Psi'' by second differences.
    double schrodinger_residual = 0.0;
};

/// Samples Psi_{l,m} on a uniform grid, L2-normalised by composite Simpson and made
/// positive at the first interior maximum of |Psi| when `normalize` is set.
Wavefunction wavefunction(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov,
                          const std::vector<double>& grid, bool normalize = true);

/// Psi_{l,m}(x) = (A~_m^+/(lambda_l-lambda_m)) ... (A~_{l-1}^+/(lambda_l-lambda_{l-1})) Psi_{l,l}(x),
/// A~_k^+ = -sign d/dx + W_k, derivatives by nested 6th-order central differences with step h.
double ladder_wavefunction_value(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov, double x,
                                 double h = 1e-2);

/// Uniform grid of n points strictly inside (lower, upper), end margins `margin` * width.
std::vector<double> interior_grid(const Interval& domain, int n, double margin = 0.0);

double simpson(const std::vector<double>& grid, const std::vector<double>& values);

struct NumerovOptions {
    int grid = 8000;
    double tolerance = 1e-7;
    int max_refinements = 5;
};

struct NumerovLevel {
    int index = 0;
    double energy = 0.0;
    bool resolved = false;
    /// |E(final grid) - E(previous grid)|.
    double change = 0.0;
    int grid = 0;
};

/// Lowest `count` Dirichlet eigenvalues of -psi'' + V psi on `clip` by Numerov shooting with
/// node-count bisection; the grid doubles until successive estimates differ by < tolerance.
/// Grid points where h^2 (V - E)/12 >= 1/2 are treated as forbidden (psi = 0).
std::vector<NumerovLevel> numerov_eigenvalues(const RealMap& V, const Interval& clip, int count,
                                              const NumerovOptions& options = {});

/// Same on fixed samples: the profile grid must be uniform. Uses the samples inside `clip`
/// and the every-other-sample subgrid, combined by Richardson extrapolation.
std::vector<NumerovLevel> numerov_eigenvalues(const PotentialProfile& profile, int count, const Interval& clip);

/// Finite singular endpoints are moved inward until V <= threshold. Infinite endpoints start
/// at +-infinite_cut and move outward until V exceeds its interior minimum by infinite_rise.
Interval default_clip(const RealMap& V, const Interval& domain, double threshold = 1e10,
                      double infinite_cut = 12.0, double infinite_rise = 100.0);

}  // namespace hyperladder
