#pragma once

#include "hyperladder/family.hpp"
#include "hyperladder/hilbert.hpp"

#include <complex>
#include <vector>

namespace hyperladder {

/// eps_0 = 1, eps_n = e_1 e_2 ... e_n with e_n = lambda_{m+n} - lambda_m; exact.
std::vector<Rational> epsilon_sequence(const FamilySpec& family, int m, int n_max);

/// Growth diagnostics for the coherent-state series sum |z|^{2n}/eps_n.
struct RadiusEstimate {
    int n_max = 0;
    double root_value = 0.0;      ///< eps_{n_max}^{1/n_max}
    double root_midpoint = 0.0;   ///< eps_{n_max/2}^{2/n_max}
    double ratio_value = 0.0;     ///< e_{n_max+1}, ratio-test bound for |z|^2
    bool diverging = false;       ///< root sequence still growing, reported as R = infinity
    double radius = 0.0;          ///< +inf when diverging, else root_value
};

RadiusEstimate radius_estimate(const FamilySpec& family, int m, int n_max);

/// |z> = N(|z|^2)^{-1} sum_n z^n / sqrt(eps_n) |n>, truncated adaptively.
struct CoherentState {
    FamilySpec family;
    int m = 0;
    std::complex<double> z;
    int truncation = 0;  ///< number of retained levels N (indices 0..N-1)
    ComplexVector coeffs;
    /// Truncated sum |z|^{2n}/eps_n, i.e. N(|z|^2)^2 up to the neglected tail.
    double normalization_squared = 0.0;
    /// Bound on the neglected amplitude sqrt(sum_{n>=N} |c_n|^2) of the full series.
    double tail_bound = 0.0;
};

/// Keeps levels until the neglected amplitude, bounded by a geometric tail, is below tol.
/// Throws DomainError for non-finite z or tol <= 0.
CoherentState coherent_state(const FamilySpec& family, int m, std::complex<double> z, double tol,
                             int max_levels = 20000);

/// || a_m |z> - z |z> || over the retained levels.
double eigen_residual(const CoherentState& state);

}  // namespace hyperladder
