#include "hyperladder/coherent.hpp"

#include "hyperladder/errors.hpp"

#include <cmath>
#include <limits>

namespace hyperladder {

std::vector<Rational> epsilon_sequence(const FamilySpec& family, int m, int n_max) {
    if (n_max < 0) throw DomainError("epsilon_sequence needs n_max >= 0");
    if (m < 0) throw DomainError("epsilon_sequence needs m >= 0");
    std::vector<Rational> eps{Rational(1)};
    const Rational lam_m = eigenvalue(family, m);
    for (int n = 1; n <= n_max; ++n) eps.push_back(eps.back() * (eigenvalue(family, m + n) - lam_m));
    return eps;
}

namespace {

// log(eps_n) without converting the (possibly huge) rational to double.
double log_rational(const Rational& q) {
    long exp_num = 0, exp_den = 0;
    const double mant_num = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
    const double mant_den = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
    return std::log(mant_num / mant_den) + static_cast<double>(exp_num - exp_den) * std::log(2.0);
}

}  // namespace

RadiusEstimate radius_estimate(const FamilySpec& family, int m, int n_max) {
    if (n_max < 8) throw DomainError("radius_estimate needs n_max >= 8");
    const auto eps = epsilon_sequence(family, m, n_max);
    RadiusEstimate out;
    out.n_max = n_max;
    out.root_value = std::exp(log_rational(eps[static_cast<std::size_t>(n_max)]) / n_max);
    const int half = n_max / 2;
    out.root_midpoint = std::exp(log_rational(eps[static_cast<std::size_t>(half)]) / half);
    out.ratio_value = to_double(eigenvalue(family, m + n_max + 1) - eigenvalue(family, m));
    // e_n grows at least linearly for every admissible family, so the root sequence
    // keeps increasing; a stalled sequence would indicate a finite limit.
    out.diverging = out.root_value > out.root_midpoint * 1.01;
    out.radius = out.diverging ? std::numeric_limits<double>::infinity() : out.root_value;
    return out;
}

CoherentState coherent_state(const FamilySpec& family, int m, std::complex<double> z, double tol, int max_levels) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("coherent_state needs finite z");
    if (!(tol > 0.0)) throw DomainError("coherent_state needs tol > 0");
    if (m < 0) throw DomainError("coherent_state needs m >= 0");

    const double r2 = std::norm(z);
    const Rational lam_m = eigenvalue(family, m);
    auto e = [&](int n) { return to_double(eigenvalue(family, m + n) - lam_m); };

    // terms t_n = |z|^{2n}/eps_n; t_{n+1}/t_n = |z|^2/e_{n+1} decreases with n.
    std::vector<double> terms{1.0};
    double sum = 1.0;
    double tail = 0.0;
    for (;;) {
        const int n_next = static_cast<int>(terms.size());  // first neglected index
        if (n_next >= max_levels) throw NumericError("coherent_state: truncation exceeded max_levels");
        const double t_next = terms.back() * r2 / e(n_next);
        const double q = r2 / e(n_next + 1);
        if (q < 1.0) {
            tail = t_next / (1.0 - q);
            if (tail <= tol * tol * sum) break;
        }
        terms.push_back(t_next);
        sum += t_next;
    }

    CoherentState state;
    state.family = family;
    state.m = m;
    state.z = z;
    state.truncation = static_cast<int>(terms.size());
    state.normalization_squared = sum;
    state.tail_bound = std::sqrt(tail / sum);
    state.coeffs.m = m;

    const auto eps = epsilon_sequence(family, m, state.truncation - 1);
    const double norm_factor = std::sqrt(sum);
    std::complex<double> z_pow(1.0, 0.0);
    for (int n = 0; n < state.truncation; ++n) {
        const double root_eps = std::exp(0.5 * log_rational(eps[static_cast<std::size_t>(n)]));
        state.coeffs.coeffs.push_back(z_pow / (root_eps * norm_factor));
        z_pow *= z;
    }
    return state;
}

double eigen_residual(const CoherentState& state) {
    const ComplexVector lowered = annihilate(state.family, state.coeffs);
    double acc = 0.0;
    for (std::size_t n = 0; n < state.coeffs.coeffs.size(); ++n) {
        const std::complex<double> a_part = n < lowered.coeffs.size() ? lowered.coeffs[n] : 0.0;
        acc += std::norm(a_part - state.z * state.coeffs.coeffs[n]);
    }
    return std::sqrt(acc);
}

}  // namespace hyperladder
