#pragma once

// Reference values computed without the library's Rodrigues descent, recurrence solver,
// quadrature or Riccati code. Only the Rational type and the Polynomial container are shared.

#include <hyperladder/family.hpp>
#include <hyperladder/polynomial.hpp>
#include <hyperladder/rational.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

using hyperladder::FamilyKind;
using hyperladder::Polynomial;
using hyperladder::Rational;
using Coeffs = std::vector<Rational>;

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Coeffs power(const Coeffs& a, int n) {
    Coeffs out{Rational(1)};
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
}

inline void add_scaled(Coeffs& acc, const Coeffs& term, const Rational& c) {
    if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] += c * term[i];
}

// Generalised binomial coefficient C(x, k) for rational x.
inline Rational binom(const Rational& x, int k) {
    Rational num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return Rational(num / den);
}

// P_n^{(a,b)}(x) = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^{n-k}
inline Polynomial jacobi(int n, const Rational& a, const Rational& b) {
    const Coeffs xm{Rational(-1, 2), Rational(1, 2)};
    const Coeffs xp{Rational(1, 2), Rational(1, 2)};
    Coeffs acc;
    for (int k = 0; k <= n; ++k)
        add_scaled(acc, mul(power(xm, k), power(xp, n - k)), binom(n + a, n - k) * binom(n + b, k));
    return Polynomial(acc);
}

// Same polynomial at x = 1 - 2s: (x-1)/2 = -s, (x+1)/2 = 1-s.
inline Polynomial shifted_jacobi(int n, const Rational& a, const Rational& b) {
    const Coeffs ms{Rational(0), Rational(-1)};
    const Coeffs one_minus{Rational(1), Rational(-1)};
    Coeffs acc;
    for (int k = 0; k <= n; ++k)
        add_scaled(acc, mul(power(ms, k), power(one_minus, n - k)), binom(n + a, n - k) * binom(n + b, k));
    return Polynomial(acc);
}

// L_n^{(a)}(s) = sum_k (-1)^k C(n+a, n-k) s^k / k!
inline Polynomial laguerre(int n, const Rational& a) {
    Coeffs acc(static_cast<std::size_t>(n + 1));
    Rational fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= k;
        acc[static_cast<std::size_t>(k)] = (k % 2 ? -1 : 1) * binom(n + a, n - k) / fact;
    }
    return Polynomial(acc);
}

// Physicists' Hermite: H_{n+1} = 2s H_n - 2n H_{n-1}
inline Polynomial hermite(int n) {
    Coeffs prev{Rational(1)};
    if (n == 0) return Polynomial(prev);
    Coeffs cur{Rational(0), Rational(2)};
    for (int k = 1; k < n; ++k) {
        Coeffs next = mul(Coeffs{Rational(0), Rational(2)}, cur);
        add_scaled(next, prev, Rational(-2 * k));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(cur);
}

inline Polynomial classical(FamilyKind kind, int n, const Rational& a = 0, const Rational& b = 0) {
    switch (kind) {
        case FamilyKind::jacobi: return jacobi(n, a, b);
        case FamilyKind::hypergeometric: return shifted_jacobi(n, a, b);
        case FamilyKind::laguerre: return laguerre(n, a);
        case FamilyKind::hermite: return hermite(n);
    }
    return {};
}

// (sigma'', tau') from the textbook forms of each equation.
struct Slopes {
    Rational sigma2;
    Rational tau1;
};

inline Slopes slopes(FamilyKind kind, const Rational& a = 0, const Rational& b = 0) {
    switch (kind) {
        case FamilyKind::jacobi: return {-2, -(a + b + 2)};
        case FamilyKind::hypergeometric: return {-2, -(a + b + 2)};
        case FamilyKind::laguerre: return {0, -1};
        case FamilyKind::hermite: return {0, -2};
    }
    return {};
}

inline Rational lambda(FamilyKind kind, int l, const Rational& a = 0, const Rational& b = 0) {
    const Slopes sl = slopes(kind, a, b);
    return Rational(-Rational(l * (l - 1), 2) * sl.sigma2 - l * sl.tau1);
}

// Integral of the weight.
inline double mass(FamilyKind kind, double a = 0, double b = 0) {
    switch (kind) {
        case FamilyKind::jacobi:
            return std::exp((a + b + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(b + 1) -
                            std::lgamma(a + b + 2));
        case FamilyKind::hypergeometric:
            return std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
        case FamilyKind::laguerre: return std::tgamma(a + 1);
        case FamilyKind::hermite: return std::sqrt(std::numbers::pi);
    }
    return 0;
}

// Squared norm of the conventional polynomial of degree n.
inline double norm_squared(FamilyKind kind, int n, double a = 0, double b = 0) {
    switch (kind) {
        case FamilyKind::jacobi:
        case FamilyKind::hypergeometric: {
            if (n == 0) return mass(kind, a, b);
            const double h = std::exp((a + b + 1) * std::log(2.0) - std::log(2 * n + a + b + 1) +
                                      std::lgamma(n + a + 1) + std::lgamma(n + b + 1) - std::lgamma(n + a + b + 1) -
                                      std::lgamma(n + 1.0));
            return kind == FamilyKind::jacobi ? h : h * std::pow(2.0, -(a + b + 1));
        }
        case FamilyKind::laguerre: return std::exp(std::lgamma(n + a + 1) - std::lgamma(n + 1.0));
        case FamilyKind::hermite:
            return std::sqrt(std::numbers::pi) * std::exp(n * std::log(2.0) + std::lgamma(n + 1.0));
    }
    return 0;
}

// Moments mu_k / mu_0 from int (k sigma s^{k-1} + tau s^k) rho = 0, which is the
// integrated Pearson identity with vanishing boundary terms.
inline std::vector<Rational> moment_ratios(const Polynomial& sigma, const Polynomial& tau, int k_max) {
    std::vector<Rational> mu{Rational(1)};
    const Rational s0 = sigma.coeff(0), s1 = sigma.coeff(1), s2 = sigma.coeff(2);
    const Rational t0 = tau.coeff(0), t1 = tau.coeff(1);
    for (int k = 0; static_cast<int>(mu.size()) <= k_max; ++k) {
        Rational rhs = (k * s1 + t0) * mu[static_cast<std::size_t>(k)];
        if (k > 0) rhs += k * s0 * mu[static_cast<std::size_t>(k - 1)];
        mu.push_back(Rational(-rhs / (k * s2 + t1)));
    }
    return mu;
}

// Ground state of the trigonometric well for alpha = mu - 1/2, beta = eta - 1/2 under s = cos x:
// psi = sin^mu(x/2) cos^eta(x/2). Returns psi''/psi, which is V_0 - lambda_0 with lambda_0 = 0.
inline double poschl_teller_from_ground_state(double mu, double eta, double x) {
    const double u = x / 2;
    const double g = 0.5 * (mu / std::tan(u) - eta * std::tan(u));                   // (ln psi)'
    const double dg = 0.25 * (-mu / std::pow(std::sin(u), 2) - eta / std::pow(std::cos(u), 2));  // (ln psi)''
    return dg + g * g;
}

}  // namespace oracle
