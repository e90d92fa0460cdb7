#include "oracles.hpp"

#include <hyperladder/errors.hpp>
#include <hyperladder/schrodinger.hpp>

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

using namespace hyperladder;

namespace {

constexpr double pi = std::numbers::pi;

FamilySpec jacobi(Rational a, Rational b) { return make_family(FamilyKind::jacobi, {{"alpha", a}, {"beta", b}}); }

FamilySpec poschl_teller(Rational mu, Rational eta) { return jacobi(mu - Rational(1, 2), eta - Rational(1, 2)); }

std::vector<FamilySpec> families() {
    return {jacobi(Rational(1, 2), Rational(3, 2)),
            make_family(FamilyKind::hypergeometric, {{"alpha", Rational(1, 2)}, {"beta", Rational(3, 2)}}),
            make_family(FamilyKind::laguerre, {{"alpha", Rational(3, 2)}}),
            make_family(FamilyKind::hermite)};
}

Interval window(const ChangeOfVariable& cov) {
    Interval w = cov.x_domain;
    if (!std::isfinite(w.lower) && !std::isfinite(w.upper)) return {-6.0, 6.0};
    if (!std::isfinite(w.upper)) w.upper = w.lower + 16.0;
    if (!std::isfinite(w.lower)) w.lower = w.upper - 16.0;
    return w;
}

}  // namespace

TEST_CASE("changes of variable") {
    const ChangeOfVariable j = change_of_variable(jacobi(0, 0));
    CHECK(j.sign == -1);
    CHECK(std::abs(j.s_of_x(pi / 2)) < 1e-16);

    const FamilySpec hyp = make_family(FamilyKind::hypergeometric);
    const ChangeOfVariable h = change_of_variable(hyp);
    CHECK(h.sign == 1);
    CHECK(h.s_of_x(pi / 2) == doctest::Approx(0.5));
    CHECK(h.ds_dx(pi / 2) == doctest::Approx(0.5));

    const FamilySpec lag = make_family(FamilyKind::laguerre);
    const ChangeOfVariable l = change_of_variable(lag);
    for (double x : {0.3, 1.0, 4.5}) {
        CHECK(l.ds_dx(x) == doctest::Approx(x / 2));
        CHECK(l.ds_dx(x) == doctest::Approx(std::sqrt(l.s_of_x(x))));
    }

    for (const auto& f : families()) {
        for (int sign : {1, -1}) {
            const ChangeOfVariable cov = change_of_variable(f, sign);
            CHECK(change_of_variable_defect(f, cov) <= 1e-10);
            // monotone onto the orthogonality interval
            const auto grid = interior_grid(window(cov), 200);
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double a = cov.s_of_x(grid[i - 1]), b = cov.s_of_x(grid[i]);
                CHECK(f.interval.contains(b));
                CHECK(sign * (b - a) > 0);
            }
        }
    }
    CHECK_THROWS_AS(change_of_variable(hyp, 2), DomainError);
}

TEST_CASE("superpotential examples") {
    const FamilySpec well = poschl_teller(1, 1);
    const ChangeOfVariable cov = change_of_variable(well);
    for (double x : interior_grid({0, pi}, 20)) {
        CHECK(superpotential(well, 0, cov, x) == doctest::Approx(1.0 / std::tan(x)).epsilon(1e-13));
        CHECK(potential_value(well, 0, cov, x) == doctest::Approx(-1.0).epsilon(1e-12));
    }

    const FamilySpec h = make_family(FamilyKind::hermite);
    const ChangeOfVariable hc = change_of_variable(h);
    for (double x : {-3.0, -0.5, 0.0, 2.0}) {
        CHECK(superpotential(h, 0, hc, x) == doctest::Approx(x));
        CHECK(potential_value(h, 0, hc, x) == doctest::Approx(x * x - 1.0));
    }
    CHECK_THROWS_AS(superpotential(well, 0, cov, 0.0), DomainError);
    CHECK_THROWS_AS(superpotential(well, 0, cov, 4.0), DomainError);
}

TEST_CASE("trigonometric well from its ground state") {
    const Rational values[] = {Rational(1), Rational(3, 2), Rational(2)};
    for (const auto& mu : values) {
        for (const auto& eta : values) {
            const FamilySpec f = poschl_teller(mu, eta);
            const ChangeOfVariable cov = change_of_variable(f);
            for (int i = 1; i <= 64; ++i) {
                const double x = pi * i / 65.0;
                const double ref = oracle::poschl_teller_from_ground_state(to_double(mu), to_double(eta), x);
                const double w = 0.5 * (to_double(mu) / std::tan(x / 2) - to_double(eta) * std::tan(x / 2));
                CAPTURE(to_string(mu));
                CAPTURE(to_string(eta));
                CAPTURE(x);
                CHECK(std::abs(potential_value(f, 0, cov, x) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
                CHECK(std::abs(superpotential(f, 0, cov, x) - w) <= 1e-12 * std::max(1.0, std::abs(w)));
            }
        }
    }
}

TEST_CASE("ground-state identity and Riccati partners") {
    for (const auto& f : families()) {
        for (int sign : {1, -1}) {
            const ChangeOfVariable cov = change_of_variable(f, sign);
            const auto grid = interior_grid(window(cov), 200, 0.05);
            for (int m = 0; m <= 3; ++m) {
                CAPTURE(f.id());
                CAPTURE(sign);
                CAPTURE(m);
                CHECK(riccati_partner_defect(f, m, cov, grid) <= 1e-7);
                CHECK(riccati_partner_defect(f, m, cov, grid, DerivativeMode::finite_difference) <= 1e-7);
                for (double x : grid) {
                    const double h = 1e-5;
                    const double psi = wavefunction_value(f, m, m, cov, x);
                    const double d = (wavefunction_value(f, m, m, cov, x + h) - wavefunction_value(f, m, m, cov, x - h)) /
                                     (2 * h);
                    const double w = -cov.sign * d / psi;
                    CHECK(std::abs(w - superpotential(f, m, cov, x)) <= 1e-7 * std::max(1.0, std::abs(w)));
                    const double fd = superpotential_derivative(f, m, cov, x, DerivativeMode::finite_difference);
                    const double an = superpotential_derivative(f, m, cov, x);
                    CHECK(std::abs(fd - an) <= 1e-7 * std::max(1.0, std::abs(an)));
                }
            }
        }
    }
}

TEST_CASE("potential profiles") {
    const FamilySpec f = jacobi(Rational(1, 2), Rational(1, 2));
    const ChangeOfVariable cov = change_of_variable(f);
    const auto grid = interior_grid({0, pi}, 50);
    const PotentialProfile p = potential(f, 1, cov, grid);
    CHECK(p.m == 1);
    CHECK(p.sign == -1);
    CHECK(p.lambda_m == eigenvalue(f, 1));
    CHECK(p.flagged.empty());
    CHECK(p.values.size() == grid.size());
    std::vector<double> bad = grid;
    std::swap(bad[0], bad[1]);
    CHECK_THROWS_AS(potential(f, 1, cov, bad), DomainError);
}

TEST_CASE("wavefunctions") {
    const FamilySpec well = poschl_teller(1, 1);
    const ChangeOfVariable cov = change_of_variable(well);
    const auto grid = interior_grid({0, pi}, 401);
    const Wavefunction w = wavefunction(well, 0, 0, cov, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(w.values[i] == doctest::Approx(std::sqrt(2.0 / pi) * std::sin(grid[i])).epsilon(1e-4));

    const FamilySpec h = make_family(FamilyKind::hermite);
    const auto hg = interior_grid({-8, 8}, 801);
    const Wavefunction g = wavefunction(h, 0, 0, change_of_variable(h), hg);
    for (std::size_t i = 0; i < hg.size(); i += 40)
        CHECK(std::abs(g.values[i] - std::pow(pi, -0.25) * std::exp(-hg[i] * hg[i] / 2)) < 1e-6);

    for (const auto& f : families()) {
        const ChangeOfVariable c = change_of_variable(f);
        const auto fine = interior_grid(window(c), 2001);
        for (int l = 0; l <= 3; ++l) {
            for (int m = 0; m <= l; ++m) {
                const Wavefunction wf = wavefunction(f, l, m, c, fine);
                CAPTURE(f.id());
                CAPTURE(l);
                CAPTURE(m);
                CHECK(wf.schrodinger_residual <= 1e-3);
                CHECK(std::abs(wf.values.front()) < 1e-2);
                CHECK(std::abs(wf.values.back()) < 1e-2);
            }
        }
    }
    CHECK_THROWS_AS(wavefunction(well, 1, 2, cov, grid), DomainError);
}

TEST_CASE("ladder-built wavefunctions") {
    for (const auto& f : families()) {
        const ChangeOfVariable cov = change_of_variable(f);
        const auto grid = interior_grid(window(cov), 100, 0.1);
        for (int l = 1; l <= 4; ++l) {
            for (int m = std::max(0, l - 3); m < l; ++m) {
                double peak = 0, diff = 0;
                for (double x : grid) {
                    const double a = wavefunction_value(f, l, m, cov, x);
                    const double b = ladder_wavefunction_value(f, l, m, cov, x);
                    peak = std::max(peak, std::abs(a));
                    diff = std::max(diff, std::abs(a - b));
                }
                CAPTURE(f.id());
                CAPTURE(l);
                CAPTURE(m);
                CHECK(diff <= 1e-6 * peak);
            }
        }
    }
}

TEST_CASE("Numerov examples") {
    auto levels = [](const FamilySpec& f, int count) {
        const ChangeOfVariable cov = change_of_variable(f);
        const RealMap V = [&](double x) { return potential_value(f, 0, cov, x); };
        return numerov_eigenvalues(V, default_clip(V, cov.x_domain), count);
    };
    const auto start = std::chrono::steady_clock::now();
    const double well[] = {0, 3, 8};
    const auto w = levels(poschl_teller(1, 1), 3);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(w[i].energy - well[i]) < 1e-6);
    const double pt[] = {0, 5, 12};
    const auto p = levels(poschl_teller(2, 2), 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(p[i].resolved);
        CHECK(std::abs(p[i].energy - pt[i]) < 1e-6);
    }
    const FamilySpec h = make_family(FamilyKind::hermite);
    const RealMap osc = [](double x) { return x * x - 1.0; };
    const auto o = numerov_eigenvalues(osc, {-12, 12}, 3);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(o[i].energy - 2.0 * i) < 1e-6);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 10.0);

    CHECK_THROWS_AS(numerov_eigenvalues(osc, {-12, 12}, 0), DomainError);
    CHECK_THROWS_AS(numerov_eigenvalues(osc, {0, INFINITY}, 1), DomainError);
}

TEST_CASE("Numerov agrees with the spectrum of every family") {
    // endpoint exponents stay away from the critical -1/(4x^2) case
    const FamilySpec fs[] = {jacobi(Rational(1, 2), Rational(3, 2)),
                             make_family(FamilyKind::hypergeometric, {{"alpha", Rational(1, 2)}, {"beta", Rational(3, 2)}}),
                             make_family(FamilyKind::laguerre, {{"alpha", Rational(1)}}),
                             make_family(FamilyKind::laguerre, {{"alpha", Rational(5, 2)}}),
                             make_family(FamilyKind::hermite)};
    for (const auto& f : fs) {
        for (int m : {0, 1}) {
            const ChangeOfVariable cov = change_of_variable(f);
            const RealMap V = [&](double x) { return potential_value(f, m, cov, x); };
            const auto lv = numerov_eigenvalues(V, default_clip(V, cov.x_domain), 4);
            for (const auto& level : lv) {
                CAPTURE(f.id());
                CAPTURE(m);
                CAPTURE(level.index);
                CHECK(level.resolved);
                CHECK(std::abs(level.energy - to_double(eigenvalue(f, m + level.index))) <= 1e-5);
            }
        }
    }
}

TEST_CASE("Numerov on sampled profiles") {
    const FamilySpec h = make_family(FamilyKind::hermite);
    const ChangeOfVariable cov = change_of_variable(h);
    std::vector<double> grid(8001);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = -12.0 + 24.0 * static_cast<double>(i) / 8000.0;
    const PotentialProfile p = potential(h, 0, cov, grid);
    const auto lv = numerov_eigenvalues(p, 3, {-12, 12});
    for (int i = 0; i < 3; ++i) CHECK(std::abs(lv[i].energy - 2.0 * i) < 1e-6);
}

TEST_CASE("grids and quadrature helpers") {
    const auto g = interior_grid({0, 1}, 3);
    CHECK(g == std::vector<double>{0.25, 0.5, 0.75});
    CHECK_THROWS_AS(interior_grid({0, INFINITY}, 3), DomainError);
    std::vector<double> x(101), y(101);
    for (int i = 0; i <= 100; ++i) {
        x[i] = i / 100.0;
        y[i] = x[i] * x[i] * x[i];
    }
    CHECK(simpson(x, y) == doctest::Approx(0.25).epsilon(1e-14));
}
