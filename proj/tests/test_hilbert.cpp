#include "oracles.hpp"

#include <hyperladder/errors.hpp>
#include <hyperladder/hilbert.hpp>

#include <doctest.h>

#include <random>

using namespace hyperladder;

namespace {

FamilySpec legendre() { return make_family(FamilyKind::jacobi); }

struct Case {
    FamilySpec family;
    double a;
    double b;
};

std::vector<Case> cases() {
    return {{legendre(), 0, 0},
            {make_family(FamilyKind::jacobi, {{"alpha", Rational(3, 2)}, {"beta", Rational(1, 2)}}), 1.5, 0.5},
            {make_family(FamilyKind::hypergeometric, {{"alpha", Rational(1, 2)}, {"beta", Rational(1, 2)}}), 0.5, 0.5},
            {make_family(FamilyKind::laguerre, {{"alpha", Rational(5, 2)}}), 2.5, 0},
            {make_family(FamilyKind::hermite), 0, 0}};
}

}  // namespace

TEST_CASE("inner product examples") {
    const FamilySpec f = legendre();
    CHECK(std::abs(inner_product(asf(f, 1, 0), asf(f, 0, 0))) < 1e-13);
    CHECK(inner_product(asf(f, 2, 1), asf(f, 2, 1)) == doctest::Approx(12.0 / 5.0).epsilon(1e-14));
    CHECK(std::abs(inner_product(asf(f, 2, 1), asf(f, 3, 1))) < 1e-12);
    CHECK_THROWS_AS(inner_product(asf(f, 2, 1), asf(f, 2, 0)), DomainError);
    CHECK_THROWS_AS(inner_product(asf(f, 6, 0), asf(f, 6, 0), gauss_rule(f, 3)), DomainError);

    CHECK(norm(asf(f, 2, 1)) == doctest::Approx(std::sqrt(12.0 / 5.0)).epsilon(1e-14));
    CHECK(norm(asf(f, 2, 1)) == doctest::Approx(std::sqrt(6.0) * std::sqrt(2.0 / 5.0)).epsilon(1e-14));
    CHECK(norm(asf(f, 0, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("norms against closed forms") {
    // ||Phi_{l,m}||^2 = h_l * prod_{k<m} (lambda_l - lambda_k)
    for (const auto& c : cases()) {
        for (int l = 0; l <= 12; ++l) {
            for (int m = 0; m <= l; ++m) {
                double expected = oracle::norm_squared(c.family.kind, l, c.a, c.b);
                for (int k = 0; k < m; ++k) expected *= to_double(eigenvalue(c.family, l) - eigenvalue(c.family, k));
                const double got = std::pow(norm(asf(c.family, l, m)), 2);
                CAPTURE(c.family.id());
                CAPTURE(l);
                CAPTURE(m);
                CHECK(std::abs(got - expected) <= 1e-11 * expected);
            }
        }
    }
}

TEST_CASE("sweeps") {
    for (const auto& c : cases()) {
        CAPTURE(c.family.id());
        CHECK(orthogonality_sweep(c.family, 15, 10).passed);
        CHECK(norm_ladder_sweep(c.family, 15).passed);
        CHECK(adjointness_sweep(c.family, 12, 6).passed);
        CHECK(creation_chain_sweep(c.family, 0, 15).passed);
        CHECK(creation_chain_sweep(c.family, 2, 15).passed);
    }
}

TEST_CASE("basis operators") {
    const FamilySpec h = make_family(FamilyKind::hermite);
    const RealVector ground = basis_state(0, 0, 8);
    for (double c : annihilate(h, ground).coeffs) CHECK(c == 0.0);
    const RealVector up = create(h, ground);
    CHECK(up.coeffs[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(up.truncation() == 9);

    CHECK(level_gap(legendre(), 0, 2) == 6.0);
    CHECK(ladder_factor(legendre(), 0, 2) == doctest::Approx(std::sqrt(6.0)));

    const RealVector e = basis_state(1, 3, 10);
    const RealVector shifted = shift_u(e, 1);
    CHECK(shifted.m == 2);
    CHECK(shifted.coeffs == e.coeffs);
    CHECK(shift_u(shifted, -1).m == 1);
    CHECK_THROWS_AS(shift_u(basis_state(0, 0, 4), -1), DomainError);
    CHECK_THROWS_AS(shift_u(e, 2), DomainError);

    std::mt19937 rng(99);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        RealVector u{0, std::vector<double>(20)}, v{0, std::vector<double>(21)};
        for (auto& x : u.coeffs) x = g(rng);
        for (auto& x : v.coeffs) x = g(rng);
        const RealVector cu = create(legendre(), u);
        const RealVector av = annihilate(legendre(), v);
        double lhs = 0, rhs = 0, scale = 0;
        for (std::size_t i = 0; i < v.coeffs.size(); ++i) lhs += cu.coeffs[i] * v.coeffs[i];
        for (std::size_t i = 0; i < u.coeffs.size(); ++i) rhs += u.coeffs[i] * av.coeffs[i];
        for (std::size_t i = 0; i < v.coeffs.size(); ++i) scale += std::abs(cu.coeffs[i] * v.coeffs[i]);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        CHECK(vector_norm(shift_u(u, 1)) == vector_norm(u));
    }
}

TEST_CASE("commutators") {
    // [a, a^+] on |l,0>: e_{n+1} - e_n, which is 2 for the oscillator and 2l + 2 for Legendre.
    const FamilySpec h = make_family(FamilyKind::hermite);
    for (int l = 0; l < 10; ++l) {
        CHECK(level_gap(h, 0, l + 1) - level_gap(h, 0, l) == 2.0);
        CHECK(level_gap(legendre(), 0, l + 1) - level_gap(legendre(), 0, l) == 2.0 * l + 2.0);
    }
    for (const auto& c : cases()) {
        for (int m = 0; m <= 3; ++m) {
            const CheckReport r = commutator_checks(c.family, m, 30);
            CAPTURE(c.family.id());
            CAPTURE(m);
            CHECK(r.passed());
            CHECK(r.results.size() >= 14);
        }
    }
}

TEST_CASE("algebra classification") {
    CHECK(classify_algebra(legendre()).tag == AlgebraTag::su11);
    CHECK(classify_algebra(make_family(FamilyKind::hermite)).tag == AlgebraTag::heisenberg_weyl);
    CHECK(classify_algebra(make_family(FamilyKind::laguerre)).tag == AlgebraTag::heisenberg_weyl);
    const AlgebraClass j = classify_algebra(legendre());
    CHECK_FALSE(j.k_checks.empty());
    for (const auto& r : j.k_checks) CHECK(r.passed);
    CHECK(to_string(AlgebraTag::su11) == "su11");

    FamilySpec bad = legendre();
    bad.sigma = Polynomial{Rational(1), Rational(0), Rational(1)};
    CHECK_THROWS_AS(classify_algebra(bad), DomainError);
}
