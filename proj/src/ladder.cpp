#include "hyperladder/ladder.hpp"

#include "hyperladder/errors.hpp"

namespace hyperladder {

namespace {

LadderReport make_report(const FamilySpec& family, std::string identity, int l, int m, const Polynomial& residual) {
    LadderReport r;
    r.family = family.id();
    r.identity = std::move(identity);
    r.l = l;
    r.m = m;
    r.residual = residual_norm(residual);
    r.passed = residual.is_zero();
    return r;
}

void fold(LadderReport& into, const Polynomial& residual, const std::string& what) {
    Rational n = residual_norm(residual);
    if (n > into.residual) into.residual = n;
    if (!residual.is_zero()) {
        into.passed = false;
        if (into.detail.empty()) into.detail = what;
    }
}

}  // namespace

Rational residual_norm(const Polynomial& p) {
    Rational worst(0);
    for (const auto& c : p.coeffs()) worst = std::max(worst, Rational(abs(c)));
    return worst;
}

ASF asf(const FamilySpec& family, int l, int m) {
    if (l < 0 || m < 0) throw DomainError("asf indices must be nonnegative");
    if (m > l) throw DomainError("asf requires m <= l (got l=" + std::to_string(l) + ", m=" + std::to_string(m) + ")");
    return ASF{family, l, m, classical_polynomial(family, l).derivative(m), Rational(1)};
}

Polynomial raising_action(const ASF& phi) { return phi.part.derivative(); }

ASF raise(const ASF& phi) {
    if (phi.m >= phi.l)
        throw DomainError("raise requires m < l; A_l annihilates Phi_{l,l} (l=" + std::to_string(phi.l) + ")");
    ASF out = phi;
    out.m = phi.m + 1;
    out.part = raising_action(phi);
    return out;
}

Polynomial lowering_action(const ASF& phi) {
    const FamilySpec& f = phi.family;
    const Polynomial& q = phi.part;
    return -(f.sigma * q.derivative()) - f.tau * q - f.sigma.derivative() * q * Rational(phi.m - 1);
}

ASF lower(const ASF& phi) {
    if (phi.m <= 0) throw DomainError("lower requires m >= 1");
    ASF out = phi;
    out.m = phi.m - 1;
    out.part = lowering_action(phi);
    return out;
}

ASF apply_hm(const ASF& phi) {
    const FamilySpec& f = phi.family;
    const Polynomial& p = phi.part;
    ASF out = phi;
    out.part = -(f.sigma * p.derivative(2)) - (f.tau + f.sigma.derivative() * Rational(phi.m)) * p.derivative();
    return out;
}

ASF ladder_product(const FamilySpec& family, int l, int m) {
    if (m < 0 || m >= l) throw DomainError("ladder_product requires 0 <= m < l");
    ASF phi = asf(family, l, l);
    const Rational lam_l = eigenvalue(family, l);
    for (int k = l - 1; k >= m; --k) {
        phi = lower(phi);
        phi.part *= 1 / (lam_l - eigenvalue(family, k));
    }
    return phi;
}

LadderReport three_term_asf_check(const FamilySpec& family, int l, int m) {
    if (m < 1 || m > l - 1)
        throw DomainError("three_term_asf_check requires 1 <= m <= l-1 (got l=" + std::to_string(l) +
                          ", m=" + std::to_string(m) + ")");
    const Polynomial phi = classical_polynomial(family, l);
    const Polynomial residual = family.sigma * phi.derivative(m + 1) +
                                (family.tau + family.sigma.derivative() * Rational(m - 1)) * phi.derivative(m) +
                                phi.derivative(m - 1) * (eigenvalue(family, l) - eigenvalue(family, m - 1));
    return make_report(family, "three_term_asf", l, m, residual);
}

LadderReport factorization_check(const FamilySpec& family, int l, int m) {
    if (m < 0 || m >= l) throw DomainError("factorization_check requires 0 <= m < l");
    const Rational gap = eigenvalue(family, l) - eigenvalue(family, m);

    LadderReport r = make_report(family, "factorization", l, m, {});

    const ASF phi_m = asf(family, l, m);
    const ASF phi_m1 = asf(family, l, m + 1);

    // A_m Phi_{l,m} = Phi_{l,m+1}.
    fold(r, raise(phi_m).part - phi_m1.part, "raise");
    // Lowering: A_m^+ Phi_{l,m+1} = gap Phi_{l,m}.
    fold(r, lower(phi_m1).part - phi_m.part * gap, "lower");
    // A_m^+ A_m = H_m - lambda_m and A_m A_m^+ = H_{m+1} - lambda_m on the eigenfunctions.
    fold(r, lower(raise(phi_m)).part - phi_m.part * gap, "lower(raise)");
    fold(r, raise(lower(phi_m1)).part - phi_m1.part * gap, "raise(lower)");
    fold(r, apply_hm(phi_m).part - phi_m.part * gap, "H_m");

    // Shape invariance r_{m+1} and telescoping.
    const Rational r_next = eigenvalue(family, m + 1) - eigenvalue(family, m);
    const Rational r_formula = -Rational(m) * family.sigma_second() - family.tau_slope();
    fold(r, Polynomial::constant(r_next - r_formula), "shape invariance");
    Rational telescoped(0);
    for (int k = 1; k <= l; ++k) telescoped += -Rational(k - 1) * family.sigma_second() - family.tau_slope();
    fold(r, Polynomial::constant(telescoped - eigenvalue(family, l)), "telescoping");
    return r;
}

LadderReport shape_invariance_check(const FamilySpec& family, int m_max) {
    LadderReport r = make_report(family, "shape_invariance", m_max, m_max, {});
    Rational running(0);
    for (int m = 0; m < m_max; ++m) {
        const Rational r_next = eigenvalue(family, m + 1) - eigenvalue(family, m);
        const Rational r_formula = -Rational(m) * family.sigma_second() - family.tau_slope();
        fold(r, Polynomial::constant(r_next - r_formula), "r_" + std::to_string(m + 1));
        running += r_formula;
        fold(r, Polynomial::constant(running - eigenvalue(family, m + 1)), "sum r_k");
    }
    return r;
}

LadderReport intertwining_check(const FamilySpec& family, int l, int m) {
    if (m < 0 || m >= l) throw DomainError("intertwining_check requires 0 <= m < l");
    LadderReport r = make_report(family, "intertwining", l, m, {});
    auto r_value = [&](int level) -> Rational { return -family.sigma_second() * level - family.tau_slope(); };
    // R = -sigma'' N - tau' with N reading the l label of the eigenfunction.
    auto apply_r = [&](ASF phi) {
        phi.part *= r_value(phi.l);
        return phi;
    };
    const ASF phi_m = asf(family, l, m);
    const ASF phi_m1 = asf(family, l, m + 1);
    fold(r, raise(apply_r(phi_m)).part - apply_r(raise(phi_m)).part, "A_m R_m = R_{m+1} A_m");
    fold(r, apply_r(lower(phi_m1)).part - lower(apply_r(phi_m1)).part, "R_m A_m^+ = A_m^+ R_{m+1}");
    // U_m R_m U_m^+ = R_{m+1} + sigma'' on |l+1, m+1>: U_m^+ maps it to |l, m>.
    fold(r, Polynomial::constant(r_value(l) - (r_value(l + 1) + family.sigma_second())), "U_m R_m U_m^+");
    return r;
}

LadderReport ode_check(const FamilySpec& family, int l) {
    const Polynomial phi = classical_polynomial(family, l);
    LadderReport r = make_report(family, "ode", l, 0, ode_residual(family, phi, eigenvalue(family, l)));
    if (phi.degree() != l) {
        r.passed = false;
        r.detail = "degree " + std::to_string(phi.degree());
    }
    return r;
}

LadderReport recurrence_check(const FamilySpec& family, int l) {
    const auto rc = recurrence_coefficients(family, l);
    const Polynomial residual = Polynomial::identity() * classical_polynomial(family, l) -
                                classical_polynomial(family, l + 1) * rc.alpha -
                                classical_polynomial(family, l) * rc.beta -
                                classical_polynomial(family, l - 1) * rc.gamma;
    return make_report(family, "recurrence", l, 0, residual);
}

LadderReport ladder_product_check(const FamilySpec& family, int l, int m) {
    const ASF built = ladder_product(family, l, m);
    return make_report(family, "ladder_product", l, m, built.scaled_part() - asf(family, l, m).part);
}

}  // namespace hyperladder
