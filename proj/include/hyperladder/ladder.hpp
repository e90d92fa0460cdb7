#pragma once

#include "hyperladder/family.hpp"

#include <string>

namespace hyperladder {

/// Associated special function Phi_{l,m} = scale * kappa^m * part, kappa = sqrt(sigma).
///
/// Operators act on the (m, part) pair only; kappa is never evaluated, with
/// kappa^2 = sigma and kappa*kappa' = sigma'/2 used as rewrite rules.
struct ASF {
    FamilySpec family;
    int l = 0;
    int m = 0;
    Polynomial part;
    Rational scale{1};

    /// part multiplied into the scale, i.e. the exact polynomial in front of kappa^m.
    Polynomial scaled_part() const { return part * scale; }
};

/// Phi_{l,m}: part = m-th derivative of Phi_l. Throws DomainError when m > l.
ASF asf(const FamilySpec& family, int l, int m);

/// Polynomial part of A_m phi = (kappa d/ds - m kappa') phi, which is part'.
/// No range check: at m = l this is the zero polynomial.
Polynomial raising_action(const ASF& phi);

/// A_m Phi_{l,m} = Phi_{l,m+1}. Throws DomainError when m >= l.
ASF raise(const ASF& phi);

/// Polynomial part of A_{m-1}^+ phi for phi in sector m: -sigma Q' - tau Q - (m-1) sigma' Q.
Polynomial lowering_action(const ASF& phi);

/// A_{m-1}^+ Phi_{l,m} = (lambda_l - lambda_{m-1}) Phi_{l,m-1}. Throws DomainError when m = 0.
ASF lower(const ASF& phi);

/// (H_m - lambda_m) reduced to the kappa^m sector: L_m P = -sigma P'' - (tau + m sigma') P'.
ASF apply_hm(const ASF& phi);

/// Phi_{l,m} built from Phi_{l,l} by lowering steps divided by (lambda_l - lambda_k).
ASF ladder_product(const FamilySpec& family, int l, int m);

/// Outcome of one exact identity check.
struct LadderReport {
    std::string family;
    std::string identity;
    int l = 0;
    int m = 0;
    bool passed = false;
    /// max |coefficient| of the residual polynomial; zero iff passed.
    Rational residual{0};
    std::string detail;
};

/// max |coefficient|; zero exactly for the zero polynomial.
Rational residual_norm(const Polynomial& p);

/// sigma P_{m+1} + (tau + (m-1) sigma') P_m + (lambda_l - lambda_{m-1}) P_{m-1} = 0, 1 <= m <= l-1.
LadderReport three_term_asf_check(const FamilySpec& family, int l, int m);

/// lower(raise) and raise(lower) equal (lambda_l - lambda_m) id, r_{m+1} = -m sigma'' - tau',
/// and lambda_l = sum r_k. Requires 0 <= m < l.
LadderReport factorization_check(const FamilySpec& family, int l, int m);

/// r_{m+1} = lambda_{m+1} - lambda_m = -m sigma'' - tau' for m < m_max, and telescoping sums.
LadderReport shape_invariance_check(const FamilySpec& family, int m_max);

/// A_m R_m = R_{m+1} A_m and R_m A_m^+ = A_m^+ R_{m+1} on Phi_{l,m}, R_m acting as -sigma'' l - tau'.
LadderReport intertwining_check(const FamilySpec& family, int l, int m);

/// sigma Phi_l'' + tau Phi_l' + lambda_l Phi_l = 0 and deg Phi_l = l.
LadderReport ode_check(const FamilySpec& family, int l);

/// s Phi_l - alpha_l Phi_{l+1} - beta_l Phi_l - gamma_l Phi_{l-1} = 0 for l >= 1.
LadderReport recurrence_check(const FamilySpec& family, int l);

/// ladder_product(family, l, m) equals asf(family, l, m) exactly.
LadderReport ladder_product_check(const FamilySpec& family, int l, int m);

}  // namespace hyperladder
