#include "hyperladder/hilbert.hpp"

#include "hyperladder/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hyperladder {

namespace {

struct MonicRecurrence {
    std::vector<long double> diag;     // b_k, k = 0..n-1
    std::vector<long double> offdiag;  // sqrt(c_k), k = 1..n (offdiag[k-1])
};

MonicRecurrence monic_recurrence(const FamilySpec& family, int n) {
    // Phi_k = lead_k p_k with p_k monic: s p_k = p_{k+1} + beta_k p_k + alpha_{k-1} gamma_k p_{k-1}.
    MonicRecurrence out;
    RecurrenceCoefficients prev;
    for (int k = 0; k <= n; ++k) {
        const RecurrenceCoefficients rc = recurrence_coefficients_from_zero(family, k);
        if (k < n) out.diag.push_back(static_cast<long double>(rc.beta.get_d()));
        if (k >= 1) {
            const Rational c = prev.alpha * rc.gamma;
            if (c <= 0) throw InternalError("nonpositive Jacobi-matrix entry for " + family.id());
            // exact rational -> long double via numerator/denominator keeps a few extra bits
            const long double cv = static_cast<long double>(c.get_num().get_d()) /
                                   static_cast<long double>(c.get_den().get_d());
            out.offdiag.push_back(std::sqrt(cv));
        }
        prev = rc;
    }
    return out;
}

struct OrthonormalValues {
    long double sum_squares;  // sum_{k<n} phat_k(x)^2
    long double value;        // phat_n(x)
    long double derivative;   // phat_n'(x)
};

OrthonormalValues evaluate_orthonormal(const MonicRecurrence& rec, long double mass, long double x) {
    const std::size_t n = rec.diag.size();
    long double p_prev = 0.0L, p = 1.0L / std::sqrt(mass);
    long double d_prev = 0.0L, d = 0.0L;
    long double sum = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        sum += p * p;
        const long double back = k == 0 ? 0.0L : rec.offdiag[k - 1];
        const long double p_next = ((x - rec.diag[k]) * p - back * p_prev) / rec.offdiag[k];
        const long double d_next = (p + (x - rec.diag[k]) * d - back * d_prev) / rec.offdiag[k];
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    return {sum, p, d};
}

std::mutex& cache_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<std::pair<std::string, int>, QuadratureRule>& rule_cache() {
    static std::map<std::pair<std::string, int>, QuadratureRule> cache;
    return cache;
}

std::map<std::string, double>& norm_cache() {
    static std::map<std::string, double> cache;
    return cache;
}

Polynomial integrand(const ASF& f, const ASF& g) {
    if (f.m != g.m)
        throw DomainError("inner product of ASF with different m (" + std::to_string(f.m) + " vs " +
                          std::to_string(g.m) + ") is not a weighted polynomial");
    if (f.family.id() != g.family.id()) throw DomainError("inner product across different families");
    return f.scaled_part() * g.scaled_part() * f.family.sigma.pow(static_cast<unsigned>(f.m));
}

int nodes_for_degree(int degree) { return std::max(1, (degree + 2) / 2); }

Rational r_value(const FamilySpec& family, int l) { return -family.sigma_second() * l - family.tau_slope(); }

double relative(double residual, double scale) { return residual / std::max(1.0, scale); }

RealVector zeros(int m, std::size_t size) { return RealVector{m, std::vector<double>(size, 0.0)}; }

RealVector combine(const RealVector& a, double ca, const RealVector& b, double cb) {
    RealVector out = zeros(a.m, std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += ca * a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += cb * b.coeffs[i];
    return out;
}

// Diagonal operator acting as f(label) on |label, v.m>.
template <class F>
RealVector diagonal(const RealVector& v, F&& f) {
    RealVector out = v;
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) out.coeffs[n] *= f(v.m + static_cast<int>(n));
    return out;
}

void record(IdentityResult& r, double value) {
    r.worst = std::max(r.worst, value);
    if (!(value <= r.tolerance)) r.passed = false;
}

void record_exact(IdentityResult& r, bool ok, const std::string& where) {
    if (!ok) {
        r.passed = false;
        if (r.detail.empty()) r.detail = where;
        r.worst = std::max(r.worst, 1.0);
    }
}

}  // namespace

QuadratureRule gauss_rule(const FamilySpec& family, int n) {
    if (n < 1) throw DomainError("gauss_rule needs at least one node");
    const auto key = std::make_pair(family.id(), n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        if (auto it = rule_cache().find(key); it != rule_cache().end()) return it->second;
    }

    const MonicRecurrence rec = monic_recurrence(family, n);
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag[k] = static_cast<double>(rec.diag[static_cast<std::size_t>(k)]);
    for (int k = 0; k + 1 < n; ++k) sub[k] = static_cast<double>(rec.offdiag[static_cast<std::size_t>(k)]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("Jacobi-matrix eigensolver did not converge");

    const long double mass = total_mass(family);
    QuadratureRule rule;
    rule.exact_degree = 2 * n - 1;
    for (int j = 0; j < n; ++j) {
        long double x = solver.eigenvalues()[j];
        for (int it = 0; it < 3; ++it) {
            const auto v = evaluate_orthonormal(rec, mass, x);
            if (v.derivative == 0.0L) break;
            x -= v.value / v.derivative;
        }
        const auto v = evaluate_orthonormal(rec, mass, x);
        const double w = static_cast<double>(1.0L / v.sum_squares);
        if (!(w > 0.0) || !std::isfinite(w)) throw NumericError("nonpositive Gauss weight for " + family.id());
        rule.nodes.push_back(static_cast<double>(x));
        rule.weights.push_back(w);
    }

    std::lock_guard<std::mutex> lock(cache_mutex());
    return rule_cache().emplace(key, std::move(rule)).first->second;
}

double integrate(const Polynomial& p, const QuadratureRule& rule) {
    if (p.degree() > rule.exact_degree)
        throw DomainError("integrand degree " + std::to_string(p.degree()) + " exceeds rule exactness " +
                          std::to_string(rule.exact_degree));
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * p.evaluate_exact(rule.nodes[i]);
    return acc;
}

double inner_product(const ASF& f, const ASF& g, const QuadratureRule& rule) { return integrate(integrand(f, g), rule); }

double inner_product(const ASF& f, const ASF& g) {
    const Polynomial p = integrand(f, g);
    return integrate(p, gauss_rule(f.family, nodes_for_degree(p.degree())));
}

double inner_product(const RealFunction& f, const RealFunction& g, const QuadratureRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]) * g(rule.nodes[i]);
    return acc;
}

double norm(const ASF& phi) {
    const std::string key = phi.family.id() + "|" + std::to_string(phi.m) + "|" + phi.scaled_part().to_string();
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        if (auto it = norm_cache().find(key); it != norm_cache().end()) return it->second;
    }
    const double value = std::sqrt(inner_product(phi, phi));
    std::lock_guard<std::mutex> lock(cache_mutex());
    norm_cache().emplace(key, value);
    return value;
}

double level_gap(const FamilySpec& family, int m, int n) {
    return to_double(eigenvalue(family, m + n) - eigenvalue(family, m));
}

double ladder_factor(const FamilySpec& family, int m, int n) { return std::sqrt(level_gap(family, m, n)); }

RealVector basis_state(int m, int n, int truncation) {
    RealVector v = zeros(m, static_cast<std::size_t>(std::max(truncation, n + 1)));
    v.coeffs[static_cast<std::size_t>(n)] = 1.0;
    return v;
}

bool CheckReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

CheckReport commutator_checks(const FamilySpec& family, int m, int l_max, double coeff_tol) {
    if (m < 0 || l_max <= m) throw DomainError("commutator_checks requires l_max > m >= 0");
    const Rational s2 = family.sigma_second();
    auto lam = [&](int l) { return eigenvalue(family, l); };
    auto R = [&](int l) { return r_value(family, l); };

    CheckReport report;
    report.family = family.id();
    auto exact = [&](std::string name) {
        IdentityResult r;
        r.identity = std::move(name);
        r.exact = true;
        return r;
    };
    IdentityResult x_comm = exact("[a,a+]=R"), x_plus = exact("[a+,R]=s''a+"), x_minus = exact("[a,R]=-s''a"),
                   x_ha = exact("[H,a]=-Ra"), x_hap = exact("[H,a+]=a+R"), x_u = exact("URU+=R'+s''"),
                   x_fact = exact("H-lm=a+a");

    for (int l = m; l <= l_max; ++l) {
        const std::string at = "l=" + std::to_string(l);
        const Rational down = lam(l) - lam(m);  // e_n
        const Rational up = lam(l + 1) - lam(m);
        record_exact(x_comm, up - down == R(l), at);
        record_exact(x_plus, R(l) - R(l + 1) == s2, at);
        if (l > m) {
            record_exact(x_minus, R(l) - R(l - 1) == -s2, at);
            record_exact(x_ha, lam(l - 1) - lam(l) == -R(l - 1), at);
        }
        record_exact(x_hap, lam(l + 1) - lam(l) == R(l), at);
        record_exact(x_u, R(l) == R(l + 1) + s2, at);
        record_exact(x_fact, lam(l) - lam(m) == down, at);
    }

    auto numeric = [&](std::string name) {
        IdentityResult r;
        r.identity = std::move(name) + " (coeff)";
        r.tolerance = coeff_tol;
        return r;
    };
    IdentityResult n_comm = numeric("[a,a+]=R"), n_plus = numeric("[a+,R]=s''a+"), n_minus = numeric("[a,R]=-s''a"),
                   n_ha = numeric("[H,a]=-Ra"), n_hap = numeric("[H,a+]=a+R"), n_u = numeric("URU+=R'+s''"),
                   n_fact = numeric("H-lm=a+a");

    const double s2d = s2.get_d();
    const double lam_m = lam(m).get_d();
    auto Rop = [&](const RealVector& v) { return diagonal(v, [&](int l) { return R(l).get_d(); }); };
    auto Hop = [&](const RealVector& v) { return diagonal(v, [&](int l) { return lam(l).get_d(); }); };
    auto a = [&](const RealVector& v) { return annihilate(family, v); };
    auto ap = [&](const RealVector& v) { return create(family, v); };

    const int trunc = l_max - m + 2;
    for (int l = m; l <= l_max; ++l) {
        const RealVector v = basis_state(m, l - m, trunc);
        auto check = [&](IdentityResult& r, const RealVector& lhs1, const RealVector& lhs2, const RealVector& rhs,
                         double rhs_coeff) {
            const RealVector lhs = combine(lhs1, 1.0, lhs2, -1.0);
            const RealVector res = combine(lhs, 1.0, rhs, -rhs_coeff);
            const double scale = std::max({vector_norm(lhs1), vector_norm(lhs2), std::abs(rhs_coeff) * vector_norm(rhs)});
            record(r, relative(vector_norm(res), scale));
        };
        check(n_comm, a(ap(v)), ap(a(v)), Rop(v), 1.0);
        check(n_plus, ap(Rop(v)), Rop(ap(v)), ap(v), s2d);
        check(n_minus, a(Rop(v)), Rop(a(v)), a(v), -s2d);
        check(n_ha, Hop(a(v)), a(Hop(v)), Rop(a(v)), -1.0);
        check(n_hap, Hop(ap(v)), ap(Hop(v)), ap(Rop(v)), 1.0);
        check(n_fact, Hop(v), combine(v, lam_m, v, 0.0), ap(a(v)), 1.0);

        // U_m R_m U_m^+ on the (m+1)-sector state |l+1, m+1>.
        const RealVector w = basis_state(m + 1, l - m, trunc);
        const RealVector lhs = shift_u(Rop(shift_u(w, -1)), +1);
        const RealVector rhs = combine(Rop(w), 1.0, w, s2d);
        record(n_u, relative(vector_norm(combine(lhs, 1.0, rhs, -1.0)), std::max(vector_norm(lhs), vector_norm(rhs))));
    }

    report.results = {x_comm, x_plus, x_minus, x_ha, x_hap, x_u, x_fact,
                      n_comm, n_plus, n_minus, n_ha, n_hap, n_u, n_fact};
    return report;
}

std::string_view to_string(AlgebraTag tag) { return tag == AlgebraTag::su11 ? "su11" : "heisenberg_weyl"; }

AlgebraClass classify_algebra(const FamilySpec& family, int m, int l_max, double coeff_tol) {
    const Rational s2 = family.sigma_second();
    if (s2 > 0) throw DomainError("sigma'' > 0 is outside the admissible families");
    if (s2 == 0) return {AlgebraTag::heisenberg_weyl, {}};

    AlgebraClass out{AlgebraTag::su11, {}};
    const Rational k2 = 2 / abs(s2);  // K_+ K_- carries (2/|sigma''|)
    auto K0 = [&](int l) -> Rational { return -r_value(family, l) / s2; };
    auto e = [&](int n) -> Rational { return eigenvalue(family, m + n) - eigenvalue(family, m); };

    IdentityResult x_plus{"[K0,K+]=K+", true, true, 0.0, 0.0, {}}, x_minus{"[K0,K-]=-K-", true, true, 0.0, 0.0, {}},
        x_pm{"[K+,K-]=-2K0", true, true, 0.0, 0.0, {}};
    for (int l = m; l <= l_max; ++l) {
        const int n = l - m;
        const std::string at = "l=" + std::to_string(l);
        record_exact(x_plus, K0(l + 1) - K0(l) == 1, at);
        if (n > 0) record_exact(x_minus, K0(l - 1) - K0(l) == -1, at);
        record_exact(x_pm, k2 * (e(n) - e(n + 1)) == -2 * K0(l), at);
    }

    IdentityResult n_plus{"[K0,K+]=K+ (coeff)", true, false, 0.0, coeff_tol, {}},
        n_minus{"[K0,K-]=-K- (coeff)", true, false, 0.0, coeff_tol, {}},
        n_pm{"[K+,K-]=-2K0 (coeff)", true, false, 0.0, coeff_tol, {}};
    const double kf = std::sqrt(k2.get_d());
    auto Kp = [&](const RealVector& v) {
        RealVector out = create(family, v);
        for (auto& c : out.coeffs) c *= kf;
        return out;
    };
    auto Km = [&](const RealVector& v) {
        RealVector out = annihilate(family, v);
        for (auto& c : out.coeffs) c *= kf;
        return out;
    };
    auto Kz = [&](const RealVector& v) { return diagonal(v, [&](int l) { return K0(l).get_d(); }); };
    const int trunc = l_max - m + 2;
    for (int l = m; l <= l_max; ++l) {
        const RealVector v = basis_state(m, l - m, trunc);
        auto check = [&](IdentityResult& r, const RealVector& p1, const RealVector& p2, const RealVector& rhs) {
            const RealVector res = combine(combine(p1, 1.0, p2, -1.0), 1.0, rhs, -1.0);
            record(r, relative(vector_norm(res), std::max({vector_norm(p1), vector_norm(p2), vector_norm(rhs)})));
        };
        check(n_plus, Kz(Kp(v)), Kp(Kz(v)), Kp(v));
        const RealVector km = Km(v);
        check(n_minus, Kz(km), Km(Kz(v)), combine(km, -1.0, km, 0.0));
        const RealVector k0v = Kz(v);
        check(n_pm, Kp(Km(v)), Km(Kp(v)), combine(k0v, -2.0, k0v, 0.0));
    }
    out.k_checks = {x_plus, x_minus, x_pm, n_plus, n_minus, n_pm};
    return out;
}

IdentityResult orthogonality_sweep(const FamilySpec& family, int l_max, int m_max, double tol) {
    IdentityResult r{"orthogonality", true, false, 0.0, tol, {}};
    for (int m = 0; m <= m_max; ++m) {
        for (int l = m; l <= l_max; ++l) {
            const ASF f = asf(family, l, m);
            for (int k = l + 1; k <= l_max; ++k) {
                const ASF g = asf(family, k, m);
                const double value = std::abs(inner_product(f, g)) / (norm(f) * norm(g));
                record(r, value);
                if (!(value <= tol) && r.detail.empty())
                    r.detail = "l=" + std::to_string(l) + ",k=" + std::to_string(k) + ",m=" + std::to_string(m);
            }
        }
    }
    return r;
}

IdentityResult norm_ladder_sweep(const FamilySpec& family, int l_max, double tol) {
    IdentityResult r{"norm_ladder", true, false, 0.0, tol, {}};
    for (int l = 1; l <= l_max; ++l) {
        for (int m = 0; m < l; ++m) {
            const double ratio = norm(asf(family, l, m + 1)) / norm(asf(family, l, m));
            const double expected = std::sqrt(to_double(eigenvalue(family, l) - eigenvalue(family, m)));
            const double value = std::abs(ratio - expected) / expected;
            record(r, value);
            if (!(value <= tol) && r.detail.empty()) r.detail = "l=" + std::to_string(l) + ",m=" + std::to_string(m);
        }
    }
    return r;
}

IdentityResult adjointness_sweep(const FamilySpec& family, int l_max, int m_max, double tol) {
    IdentityResult r{"adjointness", true, false, 0.0, tol, {}};
    for (int m = 0; m <= m_max; ++m) {
        for (int l = m; l <= l_max; ++l) {
            const ASF phi = asf(family, l, m);
            ASF a_phi = phi;
            a_phi.m = m + 1;
            a_phi.part = raising_action(phi);
            for (int k = m + 1; k <= l_max; ++k) {
                const ASF psi = asf(family, k, m + 1);
                const ASF lowered = lower(psi);
                const double lhs = inner_product(a_phi, psi);
                const double rhs = inner_product(phi, lowered);
                const double scale = norm(phi) * norm(lowered);
                record(r, std::abs(lhs - rhs) / std::max(scale, 1e-300));
            }
        }
    }
    return r;
}

IdentityResult creation_chain_sweep(const FamilySpec& family, int m, int l_max, double tol) {
    IdentityResult r{"creation_chain", true, false, 0.0, tol, {}};
    const int size = l_max - m + 1;
    for (int l = m; l <= l_max; ++l) {
        RealVector v = basis_state(m, 0, 1);
        double prod = 1.0;
        for (int j = m + 1; j <= l; ++j) {
            v = create(family, v);
            prod *= level_gap(family, m, j - m);
        }
        for (auto& c : v.coeffs) c /= std::sqrt(prod);
        v.coeffs.resize(static_cast<std::size_t>(size), 0.0);

        const ASF target = asf(family, l, m);
        RealVector projected = zeros(m, static_cast<std::size_t>(size));
        for (int k = m; k <= l_max; ++k) {
            const ASF basis = asf(family, k, m);
            projected.coeffs[static_cast<std::size_t>(k - m)] =
                inner_product(target, basis) / (norm(target) * norm(basis));
        }
        const double plus = vector_norm(combine(v, 1.0, projected, -1.0));
        const double minus = vector_norm(combine(v, 1.0, projected, 1.0));
        record(r, std::min(plus, minus));
    }
    return r;
}

}  // namespace hyperladder
