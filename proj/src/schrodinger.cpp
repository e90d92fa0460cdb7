#include "hyperladder/schrodinger.hpp"

#include "hyperladder/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyperladder {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_interior(const ChangeOfVariable& cov, double x) {
    if (!(x > cov.x_domain.lower && x < cov.x_domain.upper))
        throw DomainError("x = " + std::to_string(x) + " is not interior to the change-of-variable domain");
}

ChangeOfVariable reflect(ChangeOfVariable base) {
    ChangeOfVariable out = base;
    out.sign = -base.sign;
    out.x_domain = {-base.x_domain.upper, -base.x_domain.lower};
    out.s_of_x = [f = base.s_of_x](double x) { return f(-x); };
    out.ds_dx = [f = base.ds_dx](double x) { return -f(-x); };
    out.d2s_dx2 = [f = base.d2s_dx2](double x) { return f(-x); };
    out.closed_form = base.closed_form + " at -x";
    return out;
}

// g(s) = 2 tau(s) + (2m-1) sigma'(s); W_m = -g / (4 kappa).
struct SuperpotentialParts {
    double s;
    double kappa;
    double g;
    double dg;
    double dsigma;
};

SuperpotentialParts parts(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x) {
    require_interior(cov, x);
    SuperpotentialParts p{};
    p.s = cov.s_of_x(x);
    p.kappa = cov.kappa(x);
    p.dsigma = family.sigma.derivative().evaluate(p.s);
    p.g = 2.0 * family.tau.evaluate(p.s) + (2.0 * m - 1.0) * p.dsigma;
    p.dg = 2.0 * family.tau_slope().get_d() + (2.0 * m - 1.0) * family.sigma_second().get_d();
    return p;
}

double finite_difference(const RealMap& f, double x, const Interval& domain) {
    double dist = std::min(x - domain.lower, domain.upper - x);
    double h = std::min(1e-2, dist / 8.0);
    auto stencil = [&](double step) {
        return (-f(x + 2 * step) + 8 * f(x + step) - 8 * f(x - step) + f(x - 2 * step)) / (12 * step);
    };
    double coarse = stencil(h);
    double best = coarse;
    for (int it = 0; it < 6; ++it) {
        const double fine = stencil(h / 2);
        best = (16.0 * fine - coarse) / 15.0;
        if (std::abs(fine - coarse) / 15.0 < 1e-8 * std::max(1.0, std::abs(best))) break;
        h /= 2;
        coarse = fine;
    }
    return best;
}

bool uniform(const std::vector<double>& grid) {
    if (grid.size() < 2) return false;
    const double h = grid[1] - grid[0];
    if (!(h > 0)) return false;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-9 * h + 1e-14 * std::abs(grid[i])) return false;
    return true;
}

std::vector<double> double_coeffs(const Polynomial& p) {
    std::vector<double> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_d());
    return out;
}

double horner(const std::vector<double>& c, double s) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + *it;
    return acc;
}

// sqrt(kappa rho) kappa^m at x.
double envelope(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x) {
    const double s = cov.s_of_x(x);
    const double kappa = cov.kappa(x);
    return std::sqrt(kappa * family.weight(s)) * std::pow(kappa, m);
}

}  // namespace

int default_sign(FamilyKind kind) { return kind == FamilyKind::jacobi ? -1 : 1; }

ChangeOfVariable change_of_variable(const FamilySpec& family, int sign) {
    if (sign == 0) sign = default_sign(family.kind);
    if (sign != 1 && sign != -1) throw DomainError("change-of-variable sign must be +1 or -1");

    ChangeOfVariable cov;
    cov.family = family.kind;
    cov.sign = default_sign(family.kind);
    switch (family.kind) {
        case FamilyKind::jacobi:
            cov.x_domain = {0.0, kPi};
            cov.s_of_x = [](double x) { return std::cos(x); };
            cov.ds_dx = [](double x) { return -std::sin(x); };
            cov.d2s_dx2 = [](double x) { return -std::cos(x); };
            cov.closed_form = "cos(x)";
            break;
        case FamilyKind::hypergeometric:
            cov.x_domain = {0.0, kPi};
            cov.s_of_x = [](double x) {
                const double h = std::sin(x / 2);
                return h * h;
            };
            cov.ds_dx = [](double x) { return std::sin(x) / 2; };
            cov.d2s_dx2 = [](double x) { return std::cos(x) / 2; };
            cov.closed_form = "sin^2(x/2)";
            break;
        case FamilyKind::laguerre:
            cov.x_domain = {0.0, kInf};
            cov.s_of_x = [](double x) { return x * x / 4; };
            cov.ds_dx = [](double x) { return x / 2; };
            cov.d2s_dx2 = [](double) { return 0.5; };
            cov.closed_form = "x^2/4";
            break;
        case FamilyKind::hermite:
            cov.x_domain = {-kInf, kInf};
            cov.s_of_x = [](double x) { return x; };
            cov.ds_dx = [](double) { return 1.0; };
            cov.d2s_dx2 = [](double) { return 0.0; };
            cov.closed_form = "x";
            break;
    }
    return sign == cov.sign ? cov : reflect(cov);
}

double change_of_variable_defect(const FamilySpec& family, const ChangeOfVariable& cov, int samples) {
    Interval dom = cov.x_domain;
    if (!std::isfinite(dom.lower)) dom.lower = std::isfinite(dom.upper) ? dom.upper - 10.0 : -10.0;
    if (!std::isfinite(dom.upper)) dom.upper = dom.lower + (std::isfinite(cov.x_domain.lower) ? 10.0 : 20.0);
    double worst = 0.0;
    double prev_s = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double x = dom.lower + (dom.upper - dom.lower) * i / (samples + 1.0);
        const double s = cov.s_of_x(x);
        const double expected = cov.sign * std::sqrt(family.sigma.evaluate(s));
        worst = std::max(worst, std::abs(cov.ds_dx(x) - expected));
        if (i > 1 && (s - prev_s) * cov.sign <= 0) worst = kInf;  // not monotone
        if (!family.interval.contains(s)) worst = kInf;
        prev_s = s;
    }
    return worst;
}

double superpotential(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x) {
    const SuperpotentialParts p = parts(family, m, cov, x);
    // -tau/(2 kappa) - sign (2m-1)/(2 kappa) dkappa/dx with dkappa/dx = sign * d2s/dx2
    const double dkappa_dx = cov.sign * cov.d2s_dx2(x);
    return -family.tau.evaluate(p.s) / (2 * p.kappa) - cov.sign * (2.0 * m - 1.0) / (2 * p.kappa) * dkappa_dx;
}

double superpotential_derivative(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x,
                                 DerivativeMode mode) {
    if (mode == DerivativeMode::finite_difference) {
        require_interior(cov, x);
        return finite_difference([&](double y) { return superpotential(family, m, cov, y); }, x, cov.x_domain);
    }
    // dW/dx = sign * (-g'/4 + g sigma'/(8 sigma)), sigma = kappa^2.
    const SuperpotentialParts p = parts(family, m, cov, x);
    return cov.sign * (-p.dg / 4 + p.g * p.dsigma / (8 * p.kappa * p.kappa));
}

double potential_value(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x, DerivativeMode mode) {
    const double w = superpotential(family, m, cov, x);
    return eigenvalue(family, m).get_d() + w * w - cov.sign * superpotential_derivative(family, m, cov, x, mode);
}

double partner_potential_value(const FamilySpec& family, int m, const ChangeOfVariable& cov, double x,
                               DerivativeMode mode) {
    const double w = superpotential(family, m, cov, x);
    return eigenvalue(family, m).get_d() + w * w + cov.sign * superpotential_derivative(family, m, cov, x, mode);
}

PotentialProfile potential(const FamilySpec& family, int m, const ChangeOfVariable& cov,
                           const std::vector<double>& grid, DerivativeMode mode) {
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw DomainError("potential grid must be strictly increasing");
    PotentialProfile out;
    out.m = m;
    out.sign = cov.sign;
    out.lambda_m = eigenvalue(family, m);
    out.grid = grid;
    out.values.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = potential_value(family, m, cov, grid[i], mode);
        if (!std::isfinite(v)) {
            out.flagged.push_back(i);
            out.values.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            out.values.push_back(v);
        }
    }
    return out;
}

double riccati_partner_defect(const FamilySpec& family, int m, const ChangeOfVariable& cov,
                              const std::vector<double>& grid, DerivativeMode mode) {
    double worst = 0.0;
    for (double x : grid) {
        const double own = potential_value(family, m + 1, cov, x, mode);
        const double partner = partner_potential_value(family, m, cov, x, mode);
        worst = std::max(worst, std::abs(own - partner));
    }
    return worst;
}

double wavefunction_value(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov, double x) {
    require_interior(cov, x);
    const Polynomial part = classical_polynomial(family, l).derivative(m);
    return envelope(family, m, cov, x) * part.evaluate(cov.s_of_x(x));
}

double simpson(const std::vector<double>& grid, const std::vector<double>& values) {
    if (grid.size() != values.size() || grid.size() < 2) throw DomainError("simpson needs matching samples");
    if (!uniform(grid)) throw DomainError("simpson needs a uniform grid");
    const double h = grid[1] - grid[0];
    const std::size_t intervals = grid.size() - 1;
    if (intervals == 1) return h * (values[0] + values[1]) / 2;
    // Simpson 1/3 on an even number of intervals, 3/8 on the last three when odd.
    const std::size_t even = intervals % 2 == 0 ? intervals : intervals - 3;
    double acc = 0.0;
    for (std::size_t i = 0; i + 2 <= even; i += 2) acc += h / 3 * (values[i] + 4 * values[i + 1] + values[i + 2]);
    if (even != intervals) {
        const std::size_t i = even;
        acc += 3 * h / 8 * (values[i] + 3 * values[i + 1] + 3 * values[i + 2] + values[i + 3]);
    }
    return acc;
}

Wavefunction wavefunction(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov,
                          const std::vector<double>& grid, bool normalize) {
    if (m < 0 || m > l) throw DomainError("wavefunction requires 0 <= m <= l");
    if (!uniform(grid) || grid.size() < 5) throw DomainError("wavefunction needs a uniform grid of >= 5 points");
    for (double x : {grid.front(), grid.back()}) require_interior(cov, x);

    const auto part = double_coeffs(classical_polynomial(family, l).derivative(m));
    Wavefunction wf;
    wf.l = l;
    wf.m = m;
    wf.grid = grid;
    for (double x : grid) wf.values.push_back(envelope(family, m, cov, x) * horner(part, cov.s_of_x(x)));

    if (normalize) {
        std::vector<double> sq(wf.values.size());
        std::transform(wf.values.begin(), wf.values.end(), sq.begin(), [](double v) { return v * v; });
        const double mass = simpson(grid, sq);
        if (!(mass > 0)) throw NumericError("wavefunction has zero norm on the grid");
        wf.scale = 1.0 / std::sqrt(mass);
        for (std::size_t i = 1; i + 1 < wf.values.size(); ++i) {
            const double a = std::abs(wf.values[i]);
            if (a >= std::abs(wf.values[i - 1]) && a >= std::abs(wf.values[i + 1]) && a > 0) {
                if (wf.values[i] < 0) wf.scale = -wf.scale;
                break;
            }
        }
        for (auto& v : wf.values) v *= wf.scale;
    }

    const double h = grid[1] - grid[0];
    const double lam_l = eigenvalue(family, l).get_d();
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double second = (wf.values[i + 1] - 2 * wf.values[i] + wf.values[i - 1]) / (h * h);
        const double v = potential_value(family, m, cov, grid[i]);
        wf.schrodinger_residual = std::max(wf.schrodinger_residual, std::abs(-second + (v - lam_l) * wf.values[i]));
    }
    return wf;
}

double ladder_wavefunction_value(const FamilySpec& family, int l, int m, const ChangeOfVariable& cov, double x,
                                 double h) {
    if (m < 0 || m > l) throw DomainError("ladder_wavefunction_value requires 0 <= m <= l");
    require_interior(cov, x);
    const double top = classical_polynomial(family, l).derivative(l).coeff(0).get_d();
    const Rational lam_l = eigenvalue(family, l);
    std::vector<double> gaps(static_cast<std::size_t>(l + 1));
    for (int k = m; k < l; ++k) gaps[static_cast<std::size_t>(k)] = to_double(lam_l - eigenvalue(family, k));

    // chain(k, y) = Psi_{l,k}(y)
    auto chain = [&](auto&& self, int k, double y) -> double {
        if (k == l) return envelope(family, l, cov, y) * top;
        auto f = [&](double t) { return self(self, k + 1, t); };
        const double d = (-f(y - 3 * h) + 9 * f(y - 2 * h) - 45 * f(y - h) + 45 * f(y + h) - 9 * f(y + 2 * h) +
                          f(y + 3 * h)) /
                         (60 * h);
        return (-cov.sign * d + superpotential(family, k, cov, y) * f(y)) / gaps[static_cast<std::size_t>(k)];
    };
    return chain(chain, m, x);
}

std::vector<double> interior_grid(const Interval& domain, int n, double margin) {
    if (n < 2) throw DomainError("interior_grid needs n >= 2");
    if (!domain.finite()) throw DomainError("interior_grid needs a finite interval");
    const double width = domain.upper - domain.lower;
    const double a = domain.lower + margin * width;
    const double b = domain.upper - margin * width;
    // n points on the open interval (a, b): spacing width/(n+1)
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * (i + 1) / (n + 1.0);
    return out;
}

namespace {

struct ShootingGrid {
    double h = 0.0;
    std::vector<double> v;  // V at nodes 0..N (endpoints included; their values unused)
    std::size_t left = 0;   // Dirichlet node on the left
    std::size_t right = 0;  // Dirichlet node on the right
};

ShootingGrid make_shooting_grid(std::vector<double> values, double h) {
    ShootingGrid g;
    g.h = h;
    g.v = std::move(values);
    const std::size_t n = g.v.size() - 1;
    auto forbidden = [&](std::size_t i) { return !std::isfinite(g.v[i]) || h * h * g.v[i] / 12.0 >= 0.5; };
    std::size_t lo = 1;
    while (lo < n && forbidden(lo)) ++lo;
    std::size_t hi = n - 1;
    while (hi > lo && forbidden(hi)) --hi;
    g.left = lo - 1;
    g.right = hi + 1;
    return g;
}

// Sign changes of the left-shooting solution = number of eigenvalues below E.
int count_nodes(const ShootingGrid& g, double energy) {
    const double c = g.h * g.h / 12.0;
    auto coef = [&](std::size_t i) { return 1.0 - c * (g.v[i] - energy); };
    double prev = 0.0, cur = 1.0;
    int nodes = 0;
    for (std::size_t i = g.left + 1; i < g.right; ++i) {
        const double left_term = i - 1 == g.left ? 0.0 : coef(i - 1) * prev;
        const double rhs = 2.0 * (1.0 + 5.0 * c * (g.v[i] - energy)) * cur - left_term;
        const double next = i + 1 == g.right ? rhs : rhs / coef(i + 1);
        if ((next < 0) != (cur < 0) && next != 0.0) ++nodes;
        prev = cur;
        cur = next;
        if (std::abs(cur) > 1e200) {
            prev *= 1e-200;
            cur *= 1e-200;
        }
    }
    return nodes;
}

std::vector<NumerovLevel> solve_levels(const ShootingGrid& g, int count) {
    std::vector<NumerovLevel> out(static_cast<std::size_t>(count));
    double vmin = kInf;
    for (std::size_t i = g.left + 1; i < g.right; ++i) vmin = std::min(vmin, g.v[i]);
    const double lo = vmin - 1.0;
    double hi = vmin + 1.0;
    int guard = 0;
    while (count_nodes(g, hi) < count && guard++ < 80) hi = vmin + 2.0 * (hi - vmin);
    const bool bracketed = count_nodes(g, hi) >= count;

    for (int n = 0; n < count; ++n) {
        NumerovLevel& level = out[static_cast<std::size_t>(n)];
        level.index = n;
        level.grid = static_cast<int>(g.v.size() - 1);
        if (!bracketed || count_nodes(g, lo) > n) {
            level.resolved = false;
            level.energy = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        double a = lo, b = hi;  // count(a) <= n < count(b)
        for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(a)); ++it) {
            const double mid = 0.5 * (a + b);
            if (count_nodes(g, mid) <= n) a = mid;
            else b = mid;
        }
        level.energy = 0.5 * (a + b);
        level.resolved = true;
    }
    return out;
}

ShootingGrid sample_grid(const RealMap& V, const Interval& clip, int intervals) {
    const double h = (clip.upper - clip.lower) / intervals;
    std::vector<double> values(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i) {
        const double x = i == intervals ? clip.upper : clip.lower + h * i;
        values[static_cast<std::size_t>(i)] = (i == 0 || i == intervals) ? 0.0 : V(x);
    }
    return make_shooting_grid(std::move(values), h);
}

}  // namespace

std::vector<NumerovLevel> numerov_eigenvalues(const RealMap& V, const Interval& clip, int count,
                                              const NumerovOptions& options) {
    if (count < 1) throw DomainError("numerov_eigenvalues needs count >= 1");
    if (!clip.finite() || !(clip.upper > clip.lower)) throw DomainError("numerov clip must be a finite interval");
    int intervals = std::max(options.grid, 16);
    auto levels = solve_levels(sample_grid(V, clip, intervals), count);
    for (int r = 0; r < options.max_refinements; ++r) {
        intervals *= 2;
        auto finer = solve_levels(sample_grid(V, clip, intervals), count);
        bool converged = true;
        for (std::size_t n = 0; n < finer.size(); ++n) {
            finer[n].change = std::abs(finer[n].energy - levels[n].energy);
            if (!(finer[n].change < options.tolerance)) converged = false;
        }
        levels = std::move(finer);
        if (converged) return levels;
    }
    for (auto& level : levels)
        if (!(level.change < options.tolerance)) level.resolved = false;
    return levels;
}

std::vector<NumerovLevel> numerov_eigenvalues(const PotentialProfile& profile, int count, const Interval& clip) {
    if (count < 1) throw DomainError("numerov_eigenvalues needs count >= 1");
    if (!uniform(profile.grid)) throw DomainError("numerov on samples needs a uniform profile grid");
    std::vector<double> inside;
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
        if (profile.grid[i] >= clip.lower && profile.grid[i] <= clip.upper) inside.push_back(profile.values[i]);
    if (inside.size() < 9) throw DomainError("too few profile samples inside the clip interval");
    // Dirichlet nodes are the first and last samples; use an even number of intervals.
    if ((inside.size() - 1) % 2 != 0) inside.pop_back();
    const double h = profile.grid[1] - profile.grid[0];
    std::vector<double> coarse;
    for (std::size_t i = 0; i < inside.size(); i += 2) coarse.push_back(inside[i]);
    inside.front() = inside.back() = 0.0;
    coarse.front() = coarse.back() = 0.0;

    auto fine_levels = solve_levels(make_shooting_grid(inside, h), count);
    const auto coarse_levels = solve_levels(make_shooting_grid(coarse, 2 * h), count);
    for (std::size_t n = 0; n < fine_levels.size(); ++n) {
        const double diff = fine_levels[n].energy - coarse_levels[n].energy;
        fine_levels[n].change = std::abs(diff);
        fine_levels[n].energy += diff / 15.0;  // Numerov is O(h^4)
        fine_levels[n].resolved = fine_levels[n].resolved && coarse_levels[n].resolved;
    }
    return fine_levels;
}

Interval default_clip(const RealMap& V, const Interval& domain, double threshold, double infinite_cut,
                      double infinite_rise) {
    Interval clip = domain;
    auto inward = [&](double end, double dir, double width) {
        double d = width * 1e-12;
        double x = end + dir * d;
        while (d < width / 2) {
            const double v = V(x);
            if (std::isfinite(v) && v <= threshold) return x;
            d *= 2;
            x = end + dir * d;
        }
        return x;
    };
    if (!std::isfinite(domain.lower)) clip.lower = std::isfinite(domain.upper) ? domain.upper - infinite_cut : -infinite_cut;
    if (!std::isfinite(domain.upper)) clip.upper = std::isfinite(domain.lower) ? domain.lower + infinite_cut : infinite_cut;
    const double width = clip.upper - clip.lower;
    if (std::isfinite(domain.lower)) clip.lower = inward(domain.lower, 1.0, width);
    if (std::isfinite(domain.upper)) clip.upper = inward(domain.upper, -1.0, width);

    if (!domain.finite()) {
        // slowly confining potentials need a wider window than the oscillator
        double vmin = kInf;
        for (int i = 1; i < 64; ++i) {
            const double v = V(clip.lower + (clip.upper - clip.lower) * i / 64.0);
            if (std::isfinite(v)) vmin = std::min(vmin, v);
        }
        const double step = infinite_cut / 8.0;
        for (int k = 0; k < 4096 && !std::isfinite(domain.upper) && V(clip.upper) - vmin < infinite_rise; ++k)
            clip.upper += step;
        for (int k = 0; k < 4096 && !std::isfinite(domain.lower) && V(clip.lower) - vmin < infinite_rise; ++k)
            clip.lower -= step;
    }
    return clip;
}

}  // namespace hyperladder
