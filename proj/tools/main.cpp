// hyperladder command-line front end.
//
// Exit codes: 0 pass, 1 numeric-tolerance failure, 2 configuration or domain error,
// 3 internal assertion.

#include "run_config.hpp"

#include <hyperladder/acceptance.hpp>
#include <hyperladder/coherent.hpp>
#include <hyperladder/errors.hpp>
#include <hyperladder/hilbert.hpp>
#include <hyperladder/json_io.hpp>
#include <hyperladder/ladder.hpp>
#include <hyperladder/parallel.hpp>
#include <hyperladder/schrodinger.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

using namespace hyperladder;
using hyperladder::cli::RunConfig;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Sink {
public:
    explicit Sink(const std::string& path) : path_(path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
    std::ostream& os() { return path_.empty() ? std::cout : file_; }
    void close() {
        os().flush();
        if (!os()) throw IoError("write to '" + (path_.empty() ? std::string("<stdout>") : path_) + "' failed");
    }

private:
    std::string path_;
    std::ofstream file_;
};

std::string num(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json domain_json(const Interval& d) {
    auto end = [](double v) -> Json {
        if (std::isfinite(v)) return v;
        return v > 0 ? "inf" : "-inf";
    };
    return Json::array({end(d.lower), end(d.upper)});
}

Interval sampling_window(const ChangeOfVariable& cov) {
    Interval w = cov.x_domain;
    if (!std::isfinite(w.lower) && !std::isfinite(w.upper)) return {-8.0, 8.0};
    if (!std::isfinite(w.upper)) w.upper = w.lower + 12.0;
    if (!std::isfinite(w.lower)) w.lower = w.upper - 12.0;
    return w;
}

Json meta(const std::string& command, const RunConfig& c, const FamilySpec& f) {
    Json j;
    j["command"] = command;
    j["family"] = f.id();
    j["config_hash"] = cli::hex(cli::config_hash(command, c));
    return j;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const RunConfig& c, const std::string& suite, std::ostream& os) {
    const FamilySpec f = c.make();
    const std::string id = f.id();
    const bool all = suite == "all";
    if (!all && suite != "ladder" && suite != "ortho" && suite != "norms" && suite != "commutators")
        throw DomainError("unknown verify suite '" + suite + "'");

    using Task = std::function<std::vector<Json>()>;
    std::vector<Task> tasks;
    auto numeric = [&](double fallback) { return c.tol > 0 ? c.tol : fallback; };

    if (all || suite == "ladder") {
        const int mmax = c.mmax < 0 ? c.lmax : c.mmax;
        for (int l = 0; l <= c.lmax; ++l) {
            tasks.push_back([&f, l, mmax] {
                std::vector<Json> out{report_to_json(ode_check(f, l))};
                if (l >= 1) out.push_back(report_to_json(recurrence_check(f, l)));
                for (int m = 0; m < l && m <= mmax; ++m) {
                    out.push_back(report_to_json(factorization_check(f, l, m)));
                    out.push_back(report_to_json(intertwining_check(f, l, m)));
                    out.push_back(report_to_json(ladder_product_check(f, l, m)));
                    if (m >= 1) out.push_back(report_to_json(three_term_asf_check(f, l, m)));
                }
                return out;
            });
        }
        tasks.push_back([&] { return std::vector<Json>{report_to_json(shape_invariance_check(f, c.lmax))}; });
    }
    if (all || suite == "ortho") {
        const int mmax = c.mmax < 0 ? std::min(10, c.lmax) : c.mmax;
        const double tol = numeric(1e-11);
        tasks.push_back([&f, &id, &c, mmax, tol] {
            return std::vector<Json>{identity_to_json(orthogonality_sweep(f, c.lmax, mmax, tol), id)};
        });
    }
    if (all || suite == "norms") {
        const int mmax = c.mmax < 0 ? std::min(10, c.lmax) : c.mmax;
        tasks.push_back([&, mmax] {
            return std::vector<Json>{identity_to_json(norm_ladder_sweep(f, c.lmax, numeric(1e-10)), id),
                                     identity_to_json(adjointness_sweep(f, c.lmax, mmax, numeric(1e-10)), id),
                                     identity_to_json(creation_chain_sweep(f, 0, c.lmax, numeric(1e-9)), id)};
        });
    }
    if (all || suite == "commutators") {
        const int mmax = c.mmax < 0 ? std::min(3, c.lmax) : c.mmax;
        for (int m = 0; m <= mmax; ++m) {
            tasks.push_back([&, m] {
                std::vector<Json> out;
                for (const auto& r : commutator_checks(f, m, c.lmax, numeric(1e-12)).results) {
                    Json j = identity_to_json(r, id);
                    j["m"] = m;
                    out.push_back(std::move(j));
                }
                return out;
            });
        }
        tasks.push_back([&] {
            const AlgebraClass cls = classify_algebra(f, 0, c.lmax, numeric(1e-12));
            Json j{{"identity", "algebra classification"},
                   {"family", id},
                   {"algebra", std::string(to_string(cls.tag))},
                   {"sigma2", to_string(f.sigma_second())}};
            const bool expected = (sign(f.sigma_second()) < 0) == (cls.tag == AlgebraTag::su11);
            j["status"] = expected ? "pass" : "fail";
            std::vector<Json> out{j};
            for (const auto& r : cls.k_checks) out.push_back(identity_to_json(r, id));
            return out;
        });
    }

    std::vector<std::vector<Json>> results(tasks.size());
    parallel_for(tasks.size(), 0, [&](std::size_t i) { results[i] = tasks[i](); });

    // single writer, task order
    std::optional<Json> first_failure;
    for (const auto& batch : results) {
        for (const auto& line : batch) {
            os << line.dump() << '\n';
            if (line.value("status", "pass") != "pass" && !first_failure) first_failure = line;
        }
    }
    if (first_failure) {
        std::cerr << "hyperladder: verify failed: " << first_failure->dump() << '\n';
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- emitters

int emit_poly(const RunConfig& c, std::ostream& os) {
    const FamilySpec f = c.make();
    const Polynomial p = classical_polynomial(f, c.l);
    if (c.format == "csv") {
        os << "k,coeff\n";
        for (int k = 0; k <= p.degree(); ++k) os << k << ',' << to_string(p.coeff(k)) << '\n';
        return 0;
    }
    Json j = meta("poly", c, f);
    j["l"] = c.l;
    j["lambda"] = to_string(eigenvalue(f, c.l));
    j["coeffs"] = polynomial_to_json(p);
    os << j.dump() << '\n';
    return 0;
}

int emit_asf(const RunConfig& c, std::ostream& os) {
    const FamilySpec f = c.make();
    const ASF phi = asf(f, c.l, c.m);
    const Polynomial p = phi.scaled_part();
    if (c.format == "csv") {
        os << "k,coeff\n";
        for (int k = 0; k <= p.degree(); ++k) os << k << ',' << to_string(p.coeff(k)) << '\n';
        return 0;
    }
    Json j = meta("asf", c, f);
    j["l"] = c.l;
    j["m"] = c.m;
    j["kappa_power"] = c.m;
    j["part"] = polynomial_to_json(p);
    j["lambda"] = to_string(eigenvalue(f, c.l));
    os << j.dump() << '\n';
    return 0;
}

void write_samples(std::ostream& os, const RunConfig& c, const Json& header, const std::vector<double>& grid,
                   const std::vector<double>& values, const char* column) {
    if (c.format == "json") {
        Json j = header;
        Json xs = Json::array(), vs = Json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            xs.push_back(grid[i]);
            vs.push_back(std::isfinite(values[i]) ? Json(values[i]) : Json(nullptr));
        }
        j["x"] = std::move(xs);
        j[column] = std::move(vs);
        os << j.dump() << '\n';
        return;
    }
    os << "# " << header.dump() << '\n';
    os << "x," << column << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) os << num(grid[i]) << ',' << num(values[i]) << '\n';
}

int emit_potential(const RunConfig& c, std::ostream& os) {
    const FamilySpec f = c.make();
    const ChangeOfVariable cov = change_of_variable(f, c.sign);
    const auto grid = interior_grid(sampling_window(cov), c.grid > 0 ? c.grid : 512);
    const PotentialProfile prof = potential(f, c.m, cov, grid);
    Json h = meta("potential", c, f);
    h["m"] = c.m;
    h["sign"] = cov.sign;
    h["lambda_m"] = to_string(prof.lambda_m);
    h["x_domain"] = domain_json(cov.x_domain);
    h["change_of_variable"] = cov.closed_form;
    h["flagged"] = prof.flagged.size();
    write_samples(os, c, h, grid, prof.values, "V");
    return 0;
}

int emit_wavefunction(const RunConfig& c, std::ostream& os) {
    const FamilySpec f = c.make();
    if (c.m > c.l) throw DomainError("wavefunction needs m <= l");
    const ChangeOfVariable cov = change_of_variable(f, c.sign);
    const auto grid = interior_grid(sampling_window(cov), c.grid > 0 ? c.grid : 513);
    const Wavefunction wf = wavefunction(f, c.l, c.m, cov, grid);
    Json h = meta("wavefunction", c, f);
    h["l"] = c.l;
    h["m"] = c.m;
    h["sign"] = cov.sign;
    h["lambda_l"] = to_string(eigenvalue(f, c.l));
    h["x_domain"] = domain_json(cov.x_domain);
    h["scale"] = wf.scale;
    h["schrodinger_residual"] = wf.schrodinger_residual;
    write_samples(os, c, h, grid, wf.values, "psi");
    return 0;
}

int emit_coherent(const RunConfig& c, std::ostream& os) {
    const FamilySpec f = c.make();
    const double tol = c.tol > 0 ? c.tol : 1e-12;
    const CoherentState st = coherent_state(f, c.m, c.z_value(), tol);
    const double residual = eigen_residual(st);
    if (c.format == "csv") {
        os << "n,re,im\n";
        for (std::size_t n = 0; n < st.coeffs.coeffs.size(); ++n)
            os << n << ',' << num(st.coeffs.coeffs[n].real()) << ',' << num(st.coeffs.coeffs[n].imag()) << '\n';
        return 0;
    }
    Json j = meta("coherent", c, f);
    j["m"] = c.m;
    j["z"] = Json::array({st.z.real(), st.z.imag()});
    j["tol"] = tol;
    j["truncation"] = st.truncation;
    j["normalization_squared"] = st.normalization_squared;
    j["tail_bound"] = st.tail_bound;
    j["residual"] = residual;
    Json coeffs = Json::array();
    for (const auto& cn : st.coeffs.coeffs) coeffs.push_back(Json::array({cn.real(), cn.imag()}));
    j["coefficients"] = std::move(coeffs);
    const RadiusEstimate r = radius_estimate(f, c.m, 64);
    j["radius"] = {{"root_value", r.root_value},
                   {"root_midpoint", r.root_midpoint},
                   {"ratio_value", r.ratio_value},
                   {"diverging", r.diverging}};
    os << j.dump() << '\n';
    return residual <= 1e-8 ? 0 : 1;
}

int emit_spectrum(const RunConfig& c, std::ostream& os, const std::string& command) {
    const FamilySpec f = c.make();
    const ChangeOfVariable cov = change_of_variable(f, c.sign);
    const int m = c.m;
    const RealMap V = [&](double x) { return potential_value(f, m, cov, x); };
    const Interval clip = default_clip(V, cov.x_domain);
    NumerovOptions opt;
    if (c.grid > 0) opt.grid = c.grid;
    const auto levels = numerov_eigenvalues(V, clip, c.count, opt);
    const double tol = c.tol > 0 ? c.tol : 1e-5;

    Json j = meta(command, c, f);
    j["m"] = m;
    j["clip"] = Json::array({clip.lower, clip.upper});
    Json lv = Json::array(), an = Json::array(), err = Json::array(), res = Json::array();
    bool ok = true;
    for (const auto& level : levels) {
        const double exact = to_double(eigenvalue(f, m + level.index));
        lv.push_back(level.energy);
        an.push_back(exact);
        err.push_back(std::abs(level.energy - exact));
        res.push_back(level.resolved);
        ok = ok && level.resolved && std::abs(level.energy - exact) <= tol;
    }
    j["levels"] = std::move(lv);
    j["analytic"] = std::move(an);
    j["abs_err"] = std::move(err);
    j["resolved"] = std::move(res);
    os << j.dump() << '\n';
    return ok ? 0 : 1;
}

int emit(const std::string& what, const RunConfig& c, std::ostream& os) {
    if (what == "poly") return emit_poly(c, os);
    if (what == "asf") return emit_asf(c, os);
    if (what == "potential") return emit_potential(c, os);
    if (what == "wavefunction") return emit_wavefunction(c, os);
    if (what == "coherent") return emit_coherent(c, os);
    if (what == "spectrum") return emit_spectrum(c, os, "spectrum");
    throw DomainError("unknown emit target '" + what + "'");
}

// ---------------------------------------------------------------- acceptance

int cmd_acceptance(int criterion, std::ostream& os) {
    std::vector<int> ids;
    if (criterion == 0)
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    else
        ids.push_back(criterion);
    bool all = true;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id);
        all = all && r.passed;
        char head[160];
        std::snprintf(head, sizeof head, "criterion %d  %s  %s  (%.2f s)", r.id, r.passed ? "PASS" : "FAIL",
                      r.title.c_str(), r.seconds);
        os << head << '\n';
        for (const auto& line : r.lines) os << "    " << line << '\n';
        os.flush();
    }
    if (ids.size() > 1) {
        os << "\nsummary:";
        return all ? (os << " all criteria pass\n", 0) : (os << " at least one criterion failed\n", 1);
    }
    return all ? 0 : 1;
}

// ---------------------------------------------------------------- options

struct Bound {
    CLI::App* app;
    RunConfig config;
    std::string config_path;
};

void add_common(CLI::App* sub, RunConfig& c, std::string& config_path) {
    sub->add_option("--family", c.family, "jacobi | hypergeometric | laguerre | hermite | poschl-teller");
    sub->add_option("--alpha", c.alpha, "rational parameter, e.g. 1/2");
    sub->add_option("--beta", c.beta, "rational parameter");
    sub->add_option("--mu", c.mu, "Poschl-Teller mu (alpha = mu - 1/2)");
    sub->add_option("--eta", c.eta, "Poschl-Teller eta (beta = eta - 1/2)");
    sub->add_flag("--monic", c.monic, "monic normalisation of Phi_l");
    sub->add_option("--l", c.l, "degree l");
    sub->add_option("--m", c.m, "ladder index m");
    sub->add_option("--lmax", c.lmax, "largest l in sweeps");
    sub->add_option("--mmax", c.mmax, "largest m in sweeps");
    sub->add_option("--tol", c.tol, "numeric tolerance override");
    sub->add_option("--grid", c.grid, "grid size");
    sub->add_option("--sign", c.sign, "sign of ds/dx = sign*kappa (+1 or -1)");
    sub->add_option("--count", c.count, "number of levels");
    sub->add_option("--z", c.z, "coherent-state label re,im");
    sub->add_option("--out", c.out, "output path (stdout when omitted)");
    sub->add_option("--format", c.format, "json | csv");
    sub->add_option("--config", config_path, "JSON file with any of the flag values");
}

void load_config(CLI::App* sub, RunConfig& c, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw DomainError("config '" + path + "' is not valid JSON: " + e.what());
    }
    std::vector<std::string> locked;
    for (const auto* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        for (const auto& name : opt->get_lnames()) locked.push_back(name);
    }
    c.merge(j, locked);
}

int run(int argc, char** argv) {
    CLI::App app{"hyperladder: ladder operators for equations of hypergeometric type"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string suite = "all";
    std::string what;
    int criterion = 0;

    auto* verify = app.add_subcommand("verify", "exact and numeric identity sweeps, JSON lines");
    add_common(verify, cfg, config_path);
    verify->add_option("suite", suite, "ladder | ortho | norms | commutators | all");

    std::map<std::string, CLI::App*> emitters;
    for (const char* name : {"poly", "asf", "potential", "wavefunction", "coherent", "spectrum"}) {
        emitters[name] = app.add_subcommand(name, std::string("emit ") + name);
        add_common(emitters[name], cfg, config_path);
    }
    auto* emit_cmd = app.add_subcommand("emit", "emit poly|asf|potential|wavefunction|coherent|spectrum");
    add_common(emit_cmd, cfg, config_path);
    emit_cmd->add_option("what", what, "what to emit")->required();

    auto* oracle = app.add_subcommand("oracle", "independent oracles");
    oracle->require_subcommand(1);
    auto* numerov = oracle->add_subcommand("numerov", "Numerov eigenvalues against lambda_l");
    add_common(numerov, cfg, config_path);

    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance criteria");
    acceptance->add_option("--criterion", criterion, "single criterion 1..8 (all when omitted)")
        ->check(CLI::Range(1, kCriterionCount));
    std::string acceptance_out;
    acceptance->add_option("--out", acceptance_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* active = nullptr;
    for (auto* sub : app.get_subcommands()) active = sub;
    if (active == oracle) active = numerov;

    if (active == acceptance) {
        Sink sink(acceptance_out);
        const int code = cmd_acceptance(criterion, sink.os());
        sink.close();
        return code;
    }

    load_config(active, cfg, config_path);
    cfg.check();
    Sink sink(cfg.out);
    int code = 0;
    if (active == verify) {
        code = cmd_verify(cfg, suite, sink.os());
    } else if (active == emit_cmd) {
        code = emit(what, cfg, sink.os());
    } else if (active == numerov) {
        code = emit_spectrum(cfg, sink.os(), "oracle numerov");
    } else {
        code = emit(active->get_name(), cfg, sink.os());
    }
    sink.close();
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "hyperladder: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "hyperladder: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "hyperladder: numeric failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hyperladder: internal error: " << e.what() << '\n';
        return 3;
    }
}
