#include <hyperladder/acceptance.hpp>
#include <hyperladder/coherent.hpp>
#include <hyperladder/errors.hpp>
#include <hyperladder/hilbert.hpp>
#include <hyperladder/ladder.hpp>
#include <hyperladder/schrodinger.hpp>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hyperladder;

namespace {

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

py::list fractions(const Polynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(fraction(c));
    return out;
}

// str, int or fractions.Fraction; floats are refused so nothing is rounded silently
Rational rational_arg(const py::handle& obj) {
    if (py::isinstance<py::float_>(obj)) throw py::type_error("pass rationals as int, str or fractions.Fraction");
    return parse_rational(py::str(obj).cast<std::string>());
}

FamilySpec make(const std::string& kind, const py::dict& params, bool monic) {
    std::map<std::string, Rational> p;
    for (auto [k, v] : params) p[k.cast<std::string>()] = rational_arg(v);
    return make_family(parse_family_kind(kind), p, monic ? Normalization::monic : Normalization::conventional);
}

py::dict ladder_report(const LadderReport& r) {
    py::dict d;
    d["identity"] = r.identity;
    d["family"] = r.family;
    d["l"] = r.l;
    d["m"] = r.m;
    d["passed"] = r.passed;
    d["residual"] = fraction(r.residual);
    return d;
}

py::dict identity_result(const IdentityResult& r) {
    py::dict d;
    d["identity"] = r.identity;
    d["passed"] = r.passed;
    d["exact"] = r.exact;
    d["worst"] = r.worst;
    d["tolerance"] = r.tolerance;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ladder operators, quadrature and Schroedinger maps for equations of hypergeometric type";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    py::class_<FamilySpec>(m, "Family")
        .def(py::init(&make), py::arg("kind"), py::arg("params") = py::dict(), py::arg("monic") = false)
        .def_property_readonly("kind", [](const FamilySpec& f) { return std::string(to_string(f.kind)); })
        .def_property_readonly("id", &FamilySpec::id)
        .def_property_readonly("sigma", [](const FamilySpec& f) { return fractions(f.sigma); })
        .def_property_readonly("tau", [](const FamilySpec& f) { return fractions(f.tau); })
        .def_property_readonly("interval",
                               [](const FamilySpec& f) { return py::make_tuple(f.interval.lower, f.interval.upper); })
        .def("__repr__", [](const FamilySpec& f) { return "Family(" + f.id() + ")"; });

    m.def("eigenvalue", [](const FamilySpec& f, int l) { return fraction(eigenvalue(f, l)); });
    m.def("classical_polynomial", [](const FamilySpec& f, int l) { return fractions(classical_polynomial(f, l)); },
          "Coefficients of Phi_l, lowest degree first.");
    m.def("asf_part", [](const FamilySpec& f, int l, int m_) { return fractions(asf(f, l, m_).part); },
          "Polynomial factor P of Phi_{l,m} = kappa^m P.");
    m.def("recurrence_coefficients", [](const FamilySpec& f, int l) {
        const auto r = recurrence_coefficients(f, l);
        return py::make_tuple(fraction(r.alpha), fraction(r.beta), fraction(r.gamma));
    });
    m.def("factorization_check", [](const FamilySpec& f, int l, int m_) { return ladder_report(factorization_check(f, l, m_)); });
    m.def("three_term_check", [](const FamilySpec& f, int l, int m_) { return ladder_report(three_term_asf_check(f, l, m_)); });
    m.def("shape_invariance_check", [](const FamilySpec& f, int m_max) { return ladder_report(shape_invariance_check(f, m_max)); });

    m.def("gauss_rule", [](const FamilySpec& f, int n) {
        const QuadratureRule r = gauss_rule(f, n);
        return py::make_tuple(r.nodes, r.weights);
    });
    m.def("inner_product", [](const FamilySpec& f, int l, int k, int m_) { return inner_product(asf(f, l, m_), asf(f, k, m_)); });
    m.def("norm", [](const FamilySpec& f, int l, int m_) { return norm(asf(f, l, m_)); });
    m.def("commutator_checks", [](const FamilySpec& f, int m_, int l_max) {
        py::list out;
        for (const auto& r : commutator_checks(f, m_, l_max).results) out.append(identity_result(r));
        return out;
    });
    m.def("algebra", [](const FamilySpec& f) { return std::string(to_string(classify_algebra(f).tag)); });

    m.def("epsilon_sequence", [](const FamilySpec& f, int m_, int n_max) {
        py::list out;
        for (const auto& e : epsilon_sequence(f, m_, n_max)) out.append(fraction(e));
        return out;
    });
    m.def(
        "coherent_state",
        [](const FamilySpec& f, int m_, std::complex<double> z, double tol) {
            const CoherentState st = coherent_state(f, m_, z, tol);
            py::dict d;
            d["coefficients"] = st.coeffs.coeffs;
            d["normalization_squared"] = st.normalization_squared;
            d["tail_bound"] = st.tail_bound;
            d["residual"] = eigen_residual(st);
            return d;
        },
        py::arg("family"), py::arg("m"), py::arg("z"), py::arg("tol") = 1e-12);

    m.def(
        "superpotential",
        [](const FamilySpec& f, int m_, double x, int sign) { return superpotential(f, m_, change_of_variable(f, sign), x); },
        py::arg("family"), py::arg("m"), py::arg("x"), py::arg("sign") = 0);
    m.def(
        "potential",
        [](const FamilySpec& f, int m_, const std::vector<double>& xs, int sign) {
            return potential(f, m_, change_of_variable(f, sign), xs).values;
        },
        py::arg("family"), py::arg("m"), py::arg("x"), py::arg("sign") = 0);
    m.def(
        "wavefunction",
        [](const FamilySpec& f, int l, int m_, const std::vector<double>& xs, int sign) {
            const Wavefunction w = wavefunction(f, l, m_, change_of_variable(f, sign), xs);
            return py::make_tuple(w.values, w.schrodinger_residual);
        },
        py::arg("family"), py::arg("l"), py::arg("m"), py::arg("x"), py::arg("sign") = 0);
    m.def(
        "numerov",
        [](const FamilySpec& f, int m_, int count, int grid) {
            const ChangeOfVariable cov = change_of_variable(f);
            const RealMap V = [&](double x) { return potential_value(f, m_, cov, x); };
            NumerovOptions opt;
            opt.grid = grid;
            std::vector<double> out;
            py::gil_scoped_release release;
            for (const auto& level : numerov_eigenvalues(V, default_clip(V, cov.x_domain), count, opt))
                out.push_back(level.energy);
            return out;
        },
        py::arg("family"), py::arg("m"), py::arg("count"), py::arg("grid") = 8000);

    m.def("run_criterion", [](int id) {
        CriterionResult r;
        {
            py::gil_scoped_release release;
            r = run_criterion(id, 1);
        }
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.passed;
        d["lines"] = r.lines;
        return d;
    });
}
