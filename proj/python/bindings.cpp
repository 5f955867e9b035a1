#include "hqm/cli.hpp"
#include "hqm/composability.hpp"
#include "hqm/dmatrix.hpp"
#include "hqm/expr.hpp"
#include "hqm/para_analysis.hpp"
#include "hqm/phasespace.hpp"
#include "hqm/splitc.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hqm;
using phase::PolySymbol;

namespace {

// accepts int, str ("3/2", "-0.25") or fractions.Fraction
Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a rational, got bool");
    return parse_rational(py::str(h).cast<std::string>());
}

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(q));
}

SplitComplex to_split(const py::handle& h) {
    if (py::isinstance<SplitComplex>(h)) return h.cast<SplitComplex>();
    if (py::isinstance<py::str>(h)) return expr::parse_split(h.cast<std::string>());
    return SplitComplex(to_rational(h));
}

PolySymbol to_poly(const py::handle& h) {
    if (py::isinstance<PolySymbol>(h)) return h.cast<PolySymbol>();
    return expr::parse_poly(py::str(h).cast<std::string>());
}

std::vector<SplitComplex> to_vec(const py::iterable& xs) {
    std::vector<SplitComplex> out;
    for (const auto& x : xs) out.push_back(to_split(x));
    return out;
}

comp::CompClass make(const std::string& cls, const py::object& hbar) {
    return comp::make_class(comp::class_from_name(cls), to_rational(hbar));
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::list reports(const std::vector<PropertyReport>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(from_json(to_json(r)));
    return out;
}

py::dict pi_scalar(const phase::PiScalar& s) {
    py::dict d;
    d["text"] = phase::to_string(s);
    d["re"] = to_fraction(s.value.re);
    d["im"] = to_fraction(s.value.im);
    d["pi_power"] = s.pi_power;
    d["approx"] = s.real_approx();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Composability classes, split-complex arithmetic and hyperbolic phase space";
    m.attr("__version__") = cli::tool_version;

    py::register_exception<Error>(m, "HqmError", PyExc_RuntimeError);

    py::class_<SplitComplex>(m, "Split")
        .def(py::init([](const py::object& re, const py::object& im) {
                 return SplitComplex(to_rational(re), to_rational(im));
             }),
             py::arg("re") = 0, py::arg("im") = 0)
        .def_static("parse", [](const std::string& s) { return expr::parse_split(s); })
        .def_static("j", &SplitComplex::unit)
        .def_property_readonly("re", [](const SplitComplex& z) { return to_fraction(z.re); })
        .def_property_readonly("im", [](const SplitComplex& z) { return to_fraction(z.im); })
        .def("conj", &SplitComplex::conj)
        .def("norm2", [](const SplitComplex& z) { return to_fraction(z.norm2()); })
        .def("seminorm", &splitc::seminorm)
        .def("cone", [](const SplitComplex& z) { return std::string(splitc::cone_name(splitc::cone_of(z))); })
        .def("inverse", &splitc::inverse)
        .def("lightcone",
             [](const SplitComplex& z) {
                 const auto l = splitc::lightcone(z);
                 return py::make_tuple(to_fraction(l.u), to_fraction(l.v));
             })
        .def("polar",
             [](const SplitComplex& z) {
                 const auto p = splitc::polar_decompose(z);
                 py::dict d;
                 d["sign"] = p.sign;
                 d["rho"] = p.rho;
                 d["theta"] = p.theta;
                 d["branch"] = std::string(splitc::cone_name(p.branch));
                 return d;
             })
        .def("__add__", [](const SplitComplex& a, const py::object& b) { return a + to_split(b); })
        .def("__radd__", [](const SplitComplex& a, const py::object& b) { return to_split(b) + a; })
        .def("__sub__", [](const SplitComplex& a, const py::object& b) { return a - to_split(b); })
        .def("__rsub__", [](const SplitComplex& a, const py::object& b) { return to_split(b) - a; })
        .def("__mul__", [](const SplitComplex& a, const py::object& b) { return a * to_split(b); })
        .def("__rmul__", [](const SplitComplex& a, const py::object& b) { return to_split(b) * a; })
        .def("__neg__", [](const SplitComplex& a) { return SplitComplex(0) - a; })
        .def("__eq__", [](const SplitComplex& a, const py::object& b) { return a == to_split(b); })
        .def("__hash__", [](const SplitComplex& z) { return py::hash(py::str(to_string(z))); })
        .def("__str__", [](const SplitComplex& z) { return to_string(z); })
        .def("__repr__", [](const SplitComplex& z) { return "Split(" + to_string(z) + ")"; });

    py::class_<PolySymbol>(m, "Poly")
        .def(py::init([](const std::string& s) { return expr::parse_poly(s); }))
        .def_property_readonly("degree", &PolySymbol::degree)
        .def_property_readonly("ring", [](const PolySymbol& f) { return std::string(phase::ring_name(f.ring())); })
        .def("conj", &PolySymbol::conj)
        .def("__add__", [](const PolySymbol& a, const py::object& b) { return a + to_poly(b); })
        .def("__sub__", [](const PolySymbol& a, const py::object& b) { return a - to_poly(b); })
        .def("__mul__", [](const PolySymbol& a, const py::object& b) { return a * to_poly(b); })
        .def("__eq__", [](const PolySymbol& a, const py::object& b) { return a == to_poly(b); })
        .def("__str__", [](const PolySymbol& f) { return phase::to_string(f); })
        .def("__repr__", [](const PolySymbol& f) { return "Poly('" + phase::to_string(f) + "')"; });

    m.def(
        "star", [](const py::object& f, const py::object& g, const std::string& cls, const py::object& hbar) {
            return phase::star(to_poly(f), to_poly(g), make(cls, hbar));
        },
        py::arg("f"), py::arg("g"), py::arg("cls") = "hyperbolic", py::arg("hbar") = 1);

    m.def(
        "gaussian_star",
        [](const py::object& a, const py::object& b, const std::string& cls, const py::object& hbar) {
            const auto r = phase::gaussian_star_isotropic(to_rational(a), to_rational(b), make(cls, hbar));
            return py::make_tuple(to_fraction(r.prefactor), to_fraction(r.width));
        },
        py::arg("a"), py::arg("b"), py::arg("cls") = "elliptic", py::arg("hbar") = 1);

    m.def(
        "expectation",
        [](const py::object& g, const std::string& cls, const py::object& hbar) {
            const auto c = make(cls, hbar);
            const auto e = phase::expectation(to_poly(g), phase::wigner_ground_state(c.hbar), c);
            py::dict d;
            d["lhs"] = pi_scalar(e.lhs);
            d["chain"] = pi_scalar(e.chain_rhs);
            d["literal"] = pi_scalar(e.literal_rhs);
            return d;
        },
        py::arg("g"), py::arg("cls") = "hyperbolic", py::arg("hbar") = 1,
        "Expectation of g* star g in the oscillator ground state.");

    m.def(
        "negativity_search",
        [](const std::string& cls, const py::object& hbar, int degree, std::size_t trials, std::uint64_t seed,
           const py::object& target) {
            const auto c = make(cls, hbar);
            phase::NegativityOptions o;
            o.degree_bound = degree;
            o.trials = trials;
            o.seed = seed;
            o.target = to_rational(target);
            const auto r = phase::negativity_search(phase::wigner_ground_state(c.hbar), c, o);
            py::dict d;
            d["found"] = r.found;
            d["trials_run"] = r.trials_run;
            d["min_value"] = r.min_value;
            if (r.found) {
                d["trial"] = r.trial;
                d["witness"] = r.witness;
                d["value"] = pi_scalar(r.value);
            }
            return d;
        },
        py::arg("cls") = "hyperbolic", py::arg("hbar") = 1, py::arg("degree") = 1, py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("target") = 0);

    m.def(
        "para_spectral_radius",
        [](const std::vector<py::list>& rows) {
            const std::size_t n = rows.size();
            std::vector<SplitComplex> entries;
            for (const auto& row : rows) {
                if (row.size() != n) throw py::value_error("matrix must be square");
                for (const auto& e : row) entries.push_back(to_split(e));
            }
            const auto r = dmatrix::para_spectral_radius(dmatrix::DMatrix(n, std::move(entries)));
            py::dict d;
            d["value"] = r.value ? py::object(py::float_(*r.value)) : py::object(py::none());
            py::list ws;
            for (const auto& w : r.witnesses) {
                py::dict wd;
                wd["from_plus"] = w.from_plus;
                wd["eigenvalue"] = w.eigenvalue;
                if (w.exact_lambda)
                    wd["lambda"] = *w.exact_lambda;
                else
                    wd["lambda"] = py::make_tuple(w.lambda_re, w.lambda_im);
                ws.append(wd);
            }
            d["witnesses"] = ws;
            return d;
        },
        py::arg("rows"));

    m.def("para_norm", [](const py::iterable& x) { return para::para_norm(to_vec(x)); }, py::arg("x"));

    m.def(
        "minimizer_scan",
        [](const py::iterable& x, const py::iterable& q0, const py::iterable& q1, std::size_t grid) {
            const auto s = para::minimizer_scan(to_vec(x), {to_vec(q0), to_vec(q1)}, grid);
            py::list ms;
            for (const auto& mz : s.minimizers) {
                py::dict d;
                d["t"] = mz.t;
                d["point"] = mz.point;
                d["delta"] = mz.delta;
                ms.append(d);
            }
            py::dict d;
            d["minimizers"] = ms;
            d["min_value"] = s.min_value;
            return d;
        },
        py::arg("x"), py::arg("q0"), py::arg("q1"), py::arg("grid") = 201);

    m.def(
        "axiom_suite",
        [](const std::string& cls, const py::object& hbar, std::size_t samples, std::uint64_t seed, std::size_t dim) {
            const auto c = make(cls, hbar);
            std::vector<PropertyReport> rs;
            {
                py::gil_scoped_release release;
                if (c.j_squared < 0)
                    rs = comp::run_axiom_suite(comp::standard_rep<GaussComplex>(c, dim), samples, seed);
                else if (c.j_squared > 0)
                    rs = comp::run_axiom_suite(comp::standard_rep<SplitComplex>(c, dim), samples, seed);
                else
                    rs = comp::run_axiom_suite(phase::phase_space_algebra(c, 4), samples, seed);
            }
            return reports(rs);
        },
        py::arg("cls") = "hyperbolic", py::arg("hbar") = 1, py::arg("samples") = 200, py::arg("seed") = 0,
        py::arg("dim") = 2);

    m.def(
        "phase_axioms",
        [](const std::string& cls, const py::object& hbar, std::size_t samples, std::uint64_t seed, int degree) {
            return reports(phase::check_phase_space_axioms(make(cls, hbar), samples, seed, degree));
        },
        py::arg("cls") = "hyperbolic", py::arg("hbar") = 1, py::arg("samples") = 100, py::arg("seed") = 0,
        py::arg("degree") = 3);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{cli::tool_name};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
