#include "hqm/cli.hpp"

#include "hqm/composability.hpp"
#include "hqm/dmatrix.hpp"
#include "hqm/expr.hpp"
#include "hqm/para_analysis.hpp"
#include "hqm/phasespace.hpp"
#include "hqm/splitc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace hqm::cli {

using nlohmann::json;
using phase::GaussPoly;
using phase::PolySymbol;

const std::vector<Subcommand>& dispatch_table() {
    static const std::vector<Subcommand> table = {
        {"verify-axioms",
         "Jordan, Lie, Leibniz, composability and beta checks for a reference realization",
         {"cli.parse", "composability.associator", "composability.check_jordan", "composability.check_lie",
          "composability.check_leibniz", "composability.check_comp_identity", "composability.beta",
          "composability.check_beta_associative", "composability.standard_rep", "composability.tensor_compose",
          "phasespace.nabla_power"}},
        {"phase-axioms",
         "axiom checks for the phase-space products and star associativity",
         {"phasespace.check_phase_space_axioms", "phasespace.moyal_alpha", "phasespace.moyal_sigma",
          "phasespace.hyper_alpha", "phasespace.hyper_sigma", "phasespace.star", "composability.classical_limit_note"}},
        {"star",
         "one product of two symbols (star, alpha, sigma, nabla, poisson, gaussian)",
         {"cli.parse", "phasespace.star", "phasespace.nabla_power", "phasespace.moyal_alpha", "phasespace.moyal_sigma",
          "phasespace.hyper_alpha", "phasespace.hyper_sigma", "phasespace.gaussian_star_isotropic"}},
        {"expectation",
         "expectation of g* * g in a phase-space state, with both sides of the positivity chain",
         {"cli.parse", "phasespace.expectation", "phasespace.integrate", "phasespace.wigner_ground_state",
          "phasespace.gaussian_star_isotropic"}},
        {"negativity-search",
         "random search for g with negative expectation",
         {"cli.parse", "phasespace.negativity_search", "phasespace.wigner_ground_state", "phasespace.expectation"}},
        {"spectral",
         "para spectral radius, operator para-norm and C*-conditions of a split-complex matrix",
         {"cli.parse", "dmatrix.trace_inner_product", "dmatrix.decompose", "dmatrix.recompose",
          "dmatrix.para_spectrum_witness", "dmatrix.para_spectral_radius", "dmatrix.complex_spectral_radius",
          "dmatrix.operator_para_norm", "dmatrix.para_cstar_check"}},
        {"para-suite",
         "para-metric and para-norm laws, scalar identities and the reversed triangle inequality",
         {"para_analysis.check_pm_axioms", "para_analysis.para_cauchy_detect",
          "para_analysis.divergent_implies_para_cauchy_demo", "para_analysis.check_pn_axioms",
          "para_analysis.polarization_check", "para_analysis.parallelogram_check",
          "para_analysis.para_cauchy_schwarz_check", "para_analysis.para_normed_algebra_check", "splitc.mul",
          "splitc.seminorm", "splitc.cone_of"}},
        {"minimizer-demo",
         "best approximation of a point on a segment (non-unique minimizers)",
         {"cli.parse", "para_analysis.minimizer_scan"}},
        {"polar",
         "cone, seminorm, polar form, inverse and lightcone coordinates of a split-complex number",
         {"cli.parse", "splitc.mul", "splitc.seminorm", "splitc.polar_decompose", "splitc.cone_of", "splitc.inverse",
          "splitc.lightcone"}},
    };
    return table;
}

const std::vector<std::string>& operation_catalog() {
    static const std::vector<std::string> ops = {
        "splitc.mul", "splitc.seminorm", "splitc.polar_decompose", "splitc.cone_of", "splitc.inverse",
        "splitc.lightcone",
        "dmatrix.trace_inner_product", "dmatrix.decompose", "dmatrix.recompose", "dmatrix.para_spectrum_witness",
        "dmatrix.para_spectral_radius", "dmatrix.complex_spectral_radius", "dmatrix.operator_para_norm",
        "dmatrix.para_cstar_check",
        "composability.associator", "composability.check_jordan", "composability.check_lie",
        "composability.check_leibniz", "composability.check_comp_identity", "composability.beta",
        "composability.check_beta_associative", "composability.standard_rep", "composability.tensor_compose",
        "composability.classical_limit_note",
        "phasespace.nabla_power", "phasespace.moyal_alpha", "phasespace.moyal_sigma", "phasespace.hyper_alpha",
        "phasespace.hyper_sigma", "phasespace.star", "phasespace.gaussian_star_isotropic",
        "phasespace.wigner_ground_state", "phasespace.integrate", "phasespace.expectation",
        "phasespace.negativity_search", "phasespace.check_phase_space_axioms",
        "para_analysis.check_pm_axioms", "para_analysis.para_cauchy_detect",
        "para_analysis.divergent_implies_para_cauchy_demo", "para_analysis.check_pn_axioms",
        "para_analysis.polarization_check", "para_analysis.parallelogram_check",
        "para_analysis.para_cauchy_schwarz_check", "para_analysis.minimizer_scan",
        "para_analysis.para_normed_algebra_check",
        "cli.parse",
    };
    return ops;
}

namespace {

// --- JSON helpers -------------------------------------------------------------

json scalar_json(const SplitComplex& z) { return {{"re", to_string(z.re)}, {"im", to_string(z.im)}, {"text", to_string(z)}}; }

json pi_json(const phase::PiScalar& s) {
    return {{"text", phase::to_string(s)},
            {"re", to_string(s.value.re)},
            {"im", to_string(s.value.im)},
            {"pi_power", s.pi_power},
            {"approx", s.real_approx()}};
}

json poly_json(const PolySymbol& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"dx", m.dx}, {"dp", m.dp}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
    return {{"text", phase::to_string(p)}, {"ring", std::string(phase::ring_name(p.ring()))}, {"terms", terms}};
}

json gauss_json(const GaussPoly& g) {
    return {{"text", phase::to_string(g)},
            {"width", to_string(g.width)},
            {"scale", to_string(g.scale)},
            {"pi_power", g.pi_power},
            {"poly", poly_json(g.poly)}};
}

struct Report {
    json config = json::object();
    json results = json::array();
    json witnesses = json::array();
    bool failed = false;

    void add(const PropertyReport& r) {
        results.push_back(to_json(r));
        failed = failed || !r.passed();
    }
    void add(const std::vector<PropertyReport>& rs) {
        for (const auto& r : rs) add(r);
    }

    json to_json_doc(const std::string& subcommand) const {
        json doc;
        doc["tool"] = tool_name;
        doc["version"] = tool_version;
        json cfg = config;
        cfg["subcommand"] = subcommand;
        doc["config"] = cfg;
        doc["results"] = results;
        doc["witnesses"] = witnesses;
        return doc;
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

Rational rational_arg(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    } catch (const SyntaxError& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

comp::CompClass class_arg(const RunConfig& cfg) {
    return comp::make_class(comp::class_from_name(cfg.cls), rational_arg(cfg.hbar, "--hbar"));
}

void echo_class(Report& rep, const RunConfig& cfg) {
    rep.config["class"] = cfg.cls;
    rep.config["hbar"] = to_string(rational_arg(cfg.hbar, "--hbar"));
}

// --- verify-axioms --------------------------------------------------------------

template <class S>
void matrix_axioms(const RunConfig& cfg, const comp::CompClass& cls, std::size_t samples, Report& rep) {
    const auto base = comp::standard_rep<S>(cls, cfg.dim);
    rep.add(comp::run_axiom_suite(base, samples, cfg.seed));

    // beta reproduces the matrix product for the sign matching J^2
    const int sign = cls.j_squared == -1 ? -1 : 1;
    Rng rng = sample_rng(cfg.seed, 0);
    const auto a = base.sample(rng);
    const auto b = base.sample(rng);
    const auto prod = comp::beta(base, sign, a, b);
    const auto ident = comp::beta(base, sign, *base.identity, b);
    rep.witnesses.push_back({{"kind", "beta_is_matrix_product"},
                             {"sign", sign},
                             {"a", to_string(a)},
                             {"b", to_string(b)},
                             {"beta", to_string(prod)},
                             {"equals_ab", prod == a * b},
                             {"identity_is_unit", ident == b}});

    if (!cfg.tensor) return;
    const auto composed = comp::tensor_compose(base, base);
    auto suite = comp::run_axiom_suite(composed, samples, cfg.seed);
    for (auto& r : suite) r.law = "tensor_" + r.law;
    rep.add(suite);

    // composed products against the standard representation on the product space
    const auto big = comp::standard_rep<S>(cls, cfg.dim * cfg.dim);
    PropertyReport fixed;
    fixed.law = "tensor_fixed_point";
    fixed.samples = samples;
    for (std::size_t i = 0; i < samples; ++i) {
        Rng r = sample_rng(cfg.seed ^ 0x5eedULL, i);
        const auto x = kron(base.sample(r), base.sample(r));
        const auto y = kron(base.sample(r), base.sample(r));
        if (!(composed.alpha_core(x, y) == big.alpha_core(x, y)))
            fixed.add_failure({"alpha_12 = standard alpha", {to_string(x), to_string(y)},
                               to_string(composed.alpha_core(x, y)), to_string(big.alpha_core(x, y))});
        if (!(composed.sigma(x, y) == big.sigma(x, y)))
            fixed.add_failure({"sigma_12 = standard sigma", {to_string(x), to_string(y)}, to_string(composed.sigma(x, y)),
                               to_string(big.sigma(x, y))});
    }
    rep.add(fixed);
}

int verify_axioms(const RunConfig& cfg, Report& rep) {
    const auto cls = class_arg(cfg);
    const std::size_t samples = cfg.samples ? cfg.samples : 200;
    echo_class(rep, cfg);
    rep.config["samples"] = samples;
    rep.config["seed"] = cfg.seed;
    switch (cls.j_squared) {
    case -1:
        rep.config["dim"] = cfg.dim;
        rep.config["tensor"] = cfg.tensor;
        matrix_axioms<GaussComplex>(cfg, cls, samples, rep);
        break;
    case 1:
        rep.config["dim"] = cfg.dim;
        rep.config["tensor"] = cfg.tensor;
        matrix_axioms<SplitComplex>(cfg, cls, samples, rep);
        break;
    default: {
        if (cfg.tensor) throw std::invalid_argument("--tensor needs a matrix realization (elliptic or hyperbolic)");
        const int degree = cfg.degree >= 0 ? cfg.degree : 4;
        rep.config["degree"] = degree;
        rep.add(comp::run_axiom_suite(phase::phase_space_algebra(cls, degree), samples, cfg.seed));
        rep.witnesses.push_back({{"kind", "poisson_bracket"},
                                 {"f", "x"},
                                 {"g", "p"},
                                 {"value", phase::to_string(phase::nabla_power(PolySymbol::x(), PolySymbol::p(), 1))}});
    }
    }
    return rep.failed ? PropertyFailure : Success;
}

// --- phase-axioms -------------------------------------------------------------------

int phase_axioms(const RunConfig& cfg, Report& rep) {
    const auto cls = class_arg(cfg);
    const std::size_t samples = cfg.samples ? cfg.samples : 100;
    const int degree = cfg.degree >= 0 ? cfg.degree : 3;
    echo_class(rep, cfg);
    rep.config["samples"] = samples;
    rep.config["seed"] = cfg.seed;
    rep.config["degree"] = degree;
    rep.add(phase::check_phase_space_axioms(cls, samples, cfg.seed, degree));
    if (cls.j_squared != 0) {
        rep.config["star_degree"] = cfg.star_degree;
        rep.config["star_samples"] = cfg.star_samples;
        if (cfg.star_samples > 0)
            rep.add(phase::check_star_associative(cls, cfg.star_samples, cfg.seed, cfg.star_degree));
        const PolySymbol x = PolySymbol::x(), p = PolySymbol::p();
        const PolySymbol comm = phase::star(x, p, cls) - phase::star(p, x, cls);
        rep.witnesses.push_back({{"kind", "canonical_commutator"}, {"value", poly_json(comm)}});
    } else {
        // sigma is plain multiplication: its associator vanishes and alpha is the Poisson bracket
        const PolySymbol x = PolySymbol::x(), p = PolySymbol::p();
        rep.witnesses.push_back({{"kind", "classical_limit"},
                                 {"sigma_associator_x_p_xp",
                                  comp::show(comp::associator(phase::phase_space_algebra(cls, degree),
                                                              comp::Product::Sigma, x, p, x * p))},
                                 {"poisson_x_p", phase::to_string(phase::poisson_bracket(x, p))}});
    }
    return rep.failed ? PropertyFailure : Success;
}

// --- star -------------------------------------------------------------------------------

std::string show_symbol(const GaussPoly& g) {
    if (sgn(g.width) == 0 && g.pi_power == 0) return phase::to_string(g.poly * g.scale);
    return phase::to_string(g);
}

int star_cmd(const RunConfig& cfg, std::ostream& out, Report& rep) {
    if (cfg.args.size() != 2) throw std::invalid_argument("star needs two operands");
    const Rational hbar = rational_arg(cfg.hbar, "--hbar");
    echo_class(rep, cfg);
    rep.config["product"] = cfg.product;
    rep.config["operands"] = cfg.args;

    if (cfg.product == "gaussian") {
        const auto cls = class_arg(cfg);
        const Rational a = rational_arg(cfg.args[0], "width a");
        const Rational b = rational_arg(cfg.args[1], "width b");
        json w = {{"kind", "gaussian_star"}, {"a", to_string(a)}, {"b", to_string(b)}};
        std::string text;
        try {
            const auto g = phase::gaussian_star_isotropic(a, b, cls);
            w["prefactor"] = to_string(g.prefactor);
            w["width"] = to_string(g.width);
            text = "prefactor " + to_string(g.prefactor) + ", width " + to_string(g.width);
        } catch (const HyperbolicSingularity& e) {
            w["singular"] = e.what();
            text = std::string("singular: ") + e.what();
        }
        rep.witnesses.push_back(w);
        if (!cfg.json) out << text << '\n';
        return Success;
    }

    const GaussPoly f = expr::to_symbol(expr::parse(cfg.args[0]), hbar);
    const GaussPoly g = expr::to_symbol(expr::parse(cfg.args[1]), hbar);
    const bool fp = sgn(f.width) == 0, gp = sgn(g.width) == 0;
    auto poly_of = [](const GaussPoly& s) { return s.poly * s.scale; };
    std::string text;
    json result;
    if (cfg.product == "star") {
        const auto cls = class_arg(cfg);
        if (fp && gp) {
            const auto r = phase::star(poly_of(f), poly_of(g), cls);
            text = phase::to_string(r);
            result = poly_json(r);
        } else if (gp) {
            const auto r = phase::star(f, poly_of(g), cls);
            text = show_symbol(r);
            result = gauss_json(r);
        } else if (fp) {
            const auto r = phase::star(poly_of(f), g, cls);
            text = show_symbol(r);
            result = gauss_json(r);
        } else {
            throw UnsupportedPair("star of two Gaussians: use --product gaussian");
        }
    } else if (cfg.product == "nabla") {
        if (cfg.order < 0) throw std::invalid_argument("--order must be nonnegative");
        const auto r = phase::nabla_power(f, g, cfg.order);
        text = show_symbol(r);
        result = gauss_json(r);
        rep.config["order"] = cfg.order;
    } else if (cfg.product == "alpha" || cfg.product == "sigma" || cfg.product == "poisson") {
        if (!fp || !gp) throw UnsupportedPair("alpha and sigma take polynomial operands");
        const int s = comp::class_from_name(cfg.cls);
        PolySymbol r;
        if (cfg.product == "poisson")
            r = phase::poisson_bracket(poly_of(f), poly_of(g));
        else if (s == -1)
            r = cfg.product == "alpha" ? phase::moyal_alpha(poly_of(f), poly_of(g), hbar)
                                       : phase::moyal_sigma(poly_of(f), poly_of(g), hbar);
        else if (s == 1)
            r = cfg.product == "alpha" ? phase::hyper_alpha(poly_of(f), poly_of(g), hbar)
                                       : phase::hyper_sigma(poly_of(f), poly_of(g), hbar);
        else
            r = cfg.product == "alpha" ? phase::phase_alpha(0, poly_of(f), poly_of(g), hbar)
                                       : phase::phase_sigma(0, poly_of(f), poly_of(g), hbar);
        text = phase::to_string(r);
        result = poly_json(r);
    } else {
        throw std::invalid_argument("unknown --product '" + cfg.product + "'");
    }
    rep.witnesses.push_back({{"kind", cfg.product}, {"result", result}});
    if (!cfg.json) out << text << '\n';
    return Success;
}

// --- expectation ------------------------------------------------------------------------

int expectation_cmd(const RunConfig& cfg, Report& rep) {
    if (cfg.args.size() != 1) throw std::invalid_argument("expectation needs one operand g");
    const auto cls = class_arg(cfg);
    echo_class(rep, cfg);
    rep.config["g"] = cfg.args[0];
    rep.config["state"] = cfg.state;
    const PolySymbol g = expr::to_poly(expr::parse(cfg.args[0]));
    const GaussPoly f = expr::to_symbol(expr::parse(cfg.state), cls.hbar);
    const auto e = phase::expectation(g, f, cls);
    rep.witnesses.push_back({{"kind", "expectation"},
                             {"g", poly_json(g)},
                             {"g_star_g", poly_json(phase::star(g.conj(), g, cls))},
                             {"state_norm", pi_json(phase::integrate(f))},
                             {"lhs", pi_json(e.lhs)},
                             {"chain_rhs", pi_json(e.chain_rhs)},
                             {"literal_rhs", pi_json(e.literal_rhs)},
                             {"chain_holds", e.lhs == e.chain_rhs},
                             {"literal_holds", e.lhs == e.literal_rhs}});

    // purity of the ground state, when it is the state in use
    if (f.poly == PolySymbol::constant(1) || f.poly == PolySymbol::constant(1).promoted(f.ring())) {
        json w = {{"kind", "state_self_star"}, {"a", to_string(f.width)}};
        try {
            const auto gs = phase::gaussian_star_isotropic(f.width, f.width, cls);
            w["prefactor"] = to_string(gs.prefactor);
            w["width"] = to_string(gs.width);
        } catch (const HyperbolicSingularity& ex) {
            w["singular"] = ex.what();
        }
        rep.witnesses.push_back(w);
    }
    return Success;
}

// --- negativity-search ---------------------------------------------------------------------

int negativity_cmd(const RunConfig& cfg, Report& rep) {
    const auto cls = class_arg(cfg);
    phase::NegativityOptions opts;
    opts.degree_bound = cfg.degree >= 0 ? cfg.degree : 1;
    opts.min_degree = cfg.min_degree;
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    opts.target = rational_arg(cfg.target, "--target");
    opts.keep_samples = !cfg.csv_path.empty();
    echo_class(rep, cfg);
    rep.config["degree"] = opts.degree_bound;
    rep.config["min_degree"] = opts.min_degree;
    rep.config["trials"] = opts.trials;
    rep.config["seed"] = opts.seed;
    rep.config["target"] = to_string(opts.target);
    rep.config["state"] = cfg.state;

    const GaussPoly f = expr::to_symbol(expr::parse(cfg.state), cls.hbar);
    const auto res = phase::negativity_search(f, cls, opts);
    json w = {{"kind", "negativity_search"}, {"found", res.found}, {"trials_run", res.trials_run}};
    if (res.found) {
        w["trial"] = res.trial;
        w["g"] = poly_json(res.witness);
        w["value"] = pi_json(res.value);
    } else {
        w["result"] = "NotFound";
    }
    w["min_value"] = res.trials_run ? json(res.min_value) : json(nullptr);
    w["constant_case"] = {{"g", poly_json(res.constant_case.g)}, {"value", pi_json(res.constant_case.value)}};
    rep.witnesses.push_back(w);

    if (!cfg.csv_path.empty()) {
        std::ostringstream csv;
        csv.precision(17);
        csv << "trial,g,value\n";
        for (std::size_t i = 0; i < res.samples.size(); ++i)
            csv << i << ",\"" << phase::to_string(res.samples[i].first) << "\"," << res.samples[i].second << '\n';
        write_file(cfg.csv_path, csv.str());
    }
    return Success;
}

// --- spectral ---------------------------------------------------------------------------------

dmatrix::DMatrix load_dmatrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read '" + path + "'");
    const auto m = parse_matrix_json(json::parse(f));
    dmatrix::DMatrix d(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t k = 0; k < m.n; ++k)
            d(i, k) = SplitComplex(parse_rational(m.entries[i][k].first), parse_rational(m.entries[i][k].second));
    return d;
}

dmatrix::CMatrix load_cmatrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read '" + path + "'");
    const auto m = parse_matrix_json(json::parse(f));
    const auto n = static_cast<Eigen::Index>(m.n);
    dmatrix::CMatrix c(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k)
            c(i, k) = {parse_rational(m.entries[i][k].first).get_d(), parse_rational(m.entries[i][k].second).get_d()};
    return c;
}

int spectral_cmd(const RunConfig& cfg, Report& rep) {
    rep.config["seed"] = cfg.seed;
    if (!cfg.complex_path.empty()) {
        rep.config["complex"] = cfg.complex_path;
        const auto c = load_cmatrix(cfg.complex_path);
        rep.witnesses.push_back({{"kind", "complex_spectral_radius"}, {"value", dmatrix::complex_spectral_radius(c)}});
        return Success;
    }
    dmatrix::DMatrix t;
    if (!cfg.scalar.empty()) {
        rep.config["scalar"] = cfg.scalar;
        rep.config["dim"] = cfg.dim;
        t = dmatrix::scalar_matrix(expr::parse_split(cfg.scalar), cfg.dim);
    } else if (!cfg.matrix_path.empty()) {
        rep.config["matrix"] = cfg.matrix_path;
        t = load_dmatrix(cfg.matrix_path);
    } else {
        throw std::invalid_argument("spectral needs --scalar, --matrix or --complex");
    }

    const auto parts = dmatrix::decompose(t);
    const bool round_trip = dmatrix::recompose(parts) == t;
    const auto radius = dmatrix::para_spectral_radius(t);
    json ws = json::array();
    bool witnesses_ok = true;
    for (const auto& w : radius.witnesses) {
        json j = {{"component", w.from_plus ? "plus" : "minus"},
                  {"eigenvalue", w.eigenvalue},
                  {"lambda", {{"re", w.lambda_re}, {"im", w.lambda_im}}}};
        if (w.exact_lambda) {
            j["exact_lambda"] = scalar_json(*w.exact_lambda);
            const bool singular = dmatrix::para_spectrum_witness(t, *w.exact_lambda);
            j["singular"] = singular;
            j["lambda_norm2"] = to_string(w.exact_lambda->norm2());
            witnesses_ok = witnesses_ok && singular && sgn(w.exact_lambda->norm2()) == 0;
        }
        ws.push_back(j);
    }
    dmatrix::ParaNormOptions opts;
    opts.samples = cfg.samples ? cfg.samples : 64;
    opts.seed = cfg.seed;
    const auto norm = dmatrix::operator_para_norm(t, opts);
    rep.config["samples"] = opts.samples;

    rep.witnesses.push_back({{"kind", "para_spectral_radius"},
                             {"value", radius.value ? json(*radius.value) : json("Empty")},
                             {"plus_real_eigenvalues", radius.plus_real_eigenvalues},
                             {"minus_real_eigenvalues", radius.minus_real_eigenvalues},
                             {"witnesses", ws}});
    rep.witnesses.push_back({{"kind", "lightcone_components"},
                             {"plus", to_string(parts.plus)},
                             {"minus", to_string(parts.minus)},
                             {"round_trip", round_trip}});
    rep.witnesses.push_back({{"kind", "trace_inner_product_self"}, {"value", scalar_json(dmatrix::trace_inner_product(t, t))}});
    rep.witnesses.push_back({{"kind", "operator_para_norm"},
                             {"estimate", norm.value},
                             {"samples_used", norm.samples_used},
                             {"note", "randomized upper-bound estimate"}});
    rep.add(dmatrix::para_cstar_check({t}, opts));

    PropertyReport wr;
    wr.law = "spectral_witnesses_singular";
    wr.samples = radius.witnesses.size();
    if (!witnesses_ok) wr.add_failure({"T - lambda I singular with |‖lambda‖| = 0", {to_string(t)}, "false", "true"});
    rep.add(wr);
    return rep.failed ? PropertyFailure : Success;
}

// --- para-suite -------------------------------------------------------------------------------

para::SampledSequence sequence(std::string generator, std::size_t len, const std::function<SplitComplex(std::size_t)>& f) {
    para::SampledSequence s;
    s.generator = std::move(generator);
    for (std::size_t n = 1; n <= len; ++n) s.terms.push_back(f(n));
    return s;
}

int para_suite(const RunConfig& cfg, Report& rep) {
    const std::size_t samples = cfg.samples ? cfg.samples : 10000;
    rep.config["samples"] = samples;
    rep.config["seed"] = cfg.seed;
    rep.config["dim"] = cfg.dim;

    const auto pairs = para::random_pairs(samples, cfg.seed);
    rep.add(para::polarization_check(pairs));
    rep.add(para::parallelogram_check(pairs));
    rep.add(para::para_cauchy_schwarz_check(pairs));

    std::vector<SplitComplex> sample;
    for (std::size_t i = 0; i < std::min<std::size_t>(samples, 300); ++i) sample.push_back(pairs[i].first);
    rep.add(para::para_normed_algebra_check(sample));

    // PN1 / PN2 on D^dim; the scalars include the sign-flipping unit j
    std::vector<para::Vec> vecs;
    const std::size_t nvec = std::min<std::size_t>(samples, 200);
    for (std::size_t i = 0; i < nvec; ++i) {
        Rng rng = sample_rng(cfg.seed ^ 0x9a11ULL, i);
        para::Vec v;
        for (std::size_t k = 0; k < cfg.dim; ++k) v.push_back(splitc::random_split(rng));
        vecs.push_back(std::move(v));
    }
    std::vector<SplitComplex> scalars = {SplitComplex(1), SplitComplex::unit(), SplitComplex(-1),
                                         SplitComplex(0, -1)};
    for (std::size_t i = 0; i < 20; ++i) scalars.push_back(pairs[i].second);
    rep.add(para::check_pn_axioms(vecs, scalars));

    rep.add(para::reversed_triangle_sweep(samples, cfg.seed));

    // PM axioms on points of D: one cone-connected configuration
    std::vector<SplitComplex> pts = {{0, 0}, {2, 1}, {5, 2}, {9, 4}, {14, 5}};
    rep.add(para::check_pm_axioms(para::FiniteParaMetric::from_points(pts), para::cone_path(pts)));

    // para-Cauchy sequences on prefixes
    const auto growing = sequence("n(2+j)", 50, [](std::size_t n) {
        return SplitComplex(Rational(2 * static_cast<long>(n)), Rational(static_cast<long>(n)));
    });
    const auto constant = sequence("constant 1+j/3", 50, [](std::size_t) { return SplitComplex(1, Rational(1, 3)); });
    const auto alternating = sequence("alternating 0, 3", 50, [](std::size_t n) {
        return n % 2 ? SplitComplex(0) : SplitComplex(3);
    });
    json detect = json::array();
    for (const auto* s : {&growing, &constant, &alternating})
        detect.push_back({{"generator", s->generator},
                          {"prefix", s->terms.size()},
                          {"epsilon", "1"},
                          {"N", 2},
                          {"para_cauchy", para::para_cauchy_detect(*s, 1, 2)}});
    rep.witnesses.push_back({{"kind", "para_cauchy_detect"}, {"sequences", detect}});

    const auto symmetric = sequence("(-1)^n n(2+j)", 50, [](std::size_t n) {
        const long s = n % 2 ? -1 : 1;
        return SplitComplex(Rational(2 * s * static_cast<long>(n)), Rational(s * static_cast<long>(n)));
    });
    auto demo = para::divergent_implies_para_cauchy_demo(symmetric, SplitComplex(0), 1, 2);
    rep.add(demo);
    return rep.failed ? PropertyFailure : Success;
}

// --- minimizer-demo ---------------------------------------------------------------------

para::Vec vec_arg(const std::string& text) {
    para::Vec v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) v.push_back(expr::parse_split(part));
    if (v.empty()) throw std::invalid_argument("empty point");
    return v;
}

int minimizer_cmd(const RunConfig& cfg, Report& rep) {
    rep.config["x"] = cfg.x;
    rep.config["q0"] = cfg.q0;
    rep.config["q1"] = cfg.q1;
    rep.config["grid"] = cfg.grid;
    const auto scan = para::minimizer_scan(vec_arg(cfg.x), {vec_arg(cfg.q0), vec_arg(cfg.q1)}, cfg.grid);
    json mins = json::array();
    for (const auto& m : scan.minimizers) {
        json pt = json::array();
        for (const auto& [re, im] : m.point) pt.push_back({{"re", re}, {"im", im}});
        mins.push_back({{"t", m.t}, {"point", pt}, {"delta", m.delta}});
    }
    rep.witnesses.push_back({{"kind", "minimizers"},
                             {"count", scan.minimizers.size()},
                             {"min_value", scan.min_value},
                             {"minimizers", mins}});
    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, para::profile_csv(scan));
    return Success;
}

// --- polar ------------------------------------------------------------------------------------

int polar_cmd(const RunConfig& cfg, Report& rep) {
    if (cfg.args.size() != 1) throw std::invalid_argument("polar needs one operand");
    rep.config["z"] = cfg.args[0];
    const SplitComplex z = expr::parse_split(cfg.args[0]);
    const auto lc = splitc::lightcone(z);
    json w = {{"kind", "polar"},
              {"z", scalar_json(z)},
              {"cone", std::string(splitc::cone_name(splitc::cone_of(z)))},
              {"z_conj_z", to_string(splitc::mul(z.conj(), z).re)},
              {"seminorm", splitc::seminorm(z)},
              {"lightcone", {{"u", to_string(lc.u)}, {"v", to_string(lc.v)}}}};
    try {
        const auto pf = splitc::polar_decompose(z);
        const auto [re, im] = splitc::reconstruct(pf);
        w["polar"] = {{"sign", pf.sign},
                      {"rho", pf.rho},
                      {"theta", pf.theta},
                      {"branch", std::string(splitc::cone_name(pf.branch))},
                      {"reconstructed", {{"re", re}, {"im", im}}}};
    } catch (const NullConeError& e) {
        w["polar"] = nullptr;
        w["polar_error"] = e.what();
    }
    try {
        w["inverse"] = scalar_json(splitc::inverse(z));
    } catch (const ZeroDivisorError& e) {
        w["inverse"] = nullptr;
        w["inverse_error"] = e.what();
    }
    rep.witnesses.push_back(w);
    return Success;
}

} // namespace

MatrixEntries parse_matrix_json(const json& j) {
    MatrixEntries m;
    if (!j.contains("n") || !j.contains("entries")) throw std::invalid_argument("matrix JSON needs 'n' and 'entries'");
    m.n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (rows.size() != m.n) throw DimensionMismatch("matrix JSON: row count differs from n");
    auto text = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_number()) return v.dump();
        throw std::invalid_argument("matrix JSON: entries must be numbers or strings");
    };
    for (const auto& row : rows) {
        if (row.size() != m.n) throw DimensionMismatch("matrix JSON: row length differs from n");
        std::vector<std::pair<std::string, std::string>> r;
        for (const auto& e : row) r.emplace_back(text(e.value("re", json(0))), text(e.value("im", json(0))));
        m.entries.push_back(std::move(r));
    }
    return m;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Report rep;
    int code = Success;
    try {
        const auto& s = cfg.subcommand;
        if (s == "verify-axioms")
            code = verify_axioms(cfg, rep);
        else if (s == "phase-axioms")
            code = phase_axioms(cfg, rep);
        else if (s == "star")
            code = star_cmd(cfg, out, rep);
        else if (s == "expectation")
            code = expectation_cmd(cfg, rep);
        else if (s == "negativity-search")
            code = negativity_cmd(cfg, rep);
        else if (s == "spectral")
            code = spectral_cmd(cfg, rep);
        else if (s == "para-suite")
            code = para_suite(cfg, rep);
        else if (s == "minimizer-demo")
            code = minimizer_cmd(cfg, rep);
        else if (s == "polar")
            code = polar_cmd(cfg, rep);
        else
            throw std::invalid_argument("unknown subcommand '" + s + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }

    const std::string doc = rep.to_json_doc(cfg.subcommand).dump(2) + "\n";
    const bool text_mode = cfg.subcommand == "star" && !cfg.json;
    if (!text_mode) out << doc;
    if (!cfg.report_path.empty()) {
        try {
            write_file(cfg.report_path, doc);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return UsageError;
        }
    }
    return code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Composability classes, para-analysis and phase-space experiments", tool_name};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);
    RunConfig cfg;

    std::map<std::string, CLI::App*> subs;
    for (const auto& sc : dispatch_table()) subs[sc.name] = app.add_subcommand(sc.name, sc.summary);

    auto common = [&](CLI::App* s) {
        s->add_option("--seed", cfg.seed, "random seed");
        s->add_option("--report", cfg.report_path, "also write the JSON report to this file");
    };
    auto with_class = [&](CLI::App* s) {
        s->add_option("--class", cfg.cls, "elliptic | parabolic | hyperbolic")
            ->check(CLI::IsMember({"elliptic", "parabolic", "hyperbolic"}));
        s->add_option("--hbar", cfg.hbar, "Planck constant (rational)");
    };

    {
        auto* s = subs["verify-axioms"];
        common(s);
        with_class(s);
        s->add_option("--samples", cfg.samples, "random triples per law (default 200)");
        s->add_option("--dim", cfg.dim, "matrix dimension (default 2)");
        s->add_option("--degree", cfg.degree, "polynomial degree for the parabolic class (default 4)");
        s->add_flag("--tensor", cfg.tensor, "also check the tensor-composed algebra");
    }
    {
        auto* s = subs["phase-axioms"];
        common(s);
        with_class(s);
        s->add_option("--samples", cfg.samples, "random triples per law (default 100)");
        s->add_option("--degree", cfg.degree, "polynomial degree (default 3)");
        s->add_option("--star-degree", cfg.star_degree, "degree for star associativity (default 4)");
        s->add_option("--star-samples", cfg.star_samples, "triples for star associativity (default 100)");
    }
    {
        auto* s = subs["star"];
        with_class(s);
        s->add_option("--report", cfg.report_path, "also write the JSON report to this file");
        s->add_option("--product", cfg.product, "star | alpha | sigma | nabla | poisson | gaussian")
            ->check(CLI::IsMember({"star", "alpha", "sigma", "nabla", "poisson", "gaussian"}));
        s->add_option("--order", cfg.order, "order k for --product nabla");
        s->add_flag("--json", cfg.json, "print the JSON report instead of the symbol");
        s->add_option("operands", cfg.args, "two symbols (or two widths for --product gaussian)")->expected(2);
    }
    {
        auto* s = subs["expectation"];
        common(s);
        with_class(s);
        s->add_option("--state", cfg.state, "phase-space state (default F0)");
        s->add_option("g", cfg.args, "observable g")->expected(1);
    }
    {
        auto* s = subs["negativity-search"];
        common(s);
        with_class(s);
        s->add_option("--degree", cfg.degree, "maximal degree of g (default 1)");
        s->add_option("--min-degree", cfg.min_degree, "minimal degree of g (default 1)");
        s->add_option("--trials", cfg.trials, "number of random g (default 1000)");
        s->add_option("--target", cfg.target, "accept values <= target (default 0)");
        s->add_option("--state", cfg.state, "phase-space state (default F0)");
        s->add_option("--csv", cfg.csv_path, "write (trial, g, value) rows");
    }
    {
        auto* s = subs["spectral"];
        common(s);
        s->add_option("--scalar", cfg.scalar, "use z I for a split-complex z");
        s->add_option("--dim", cfg.dim, "dimension for --scalar (default 2)");
        s->add_option("--matrix", cfg.matrix_path, "split-complex matrix JSON file");
        s->add_option("--complex", cfg.complex_path, "complex matrix JSON file (operator 2-norm)");
        s->add_option("--samples", cfg.samples, "para-norm estimator samples (default 64)");
    }
    {
        auto* s = subs["para-suite"];
        common(s);
        s->add_option("--samples", cfg.samples, "random pairs (default 10000)");
        s->add_option("--dim", cfg.dim, "vector dimension for PN1/PN2 (default 1)");
    }
    {
        auto* s = subs["minimizer-demo"];
        s->add_option("--report", cfg.report_path, "also write the JSON report to this file");
        s->add_option("--x", cfg.x, "point (comma-separated coordinates)");
        s->add_option("--q0", cfg.q0, "segment start");
        s->add_option("--q1", cfg.q1, "segment end");
        s->add_option("--grid", cfg.grid, "grid resolution (default 201)");
        s->add_option("--csv", cfg.csv_path, "write (t, distance) profile");
    }
    {
        auto* s = subs["polar"];
        s->add_option("--report", cfg.report_path, "also write the JSON report to this file");
        s->add_option("z", cfg.args, "split-complex number, e.g. 3+5j")->expected(1);
    }

    // para-suite works on D itself unless asked otherwise
    subs["para-suite"]->preparse_callback([&](std::size_t) { cfg.dim = 1; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return Success;
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return e.get_exit_code() == 0 ? Success : UsageError;
    }
    for (const auto& [name, s] : subs)
        if (s->parsed()) cfg.subcommand = name;
    return run(cfg, out, err);
}

} // namespace hqm::cli
