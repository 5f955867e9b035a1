// Acceptance run: one line per criterion with its verdict, measured time and
// budget. Exit status is 0 when every criterion passes or fails only as a
// documented known defect (see README, "Known defects").

#include "hqm/composability.hpp"
#include "hqm/dmatrix.hpp"
#include "hqm/para_analysis.hpp"
#include "hqm/parallel.hpp"
#include "hqm/phasespace.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hqm;
using comp::make_class;
using phase::PolySymbol;
using phase::Ring;

namespace {

constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> body;
};

// criteria whose literal statement is false; they still run and print FAIL
const std::set<int> known_defects = {6};

bool excused(int id);

std::string join_reports(const std::vector<PropertyReport>& rs, bool& pass) {
    std::ostringstream os;
    std::size_t samples = 0, failures = 0;
    for (const auto& r : rs) {
        samples += r.samples;
        failures += r.failure_count;
        if (!r.passed()) {
            pass = false;
            os << r.law << " failed; ";
        }
    }
    os << rs.size() << " laws, " << samples << " samples, " << failures << " failures";
    return os.str();
}

Outcome axiom_suite() {
    Outcome o;
    std::vector<PropertyReport> all;
    for (auto& r : comp::run_axiom_suite(comp::standard_rep<GaussComplex>(make_class(-1, 1), 2), 200, seed))
        all.push_back(r);
    for (auto& r : comp::run_axiom_suite(comp::standard_rep<SplitComplex>(make_class(1, 1), 2), 200, seed))
        all.push_back(r);
    for (auto& r : comp::run_axiom_suite(phase::phase_space_algebra(make_class(0, 1), 4), 200, seed))
        all.push_back(r);
    for (const auto& r : all)
        if (r.samples < 200) o.pass = false;
    o.detail = join_reports(all, o.pass);
    return o;
}

Outcome composition() {
    Outcome o;
    const auto base = comp::standard_rep<GaussComplex>(make_class(-1, 1), 2);
    const auto composed = comp::tensor_compose(base, base);
    auto rs = comp::run_axiom_suite(composed, 200, seed);
    const auto big = comp::standard_rep<GaussComplex>(make_class(-1, 1), 4);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        Rng rng = sample_rng(seed + 1, i);
        const auto x = kron(base.sample(rng), base.sample(rng));
        const auto y = kron(base.sample(rng), base.sample(rng));
        if (!(composed.alpha_core(x, y) == big.alpha_core(x, y)) || !(composed.sigma(x, y) == big.sigma(x, y)))
            ++mismatches;
    }
    o.detail = join_reports(rs, o.pass) + "; 4x4 mismatches " + std::to_string(mismatches) + "/100";
    o.pass = o.pass && mismatches == 0;
    return o;
}

Outcome phase_realizations() {
    Outcome o;
    std::vector<PropertyReport> all;
    for (int s : {-1, 1}) {
        const auto cls = make_class(s, 1);
        for (auto& r : phase::check_phase_space_axioms(cls, 100, seed, 3)) all.push_back(r);
        all.push_back(phase::check_star_associative(cls, 100, seed, 4));
    }
    o.detail = join_reports(all, o.pass);
    return o;
}

Outcome commutators() {
    Outcome o;
    int checked = 0;
    for (const Rational hbar : {Rational(1), Rational(1, 3), Rational(7, 2)})
        for (int s : {-1, 1}) {
            const auto cls = make_class(s, hbar);
            const auto x = PolySymbol::x(), p = PolySymbol::p();
            const auto comm = phase::star(x, p, cls) - phase::star(p, x, cls);
            const auto want = PolySymbol::unit(phase::star_ring(s)) * hbar;
            ++checked;
            if (!(comm == want)) {
                o.pass = false;
                o.detail += "hbar=" + to_string(hbar) + " got " + phase::to_string(comm) + "; ";
            }
        }
    o.detail += std::to_string(checked) + " commutators checked";
    return o;
}

Outcome born_rule() {
    Outcome o;
    std::size_t done = 0, bad = 0;
    for (std::size_t i = 0; done < 100; ++i) {
        Rng rng = sample_rng(seed + 2, i);
        const auto z = splitc::random_split(rng);
        if (sgn(z.norm2()) == 0) continue;
        ++done;
        const auto t = dmatrix::scalar_matrix(z, 2);
        const auto r = dmatrix::para_spectral_radius(t);
        // c = z1 + z2 gives lambda = (c/2)(1 + j); c = z1 - z2 gives (c/2)(1 - j)
        const Rational cu = z.re + z.im, cv = z.re - z.im;
        const SplitComplex lp(cu / 2, cu / 2), lm(cv / 2, -cv / 2);
        bool ok = r.value && *r.value == 0.0 && r.witnesses.size() == 2;
        for (const auto& w : r.witnesses) {
            ok = ok && w.exact_lambda && *w.exact_lambda == (w.from_plus ? lp : lm);
            ok = ok && w.exact_lambda && sgn(w.exact_lambda->norm2()) == 0 && dmatrix::para_spectrum_witness(t, *w.exact_lambda);
        }
        if (!ok) ++bad;
    }
    o.pass = bad == 0;
    o.detail = std::to_string(done) + " scalar operators, " + std::to_string(bad) + " mismatches";
    return o;
}

struct PositivityTally {
    std::size_t negative = 0, literal_mismatch = 0, chain_mismatch = 0;
};

PositivityTally positivity_sweep() {
    const auto cls = make_class(-1, 1);
    const auto f0 = phase::wigner_ground_state(1);
    const auto per = parallel_map<std::array<bool, 3>>(10000, [&](std::size_t i) {
        Rng rng = sample_rng(seed + 3, i);
        const auto g = phase::random_poly(rng, Ring::Complex, 3);
        const auto e = phase::expectation(g, f0, cls);
        return std::array<bool, 3>{e.lhs.real_sign() < 0 || sgn(e.lhs.value.im) != 0, !(e.lhs == e.literal_rhs),
                                   !(e.lhs == e.chain_rhs)};
    });
    PositivityTally t;
    for (const auto& a : per) {
        t.negative += a[0];
        t.literal_mismatch += a[1];
        t.chain_mismatch += a[2];
    }
    return t;
}

PositivityTally positivity_cache;
bool positivity_done = false;

const PositivityTally& positivity() {
    if (!positivity_done) {
        positivity_cache = positivity_sweep();
        positivity_done = true;
    }
    return positivity_cache;
}

Outcome elliptic_positivity() {
    const auto& t = positivity();
    Outcome o;
    o.pass = t.negative == 0 && t.literal_mismatch == 0;
    o.detail = "10000 samples, negative " + std::to_string(t.negative) +
               ", lhs != (2 pi hbar) int |F0*g|^2 on " + std::to_string(t.literal_mismatch);
    return o;
}

Outcome hyperbolic_witness() {
    Outcome o;
    const auto cls = make_class(1, 1);
    const auto f0 = phase::wigner_ground_state(1);
    const auto ref = PolySymbol::x(Ring::Split) + PolySymbol::p(Ring::Split) * PolySymbol::constant(phase::Coeff{0, 3}, Ring::Split);
    const auto e = phase::expectation(ref, f0, cls);
    phase::NegativityOptions opts;
    opts.degree_bound = 1;
    opts.trials = 10000;
    opts.seed = seed;
    opts.target = -1;
    const auto r = phase::negativity_search(f0, cls, opts);
    o.pass = r.found && r.value.pi_power == 0 && r.value.value.re <= -1 && e.lhs.value.re == -1 &&
             sgn(e.lhs.value.im) == 0;
    o.detail = "reference x+3jp -> " + phase::to_string(e.lhs);
    if (r.found)
        o.detail += "; search trial " + std::to_string(r.trial) + ": g = " + phase::to_string(r.witness) + " -> " +
                    phase::to_string(r.value);
    else
        o.detail += "; search NotFound";
    return o;
}

Outcome purity() {
    Outcome o;
    const Rational hbar = 1;
    const auto g = phase::gaussian_star_isotropic(1, 1, make_class(-1, hbar));
    const bool closed = 2 * g.prefactor == 1 && g.width == 1;
    // 2 pi hbar int F0^2 against int F0 = 1
    const double h = hbar.get_d();
    const int cells = 200;
    const double L = 9.0, w = 2 * L / cells;
    static const double xs[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
    static const double ws[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};
    double i2 = 0;
    for (int a = 0; a < cells; ++a)
        for (int i = 0; i < 3; ++i) {
            const double x = -L + (a + 0.5) * w + xs[i] * w / 2;
            for (int b = 0; b < cells; ++b)
                for (int k = 0; k < 3; ++k) {
                    const double p = -L + (b + 0.5) * w + xs[k] * w / 2;
                    const double f = std::exp(-(x * x + p * p) / h) / (M_PI * h);
                    i2 += ws[i] * ws[k] * w * w / 4 * f * f;
                }
        }
    const double rel = std::fabs(2 * M_PI * h * i2 - 1.0);
    bool singular = false;
    try {
        phase::gaussian_star_isotropic(1, 1, make_class(1, hbar));
    } catch (const HyperbolicSingularity&) {
        singular = true;
    }
    o.pass = closed && rel <= 1e-6 && singular;
    std::ostringstream os;
    os << "prefactor " << to_string(g.prefactor) << ", width " << to_string(g.width) << ", quadrature rel err "
       << rel << ", hyperbolic a=b=1 " << (singular ? "singular" : "not singular");
    o.detail = os.str();
    return o;
}

Outcome para_suite() {
    Outcome o;
    std::vector<PropertyReport> all;
    const auto pairs = para::random_pairs(10000, seed);
    all.push_back(para::polarization_check(pairs));
    all.push_back(para::parallelogram_check(pairs));
    all.push_back(para::para_cauchy_schwarz_check(pairs));
    std::vector<para::Vec> vecs;
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng = sample_rng(seed + 4, i);
        vecs.push_back({splitc::random_split(rng), splitc::random_split(rng)});
    }
    const std::vector<SplitComplex> scalars = {SplitComplex::unit(), SplitComplex(0, -1), SplitComplex(-1),
                                               SplitComplex(2, 1), SplitComplex(1, 3)};
    all.push_back(para::check_pn_axioms(vecs, scalars)[0]);
    const auto scan = para::minimizer_scan({SplitComplex(0)}, {{SplitComplex(1, Rational(-1, 2))},
                                                               {SplitComplex(1, Rational(1, 2))}});
    const double want = std::sqrt(3.0) / 2;
    bool two = scan.minimizers.size() == 2;
    std::set<long> ims;
    for (const auto& m : scan.minimizers) {
        two = two && std::fabs(m.delta - want) <= 1e-9 && std::fabs(m.point[0].first - 1) <= 1e-9 &&
              std::fabs(std::fabs(m.point[0].second) - 0.5) <= 1e-9;
        ims.insert(m.point[0].second > 0 ? 1 : -1);
    }
    two = two && ims.size() == 2;
    o.detail = join_reports(all, o.pass) + "; minimizers " + std::to_string(scan.minimizers.size());
    o.pass = o.pass && two;
    return o;
}

Outcome reversed_triangle() {
    Outcome o;
    const auto r = para::reversed_triangle_sweep(10000, seed, 1e-12);
    o.pass = r.passed() && r.samples == 10000;
    o.detail = std::to_string(r.samples) + " same-cone pairs, " + std::to_string(r.failure_count) + " violations";
    return o;
}

// a known defect only excuses the literal mismatch; positivity and the
// corrected ordering must still hold on every sample
bool excused(int id) {
    if (!known_defects.count(id)) return false;
    if (id == 6) return positivity().negative == 0 && positivity().chain_mismatch == 0;
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "axiom suite, three classes", 60, axiom_suite},
        {2, "tensor composition fixed point", 30, composition},
        {3, "phase-space realizations", 60, phase_realizations},
        {4, "canonical commutators", 5, commutators},
        {5, "para spectral radius of scalars", 5, born_rule},
        {6, "elliptic positivity, literal ordering", 120, elliptic_positivity},
        {7, "hyperbolic negativity witness", 10, hyperbolic_witness},
        {8, "purity of the ground state", 30, purity},
        {9, "para-analysis suite", 60, para_suite},
        {10, "reversed triangle inequality", 10, reversed_triangle},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs <= c.budget_s;
        const bool pass = o.pass && in_budget;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << timing << "] "
                  << o.detail << (in_budget ? "" : " (over budget)")
                  << (!pass && in_budget && excused(c.id) ? " (known defect)" : "") << '\n';
        if (!pass && !(in_budget && excused(c.id))) ++unexpected;
        if (c.id == 6) {
            const auto& t = positivity();
            std::cout << "INFO criterion 6, state on the right of the star: lhs != (2 pi hbar) int |g star F0|^2 on "
                      << t.chain_mismatch << " of 10000 samples\n";
        }
    }
    std::cout << (unexpected ? "acceptance: unexpected failures\n" : "acceptance: ok\n");
    return unexpected ? 1 : 0;
}
