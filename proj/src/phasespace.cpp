#include "hqm/phasespace.hpp"

#include "hqm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hqm::phase {

namespace {

Rational power(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

Rational double_factorial(int n) {
    Rational r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

void require_same_hbar(const GaussPoly& a, const GaussPoly& b) {
    if (a.hbar != b.hbar) throw Error("Gaussian symbols built with different hbar");
}

} // namespace

double PiScalar::real_approx() const { return value.re.get_d() * std::pow(std::numbers::pi, pi_power); }

std::string to_string(const PiScalar& s) {
    std::string v = to_string(PolySymbol::constant(s.value, s.ring));
    if (s.pi_power == 0 || s.value.is_zero()) return v;
    if (v.find(' ') != std::string::npos) v = "(" + v + ")";
    return v + "*pi^" + std::to_string(s.pi_power);
}

// --- GaussPoly ---------------------------------------------------------------

GaussPoly GaussPoly::from_poly(PolySymbol p, const Rational& hbar) {
    GaussPoly g;
    g.poly = std::move(p);
    g.hbar = hbar;
    return g;
}

GaussPoly GaussPoly::dx() const {
    GaussPoly g = *this;
    g.poly = poly.dx();
    if (sgn(width) != 0) g.poly -= PolySymbol::x() * poly * Rational(2 * width / hbar);
    return g;
}

GaussPoly GaussPoly::dp() const {
    GaussPoly g = *this;
    g.poly = poly.dp();
    if (sgn(width) != 0) g.poly -= PolySymbol::p() * poly * Rational(2 * width / hbar);
    return g;
}

GaussPoly GaussPoly::conj() const {
    GaussPoly g = *this;
    g.poly = poly.conj();
    return g;
}

GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
    require_same_hbar(a, b);
    GaussPoly g;
    g.width = a.width + b.width;
    g.scale = a.scale * b.scale;
    g.pi_power = a.pi_power + b.pi_power;
    g.poly = a.poly * b.poly;
    g.hbar = a.hbar;
    return g;
}

GaussPoly operator*(GaussPoly a, const PolySymbol& b) {
    a.poly = a.poly * b;
    return a;
}

GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) {
    require_same_hbar(a, b);
    if (b.poly.is_zero()) {
        GaussPoly r = a;
        r.poly = r.poly.promoted(b.ring());
        return r;
    }
    if (a.poly.is_zero()) {
        GaussPoly r = b;
        r.poly = r.poly.promoted(a.ring());
        return r;
    }
    if (a.width != b.width || a.pi_power != b.pi_power)
        throw Error("cannot add Gaussian symbols with different exponents");
    GaussPoly g = a;
    g.scale = 1;
    g.poly = a.poly * a.scale + b.poly * b.scale;
    return g;
}

GaussPoly GaussPoly::operator*(const Coeff& c) const {
    GaussPoly g = *this;
    g.poly = poly * c;
    return g;
}

GaussPoly GaussPoly::operator*(const Rational& c) const {
    GaussPoly g = *this;
    g.poly *= c;
    return g;
}

std::string to_string(const GaussPoly& g) {
    std::string out = to_string(g.scale);
    if (g.pi_power != 0) out += "*pi^" + std::to_string(g.pi_power);
    if (sgn(g.width) != 0) out += "*exp(-" + to_string(Rational(g.width / g.hbar)) + "*(x^2 + p^2))";
    return out + "*(" + to_string(g.poly) + ")";
}

// --- nabla -------------------------------------------------------------------

namespace {

PolySymbol times(const PolySymbol& a, const PolySymbol& b) { return a * b; }
GaussPoly times(const GaussPoly& a, const PolySymbol& b) { return a * b; }
GaussPoly times(const PolySymbol& a, const GaussPoly& b) { return b * a; }
GaussPoly times(const GaussPoly& a, const GaussPoly& b) { return a * b; }

PolySymbol empty_like(const PolySymbol& f, const PolySymbol& g) { return PolySymbol(join(f.ring(), g.ring())); }

template <class F, class G>
GaussPoly empty_like(const F& f, const G& g) {
    GaussPoly out;
    if constexpr (std::is_same_v<F, GaussPoly>) {
        out = f;
        if constexpr (std::is_same_v<G, GaussPoly>) out = f * g;
    } else {
        out = g;
    }
    out.poly = PolySymbol(join(f.ring(), g.ring()));
    return out;
}

Ring ring_of(const PolySymbol& p) { return p.ring(); }
Ring ring_of(const GaussPoly& g) { return g.ring(); }

template <class S>
S nth(S s, int nx, int np) {
    for (int i = 0; i < nx; ++i) s = s.dx();
    for (int i = 0; i < np; ++i) s = s.dp();
    return s;
}

// sum_i (-1)^i C(k,i) (d_x^{k-i} d_p^i f)(d_p^{k-i} d_x^i g)
template <class F, class G>
auto nabla_impl(const F& f, const G& g, int k) {
    if (k < 0) throw std::invalid_argument("nabla order must be nonnegative");
    auto acc = empty_like(f, g);
    for (int i = 0; i <= k; ++i) {
        const F df = nth(f, k - i, i);
        if (df.is_zero()) continue;
        const G dg = nth(g, i, k - i);
        if (dg.is_zero()) continue;
        auto term = times(df, dg);
        Rational c = binomial(k, i);
        if (i % 2 == 1) c = -c;
        acc = acc + term * c;
    }
    return acc;
}

int poly_degree(const PolySymbol& p) { return std::max(p.degree(), 0); }

} // namespace

PolySymbol nabla_power(const PolySymbol& f, const PolySymbol& g, int k) { return nabla_impl(f, g, k); }
GaussPoly nabla_power(const GaussPoly& f, const PolySymbol& g, int k) { return nabla_impl(f, g, k); }
GaussPoly nabla_power(const PolySymbol& f, const GaussPoly& g, int k) { return nabla_impl(f, g, k); }

GaussPoly nabla_power(const GaussPoly& f, const GaussPoly& g, int k) {
    if (sgn(f.width) != 0 && sgn(g.width) != 0)
        throw UnsupportedPair("nabla series of two Gaussians does not terminate; use gaussian_star_isotropic");
    return nabla_impl(f, g, k);
}

// --- products ---------------------------------------------------------------------

namespace {

// Terms with k > kmax vanish.
int series_length(const PolySymbol& f, const PolySymbol& g) { return std::min(poly_degree(f), poly_degree(g)); }
int series_length(const GaussPoly&, const PolySymbol& g) { return poly_degree(g); }
int series_length(const PolySymbol& f, const GaussPoly&) { return poly_degree(f); }

// sum over k = parity, parity+2, ... of c_k nabla^k with
// c_k = s^m (hbar/2)^k / k!, k = 2m + parity
PolySymbol parity_series(int s, int parity, const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    PolySymbol acc(join(f.ring(), g.ring()));
    const int kmax = series_length(f, g);
    for (int k = parity; k <= kmax; k += 2) {
        const int m = (k - parity) / 2;
        const Rational sm = m == 0 ? Rational(1) : power(Rational(s), m);
        if (sgn(sm) == 0) break;
        acc += nabla_power(f, g, k) * Rational(sm * power(hbar / 2, k) / factorial(k));
    }
    return acc;
}

Coeff j_power(int s, int k) {
    // J^k reduced with J^2 = s
    const Rational r = k / 2 == 0 ? Rational(1) : power(Rational(s), k / 2);
    return k % 2 == 0 ? Coeff{r, 0} : Coeff{0, r};
}

template <class F, class G>
auto star_impl(const F& f, const G& g, const comp::CompClass& cls) {
    const Ring r = star_ring(cls.j_squared);
    join(ring_of(f), r);
    join(ring_of(g), r);
    auto acc = empty_like(f, g);
    if constexpr (std::is_same_v<decltype(acc), PolySymbol>)
        acc = PolySymbol(r);
    else
        acc.poly = PolySymbol(r);
    const int kmax = series_length(f, g);
    for (int k = 0; k <= kmax; ++k) {
        auto term = nabla_power(f, g, k);
        if (term.is_zero()) continue;
        Coeff c = j_power(cls.j_squared, k);
        const Rational w = power(cls.hbar / 2, k) / factorial(k);
        c.re *= w;
        c.im *= w;
        if constexpr (std::is_same_v<decltype(acc), PolySymbol>) {
            acc += term.promoted(r) * c;
        } else {
            term.poly = term.poly.promoted(r);
            acc = acc + term * c;
        }
    }
    return acc;
}

} // namespace

PolySymbol phase_alpha(int j_squared, const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return parity_series(j_squared, 1, f, g, hbar) * Rational(2 / hbar);
}

PolySymbol phase_sigma(int j_squared, const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return parity_series(j_squared, 0, f, g, hbar);
}

Ring star_ring(int j_squared) {
    switch (j_squared) {
    case -1: return Ring::Complex;
    case 1: return Ring::Split;
    case 0: throw UnsupportedClass("no star product is provided for the parabolic class");
    }
    throw std::invalid_argument("J^2 must be -1, 0 or +1");
}

PolySymbol star(const PolySymbol& f, const PolySymbol& g, const comp::CompClass& cls) {
    return star_impl(f, g, cls);
}
GaussPoly star(const GaussPoly& f, const PolySymbol& g, const comp::CompClass& cls) {
    return star_impl(f, g, cls);
}
GaussPoly star(const PolySymbol& f, const GaussPoly& g, const comp::CompClass& cls) {
    return star_impl(f, g, cls);
}

// --- Gaussians ---------------------------------------------------------------------

GaussianStar gaussian_star_isotropic(const Rational& a, const Rational& b, const comp::CompClass& cls) {
    if (sgn(a) < 0 || sgn(b) < 0) throw std::invalid_argument("Gaussian widths must be nonnegative");
    Rational den;
    switch (cls.j_squared) {
    case -1: den = 1 + a * b; break;
    case 1:
        den = 1 - a * b;
        if (sgn(den) == 0)
            throw HyperbolicSingularity("hyperbolic Gaussian star diverges at a*b = 1 (a=" + to_string(a) +
                                        ", b=" + to_string(b) + ")");
        break;
    default: throw UnsupportedClass("no star product is provided for the parabolic class");
    }
    return {1 / den, (a + b) / den};
}

GaussPoly wigner_ground_state(const Rational& hbar) {
    if (sgn(hbar) <= 0) throw std::invalid_argument("hbar must be positive");
    GaussPoly f = GaussPoly::from_poly(PolySymbol::constant(1), hbar);
    f.width = 1;
    f.scale = 1 / hbar;
    f.pi_power = -1;
    return f;
}

PiScalar integrate(const GaussPoly& s) {
    PiScalar out{s.ring(), {0, 0}, s.pi_power + 1};
    if (s.poly.is_zero()) return out;
    if (sgn(s.width) <= 0) throw NonIntegrable("phase-space integral needs a positive Gaussian width");
    const Rational beta = s.width / s.hbar;
    for (const auto& [m, c] : s.poly.terms()) {
        if (m.dx % 2 != 0 || m.dp % 2 != 0) continue;
        // int x^m p^n exp(-beta r^2) = (m-1)!! (n-1)!! / (2 beta)^((m+n)/2) * pi / beta
        const Rational mom =
            double_factorial(m.dx - 1) * double_factorial(m.dp - 1) / (power(2 * beta, (m.dx + m.dp) / 2) * beta);
        out.value.re += c.re * mom;
        out.value.im += c.im * mom;
    }
    out.value.re *= s.scale;
    out.value.im *= s.scale;
    return out;
}

// --- expectation values --------------------------------------------------------------

namespace {

void check_ring_for_class(const PolySymbol& g, const comp::CompClass& cls) { join(g.ring(), star_ring(cls.j_squared)); }

PiScalar lhs_value(const PolySymbol& g, const GaussPoly& f, const comp::CompClass& cls) {
    return integrate(f * star(g.conj(), g, cls));
}

PiScalar two_pi_hbar_norm(const GaussPoly& h, const Rational& hbar) {
    PiScalar v = integrate(h.conj() * h);
    v.value.re *= 2 * hbar;
    v.value.im *= 2 * hbar;
    v.pi_power += 1;
    return v;
}

} // namespace

Expectation expectation(const PolySymbol& g, const GaussPoly& f, const comp::CompClass& cls) {
    check_ring_for_class(g, cls);
    if (f.hbar != cls.hbar) throw Error("state and class use different hbar");
    Expectation e;
    e.lhs = lhs_value(g, f, cls);
    e.chain_rhs = two_pi_hbar_norm(star(g, f, cls), cls.hbar);
    e.literal_rhs = two_pi_hbar_norm(star(f, g, cls), cls.hbar);
    return e;
}

namespace {

bool accept(const PiScalar& v, const Rational& target) {
    if (v.real_sign() >= 0) return false;
    if (v.pi_power == 0) return v.value.re <= target;
    return v.real_approx() <= target.get_d();
}

PolySymbol draw_g(Rng& rng, Ring ring, int min_degree, int max_degree) {
    std::uniform_int_distribution<int> deg(min_degree, max_degree);
    const int d = deg(rng);
    for (;;) {
        PolySymbol g = random_poly(rng, ring, d);
        if (g.degree() >= min_degree && !g.is_zero()) return g;
    }
}

} // namespace

NegativityResult negativity_search(const GaussPoly& f, const comp::CompClass& cls, const NegativityOptions& opts) {
    const Ring ring = star_ring(cls.j_squared);
    if (f.hbar != cls.hbar) throw Error("state and class use different hbar");
    NegativityResult res;
    const PolySymbol unit = PolySymbol::unit(ring);
    res.constant_case = {unit, lhs_value(unit, f, cls)};
    res.min_value = std::numeric_limits<double>::infinity();

    if (opts.degree_bound < opts.min_degree || opts.trials == 0) {
        res.min_value = 0;
        return res;
    }

    struct Trial {
        PolySymbol g;
        PiScalar value;
    };
    constexpr std::size_t chunk = 256;
    for (std::size_t start = 0; start < opts.trials && !res.found; start += chunk) {
        const std::size_t n = std::min(chunk, opts.trials - start);
        auto trials = parallel_map<Trial>(n, [&](std::size_t i) {
            Rng rng = sample_rng(opts.seed, start + i);
            PolySymbol g = draw_g(rng, ring, std::max(opts.min_degree, 0), opts.degree_bound);
            PiScalar v = lhs_value(g, f, cls);
            return Trial{std::move(g), std::move(v)};
        });
        for (std::size_t i = 0; i < n; ++i) {
            ++res.trials_run;
            res.min_value = std::min(res.min_value, trials[i].value.real_approx());
            if (opts.keep_samples) res.samples.emplace_back(trials[i].g, trials[i].value.real_approx());
            if (accept(trials[i].value, opts.target)) {
                res.found = true;
                res.trial = start + i;
                res.witness = trials[i].g;
                res.value = trials[i].value;
                break;
            }
        }
    }
    return res;
}

// --- axioms ---------------------------------------------------------------------------

comp::TwoProductAlgebra<PolySymbol> phase_space_algebra(const comp::CompClass& cls, int degree) {
    comp::TwoProductAlgebra<PolySymbol> alg;
    alg.name = "phase_space(" + std::string(comp::class_name(cls.j_squared)) + ", degree<=" + std::to_string(degree) +
               ")";
    alg.cls = cls;
    alg.alpha_j_power = 0;
    const int s = cls.j_squared;
    const Rational hbar = cls.hbar;
    alg.alpha_core = [s, hbar](const PolySymbol& f, const PolySymbol& g) { return phase_alpha(s, f, g, hbar); };
    alg.sigma = [s, hbar](const PolySymbol& f, const PolySymbol& g) { return phase_sigma(s, f, g, hbar); };
    alg.sample = [degree](Rng& rng) { return random_poly(rng, Ring::Real, degree); };
    if (s != 0) {
        const Ring r = star_ring(s);
        alg.times_j = [r](const PolySymbol& f) { return f.promoted(r).times_unit(); };
    }
    alg.identity = PolySymbol::constant(1);
    return alg;
}

std::vector<PropertyReport> check_phase_space_axioms(const comp::CompClass& cls, std::size_t samples,
                                                     std::uint64_t seed, int degree) {
    return comp::run_axiom_suite(phase_space_algebra(cls, degree), samples, seed);
}

PropertyReport check_star_associative(const comp::CompClass& cls, std::size_t samples, std::uint64_t seed,
                                      int degree) {
    const Ring ring = star_ring(cls.j_squared);
    auto per = parallel_map<std::optional<Failure>>(samples, [&](std::size_t i) -> std::optional<Failure> {
        Rng rng = sample_rng(seed, i);
        const PolySymbol f = random_poly(rng, ring, degree);
        const PolySymbol g = random_poly(rng, ring, degree);
        const PolySymbol h = random_poly(rng, ring, degree);
        const PolySymbol lhs = star(star(f, g, cls), h, cls);
        const PolySymbol rhs = star(f, star(g, h, cls), cls);
        if (lhs == rhs) return std::nullopt;
        return Failure{"(f*g)*h = f*(g*h)", {to_string(f), to_string(g), to_string(h)}, to_string(lhs), to_string(rhs)};
    });
    PropertyReport r;
    r.law = "star_associative";
    r.samples = samples;
    for (auto& f : per)
        if (f) r.add_failure(std::move(*f));
    r.notes.push_back(std::string("class: ") + std::string(comp::class_name(cls.j_squared)));
    return r;
}

} // namespace hqm::phase
