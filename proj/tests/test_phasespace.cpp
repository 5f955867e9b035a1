#include "hqm/phasespace.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using namespace hqm;
using namespace hqm::phase;
using comp::make_class;

namespace {

const PolySymbol X = PolySymbol::x(), P = PolySymbol::p();

PolySymbol c(long v, Ring r = Ring::Real) { return PolySymbol::constant(Rational(v), r); }

double approx(const PiScalar& s) { return s.real_approx(); }

Rational exact_real(const PiScalar& s) {
    EXPECT_EQ(sgn(s.value.im), 0);
    EXPECT_EQ(s.pi_power, 0) << to_string(s);
    return s.value.re;
}

} // namespace

TEST(Nabla, Examples) {
    EXPECT_EQ(nabla_power(X, P, 1), c(1));
    // d_x^2 x^2 * d_p^2 p^2 = 4; the mixed terms vanish
    EXPECT_EQ(nabla_power(X * X, P * P, 2), c(4));
    EXPECT_EQ(oracle::nabla_power(X * X, P * P, 2), c(4));
    Rng rng(41);
    const auto f = random_poly(rng, Ring::Real, 3), g = random_poly(rng, Ring::Real, 3);
    EXPECT_EQ(nabla_power(f, g, 0), f * g);
}

TEST(Nabla, MatchesTensorOracle) {
    Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        const auto f = random_poly(rng, Ring::Real, 4), g = random_poly(rng, Ring::Real, 4);
        for (int k = 0; k <= 5; ++k) ASSERT_EQ(nabla_power(f, g, k), oracle::nabla_power(f, g, k)) << k;
    }
}

TEST(Nabla, SkewByOrder) {
    Rng rng(43);
    const auto f = random_poly(rng, Ring::Real, 3), g = random_poly(rng, Ring::Real, 3);
    for (int k = 0; k <= 4; ++k) {
        const auto swapped = nabla_power(g, f, k);
        EXPECT_EQ(nabla_power(f, g, k), k % 2 ? -swapped : swapped);
    }
}

TEST(Nabla, TwoGaussiansRejected) {
    const auto f = wigner_ground_state(1);
    EXPECT_THROW(nabla_power(f, f, 1), UnsupportedPair);
    EXPECT_NO_THROW(nabla_power(f, X, 1));
}

TEST(PhaseProducts, MoyalExamples) {
    EXPECT_EQ(moyal_alpha(X, P, 1), c(1));
    EXPECT_EQ(moyal_sigma(X, P, 1), X * P);
    EXPECT_EQ(moyal_alpha(X * X, P * P, 1), X * P * Rational(4));
    // sigma picks up -(hbar^2/4) nabla^2 / 2! in the elliptic class
    EXPECT_EQ(moyal_sigma(X * X, P * P, 1), X * X * P * P - c(1) * Rational(1, 2));
}

TEST(PhaseProducts, HyperbolicExamples) {
    EXPECT_EQ(hyper_alpha(X, P, 1), c(1));
    EXPECT_EQ(hyper_sigma(X * X, P * P, 1), X * X * P * P + c(1) * Rational(1, 2));
    EXPECT_EQ(hyper_sigma(X * X, P * P, 3), X * X * P * P + c(1) * Rational(9, 2));
    Rng rng(44);
    for (int i = 0; i < 20; ++i) {
        const auto f = random_poly(rng, Ring::Real, 3);
        EXPECT_TRUE(hyper_alpha(f, f, Rational(1, 3)).is_zero());
        EXPECT_TRUE(moyal_alpha(f, f, 2).is_zero());
    }
}

TEST(PhaseProducts, TermByTermSeriesOracle) {
    Rng rng(45);
    for (int s : {-1, 0, 1})
        for (int i = 0; i < 20; ++i) {
            const auto f = random_poly(rng, Ring::Real, 4), g = random_poly(rng, Ring::Real, 4);
            const Rational hbar = Rational(1 + i % 3) / (1 + i % 2);
            PolySymbol sig(Ring::Real), al(Ring::Real);
            Rational fact = 1, hpow = 1, spow = 1;
            for (int k = 0; k <= 8; ++k) {
                // hpow = (hbar/2)^k, fact = k!
                const auto nk = oracle::nabla_power(f, g, k);
                if (k % 2 == 0)
                    sig += nk * (spow * hpow / fact);
                else {
                    al += nk * (spow * hpow / fact * 2 / hbar);
                    spow *= s;
                }
                hpow *= hbar / 2;
                fact *= k + 1;
            }
            EXPECT_EQ(phase_sigma(s, f, g, hbar), sig);
            EXPECT_EQ(phase_alpha(s, f, g, hbar), al);
        }
}

TEST(PhaseProducts, ParabolicIsPoissonAndProduct) {
    Rng rng(46);
    for (int i = 0; i < 20; ++i) {
        const auto f = random_poly(rng, Ring::Real, 4), g = random_poly(rng, Ring::Real, 4);
        EXPECT_EQ(phase_alpha(0, f, g, 1), poisson_bracket(f, g));
        EXPECT_EQ(phase_sigma(0, f, g, 1), f * g);
    }
}

TEST(Star, Examples) {
    const auto e = make_class(-1, 1), h = make_class(1, 1);
    EXPECT_EQ(to_string(star(X, P, e)), "x*p + (1/2)i");
    EXPECT_EQ(to_string(star(X, P, h)), "x*p + (1/2)j");
    EXPECT_EQ(star(X, P, e) - star(P, X, e), PolySymbol::unit(Ring::Complex));
    EXPECT_EQ(star(X, P, h) - star(P, X, h), PolySymbol::unit(Ring::Split));
}

TEST(Star, CanonicalCommutatorAcrossHbar) {
    for (const Rational hbar : {Rational(1), Rational(1, 3), Rational(7, 2)})
        for (int s : {-1, 1}) {
            const auto cls = make_class(s, hbar);
            const Ring r = star_ring(s);
            EXPECT_EQ(star(X, P, cls) - star(P, X, cls), PolySymbol::unit(r) * hbar);
        }
}

TEST(Star, MatchesTensorOracle) {
    Rng rng(47);
    for (int s : {-1, 1}) {
        const Ring r = star_ring(s);
        for (int i = 0; i < 30; ++i) {
            const auto f = random_poly(rng, r, 3), g = random_poly(rng, r, 3);
            const Rational hbar = Rational(1 + i % 4) / (1 + i % 3);
            ASSERT_EQ(star(f, g, make_class(s, hbar)), oracle::star(f, g, s, hbar));
        }
    }
}

TEST(Star, SigmaPlusAlphaDecomposition) {
    Rng rng(48);
    for (int s : {-1, 1}) {
        const auto cls = make_class(s, Rational(2, 3));
        for (int i = 0; i < 20; ++i) {
            const auto f = random_poly(rng, Ring::Real, 3), g = random_poly(rng, Ring::Real, 3);
            const auto rhs = phase_sigma(s, f, g, cls.hbar).promoted(star_ring(s)) +
                             phase_alpha(s, f, g, cls.hbar).promoted(star_ring(s)).times_unit() * (cls.hbar / 2);
            EXPECT_EQ(star(f, g, cls), rhs);
        }
    }
}

TEST(Star, ConjugationReversesOrder) {
    Rng rng(49);
    for (int s : {-1, 1}) {
        const auto cls = make_class(s, 1);
        const Ring r = star_ring(s);
        for (int i = 0; i < 20; ++i) {
            const auto f = random_poly(rng, r, 3), g = random_poly(rng, r, 3);
            EXPECT_EQ(star(f, g, cls).conj(), star(g.conj(), f.conj(), cls));
        }
    }
}

TEST(Star, ClassAndRingErrors) {
    EXPECT_THROW(star(X, P, make_class(0, 1)), UnsupportedClass);
    EXPECT_THROW(star(PolySymbol::unit(Ring::Split), X, make_class(-1, 1)), RingMismatch);
    EXPECT_THROW(star(PolySymbol::unit(Ring::Complex), X, make_class(1, 1)), RingMismatch);
    EXPECT_THROW(PolySymbol::unit(Ring::Complex) + PolySymbol::unit(Ring::Split), RingMismatch);
}

TEST(Star, AssociativityChecks) {
    for (int s : {-1, 1}) EXPECT_TRUE(check_star_associative(make_class(s, Rational(1, 2)), 20, 3, 4).passed());
}

TEST(PhaseAxioms, AllClassesPass) {
    for (int s : {-1, 0, 1}) {
        const auto rs = check_phase_space_axioms(make_class(s, 1), 30, 4, 3);
        ASSERT_EQ(rs.size(), 5u);
        for (const auto& r : rs) EXPECT_TRUE(r.passed()) << s << " " << r.law;
    }
}

TEST(Gaussian, ClosedForms) {
    const auto e = make_class(-1, 1), h = make_class(1, 1);
    auto g = gaussian_star_isotropic(1, 1, e);
    EXPECT_EQ(g.prefactor, Rational(1, 2));
    EXPECT_EQ(g.width, 1);
    g = gaussian_star_isotropic(1, 0, e);
    EXPECT_EQ(g.prefactor, 1);
    EXPECT_EQ(g.width, 1);
    g = gaussian_star_isotropic(1, 0, h);
    EXPECT_EQ(g.prefactor, 1);
    EXPECT_EQ(g.width, 1);
    EXPECT_THROW(gaussian_star_isotropic(1, 1, h), HyperbolicSingularity);
    EXPECT_THROW(gaussian_star_isotropic(2, Rational(1, 2), h), HyperbolicSingularity);
    EXPECT_THROW(gaussian_star_isotropic(1, 1, make_class(0, 1)), UnsupportedClass);
}

TEST(Gaussian, HermiteSeriesOracle) {
    struct Case {
        Rational a, b, hbar;
        int s;
    };
    const Case cases[] = {{Rational(1, 2), Rational(1, 2), 1, -1},
                          {Rational(1, 2), Rational(1, 2), 1, 1},
                          {Rational(1, 4), 1, Rational(1, 3), -1},
                          {Rational(1, 4), 1, Rational(7, 2), 1},
                          {Rational(1, 3), Rational(1, 5), 2, 1}};
    const double pts[][2] = {{0.3, 0.2}, {0.0, 0.0}, {-0.7, 0.45}};
    for (const auto& cs : cases) {
        const auto g = gaussian_star_isotropic(cs.a, cs.b, make_class(cs.s, cs.hbar));
        for (const auto& pt : pts) {
            const double hb = cs.hbar.get_d();
            const auto [even, odd] =
                oracle::gaussian_star_series(cs.a.get_d(), cs.b.get_d(), hb, cs.s, pt[0], pt[1]);
            const double closed =
                g.prefactor.get_d() * std::exp(-g.width.get_d() * (pt[0] * pt[0] + pt[1] * pt[1]) / hb);
            EXPECT_NEAR(even, closed, 1e-10 * std::max(1.0, closed)) << cs.s << " a=" << cs.a << " b=" << cs.b;
            EXPECT_NEAR(odd, 0.0, 1e-10);
        }
    }
}

TEST(Gaussian, GroundStateMoments) {
    for (const Rational hbar : {Rational(1), Rational(1, 3), Rational(7, 2)}) {
        const auto f = wigner_ground_state(hbar);
        EXPECT_EQ(exact_real(integrate(f)), 1);
        EXPECT_EQ(exact_real(integrate(f * (X * X))), hbar / 2);
        EXPECT_EQ(exact_real(integrate(f * X)), 0);
        EXPECT_EQ(exact_real(integrate(f * (X * X * P * P))), oracle::moment(2, hbar) * oracle::moment(2, hbar));
        EXPECT_EQ(exact_real(integrate(f * (P * P * P * P))), oracle::moment(4, hbar));
    }
}

TEST(Gaussian, NonIntegrable) {
    EXPECT_THROW(integrate(GaussPoly::from_poly(X, 1)), NonIntegrable);
    EXPECT_THROW(integrate(GaussPoly::from_poly(c(1), 1)), NonIntegrable);
}

TEST(Gaussian, PurityClosedFormAndQuadrature) {
    const Rational hbar = 1;
    const auto g = gaussian_star_isotropic(1, 1, make_class(-1, hbar));
    // F0 * F0 = (1/(pi hbar))^2 prefactor exp(-width r^2/hbar); times 2 pi hbar gives F0
    EXPECT_EQ(2 * g.prefactor, 1);
    EXPECT_EQ(g.width, 1);
    const double h = hbar.get_d();
    auto f0 = [h](double x, double p) { return std::exp(-(x * x + p * p) / h) / (M_PI * h); };
    // int F0 * F0 = int F0^2; 2 pi hbar times it must be int F0 = 1
    const double i2 = oracle::quad2([&](double x, double p) { return f0(x, p) * f0(x, p); });
    EXPECT_NEAR(2 * M_PI * h * i2, 1.0, 1e-6);
    const double i1 = oracle::quad2(f0);
    EXPECT_NEAR(i1, 1.0, 1e-6);
}

TEST(Expectation, Normalization) {
    for (int s : {-1, 1}) {
        const auto cls = make_class(s, 1);
        const auto e = expectation(c(1, star_ring(s)), wigner_ground_state(1), cls);
        EXPECT_EQ(exact_real(e.lhs), 1);
    }
}

TEST(Expectation, EllipticWitness) {
    const auto cls = make_class(-1, 1);
    const auto g = X + P * PolySymbol::constant(Coeff{0, 3}, Ring::Complex);
    EXPECT_EQ(star(g.conj(), g, cls), X * X + P * P * Rational(9) - c(3, Ring::Complex));
    const auto e = expectation(g, wigner_ground_state(1), cls);
    EXPECT_EQ(exact_real(e.lhs), 2);
    EXPECT_EQ(exact_real(e.chain_rhs), 2);
    // the other ordering integrates g g* instead
    EXPECT_EQ(exact_real(e.literal_rhs), 8);
    const auto ggs = oracle::ground_average(oracle::star(g, g.conj(), -1, 1), 1);
    EXPECT_EQ(ggs.a, 8);
}

TEST(Expectation, HyperbolicWitness) {
    const auto cls = make_class(1, 1);
    const auto g = X + P * PolySymbol::constant(Coeff{0, 3}, Ring::Split);
    EXPECT_EQ(star(g.conj(), g, cls), X * X - P * P * Rational(9) + c(3, Ring::Split));
    const auto e = expectation(g, wigner_ground_state(1), cls);
    EXPECT_EQ(exact_real(e.lhs), -1);
    const auto avg = oracle::ground_average(oracle::star(g.conj(), g, 1, 1), 1);
    EXPECT_EQ(avg.a, -1);
    EXPECT_EQ(avg.b, 0);
    // the ground state is not idempotent here, so neither rewrite of the left side holds
    EXPECT_EQ(exact_real(e.chain_rhs), 3);
    EXPECT_EQ(exact_real(e.literal_rhs), -3);
}

TEST(Expectation, LeftSideMatchesMomentOracle) {
    Rng rng(50);
    for (int s : {-1, 1}) {
        const Ring r = star_ring(s);
        for (int i = 0; i < 40; ++i) {
            const Rational hbar = Rational(1 + i % 3) / (1 + i % 4);
            const auto g = random_poly(rng, r, 3);
            const auto e = expectation(g, wigner_ground_state(hbar), make_class(s, hbar));
            const auto want = oracle::ground_average(oracle::star(g.conj(), g, s, hbar), hbar);
            EXPECT_EQ(e.lhs.value.re, want.a);
            EXPECT_EQ(sgn(e.lhs.value.im), 0);
            EXPECT_EQ(sgn(want.b), 0);
        }
    }
}

TEST(Expectation, EllipticChainExactAndNonnegative) {
    Rng rng(51);
    const auto cls = make_class(-1, 1);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_poly(rng, Ring::Complex, 3);
        const auto e = expectation(g, wigner_ground_state(1), cls);
        EXPECT_EQ(e.lhs, e.chain_rhs) << to_string(g);
        EXPECT_GE(sgn(e.lhs.value.re), 0);
        // literal ordering equals <g g*>
        const auto alt = oracle::ground_average(oracle::star(g, g.conj(), -1, 1), 1);
        EXPECT_EQ(e.literal_rhs.value.re, alt.a);
    }
}

TEST(Expectation, ChainByQuadrature) {
    // (g * F0) evaluated pointwise from the finite star series, then integrated numerically
    struct Case {
        int s;
        long coef;
        double want;
    };
    for (const auto& cs : {Case{-1, 3, 2.0}, Case{1, 3, 3.0}}) {
        const double sgnj = cs.s;
        auto gstarf = [&](double x, double p) {
            // g = x + 3J p, F0 = exp(-(x^2+p^2))/pi (hbar = 1)
            const double f = std::exp(-(x * x + p * p)) / M_PI;
            const double fx = -2 * x * f, fp = -2 * p * f;
            // g F + (J/2)(g_x F_p - g_p F_x); g_x = 1, g_p = 3J
            const double re = x * f + 0.5 * (sgnj * cs.coef * -fx);
            const double im = cs.coef * p * f + 0.5 * fp;
            return std::pair{re, im};
        };
        const double integral = oracle::quad2([&](double x, double p) {
            const auto [re, im] = gstarf(x, p);
            return re * re - sgnj * im * im;
        });
        const auto e = expectation(X + P * PolySymbol::constant(Coeff{0, cs.coef}, star_ring(cs.s)), wigner_ground_state(1),
                                   make_class(cs.s, 1));
        EXPECT_NEAR(2 * M_PI * integral, cs.want, 1e-6);
        EXPECT_NEAR(approx(e.chain_rhs), cs.want, 1e-12);
    }
}

TEST(Negativity, HyperbolicFindsWitness) {
    NegativityOptions o;
    o.trials = 2000;
    o.seed = 0;
    o.target = -1;
    const auto cls = make_class(1, 1);
    const auto f = wigner_ground_state(1);
    const auto r = negativity_search(f, cls, o);
    ASSERT_TRUE(r.found);
    EXPECT_LE(r.witness.degree(), 1);
    EXPECT_LE(r.value.value.re, -1);
    EXPECT_EQ(expectation(r.witness, f, cls).lhs, r.value);
    const auto avg = oracle::ground_average(oracle::star(r.witness.conj(), r.witness, 1, 1), 1);
    EXPECT_EQ(avg.a, r.value.value.re);
}

TEST(Negativity, EllipticControlRun) {
    NegativityOptions o;
    o.trials = 2000;
    o.degree_bound = 3;
    const auto r = negativity_search(wigner_ground_state(1), make_class(-1, 1), o);
    EXPECT_FALSE(r.found);
    EXPECT_EQ(r.trials_run, 2000u);
    EXPECT_GE(r.min_value, 0.0);
}

TEST(Negativity, ConstantCase) {
    NegativityOptions o;
    o.trials = 10;
    auto r = negativity_search(wigner_ground_state(1), make_class(1, 1), o);
    EXPECT_EQ(r.constant_case.g, PolySymbol::unit(Ring::Split));
    EXPECT_EQ(exact_real(r.constant_case.value), -1);
    r = negativity_search(wigner_ground_state(1), make_class(-1, 1), o);
    EXPECT_EQ(exact_real(r.constant_case.value), 1);
}

TEST(Negativity, SeedDeterminism) {
    NegativityOptions o;
    o.trials = 300;
    o.seed = 77;
    o.keep_samples = true;
    const auto a = negativity_search(wigner_ground_state(1), make_class(1, 1), o);
    const auto b = negativity_search(wigner_ground_state(1), make_class(1, 1), o);
    EXPECT_EQ(a.found, b.found);
    EXPECT_EQ(a.trial, b.trial);
    EXPECT_EQ(a.witness, b.witness);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].second, b.samples[i].second);
}

TEST(PolyText, Canonical) {
    EXPECT_EQ(to_string(X * X * Rational(1, 2) - P * P), "(1/2)*x^2 - p^2");
    EXPECT_EQ(to_string(PolySymbol(Ring::Real)), "0");
}
