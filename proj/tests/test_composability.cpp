#include "hqm/composability.hpp"
#include "hqm/phasespace.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hqm;
using namespace hqm::comp;
using phase::PolySymbol;

namespace {

using CM = Matrix<GaussComplex>;
using SM = Matrix<SplitComplex>;

CM cm(std::initializer_list<GaussComplex> e) { return CM(2, std::vector<GaussComplex>(e)); }

const CompClass elliptic = make_class(-1, 1);
const CompClass hyperbolic = make_class(1, 1);
const CompClass parabolic = make_class(0, 1);

void expect_all_pass(const std::vector<PropertyReport>& rs) {
    ASSERT_EQ(rs.size(), 5u);
    for (const auto& r : rs) {
        EXPECT_TRUE(r.passed()) << r.law << ": " << (r.failures.empty() ? "" : r.failures[0].sublaw);
        EXPECT_GE(r.samples, 1u);
    }
}

// (AB - BA), written out independently of the algebra's lambdas
template <class M>
M commutator(const M& a, const M& b) {
    return a * b - b * a;
}

} // namespace

TEST(CompClassTags, NamesRoundTrip) {
    for (int s : {-1, 0, 1}) EXPECT_EQ(class_from_name(class_name(s)), s);
    EXPECT_THROW(class_from_name("lorentzian"), std::invalid_argument);
    EXPECT_THROW(make_class(2, 1), std::invalid_argument);
    EXPECT_THROW(make_class(1, 0), std::invalid_argument);
}

TEST(CompStandardRep, ClassMismatch) {
    EXPECT_THROW(standard_rep<GaussComplex>(hyperbolic, 2), ClassMismatch);
    EXPECT_THROW(standard_rep<SplitComplex>(elliptic, 2), ClassMismatch);
}

TEST(CompStandardRep, PauliCommutator) {
    const auto alg = standard_rep<GaussComplex>(elliptic, 2);
    const CM sx = cm({0, 1, 1, 0}), sz = cm({1, 0, 0, -1});
    // [sx, sz] = -2i sy = [[0, -2], [2, 0]]
    EXPECT_EQ(commutator(sx, sz), cm({0, -2, 2, 0}));
    const auto a = alpha(alg, detail::lift(sx), detail::lift(sz));
    EXPECT_EQ(a.odd, cm({0, -2, 2, 0}));
    EXPECT_TRUE(a.even.is_zero());
}

TEST(CompStandardRep, IdentityBehaviour) {
    const auto alg = standard_rep<GaussComplex>(elliptic, 2);
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        const auto b = alg.sample(rng);
        EXPECT_TRUE(alg.alpha_core(*alg.identity, b).is_zero());
        EXPECT_EQ(alg.sigma(*alg.identity, b), b);
    }
}

TEST(CompAssociator, AssociativeProductVanishes) {
    // beta is associative in the standard representation
    const auto alg = standard_rep<GaussComplex>(elliptic, 2);
    Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const auto a = alg.sample(rng), b = alg.sample(rng), c = alg.sample(rng);
        EXPECT_TRUE(detail::is_zero(associator(alg, Product::Beta, a, b, c, -1)));
    }
}

TEST(CompAssociator, JordanMatchesDirectExpansion) {
    const auto alg = standard_rep<GaussComplex>(elliptic, 2);
    const CM a = cm({0, 1, 0, 0}), b = cm({1, 0, 0, 0});
    auto jordan = [](const CM& x, const CM& y) { return (x * y + y * x) * GaussComplex(Rational(1, 2)); };
    const CM expected = jordan(jordan(a, b), b) - jordan(a, jordan(b, b));
    const auto got = associator(alg, Product::Sigma, a, b, b);
    EXPECT_EQ(got.even, expected);
    EXPECT_TRUE(got.odd.is_zero());
    EXPECT_FALSE(expected.is_zero());
}

TEST(CompAssociator, CommutatorWithIdentity) {
    const auto alg = standard_rep<GaussComplex>(elliptic, 2);
    Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        const auto a = alg.sample(rng), b = alg.sample(rng);
        EXPECT_TRUE(detail::is_zero(associator(alg, Product::Alpha, a, b, *alg.identity)));
    }
}

TEST(CompSuites, EllipticMatrices) { expect_all_pass(run_axiom_suite(standard_rep<GaussComplex>(elliptic, 2), 200, 1)); }

TEST(CompSuites, HyperbolicMatrices) {
    expect_all_pass(run_axiom_suite(standard_rep<SplitComplex>(hyperbolic, 2), 200, 2));
}

TEST(CompSuites, OtherHbarAndDimension) {
    expect_all_pass(run_axiom_suite(standard_rep<GaussComplex>(make_class(-1, Rational(1, 3)), 3), 50, 3));
    expect_all_pass(run_axiom_suite(standard_rep<SplitComplex>(make_class(1, Rational(7, 2)), 3), 50, 4));
}

TEST(CompSuites, ParabolicPolynomials) { expect_all_pass(run_axiom_suite(phase::phase_space_algebra(parabolic, 4), 200, 5)); }

TEST(CompSuites, Deterministic) {
    const auto alg = standard_rep<SplitComplex>(hyperbolic, 2);
    const auto a = run_axiom_suite(alg, 30, 9), b = run_axiom_suite(alg, 30, 9);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST(CompNegative, NonSymmetricJordanFails) {
    auto alg = standard_rep<GaussComplex>(elliptic, 2);
    alg.sigma = [](const CM& a, const CM& b) { return a * b; };
    const auto r = check_jordan(alg, 50, 6);
    EXPECT_FALSE(r.passed());
    ASSERT_FALSE(r.failures.empty());
    EXPECT_FALSE(r.failures[0].inputs.empty());
}

TEST(CompNegative, AnticommutatorAsLieFails) {
    auto alg = standard_rep<GaussComplex>(elliptic, 2);
    alg.alpha_core = [](const CM& a, const CM& b) { return a * b + b * a; };
    EXPECT_FALSE(check_lie(alg, 50, 7).passed());
}

TEST(CompNegative, LeibnizHoldsForOrdinaryProduct) {
    // the commutator is a derivation of the associative product
    auto alg = standard_rep<GaussComplex>(elliptic, 2);
    alg.sigma = [](const CM& a, const CM& b) { return a * b; };
    EXPECT_TRUE(check_leibniz(alg, 50, 8).passed());
}

TEST(CompNegative, WrongHbarBreaksComposability) {
    auto alg = standard_rep<GaussComplex>(elliptic, 2);
    alg.cls.hbar = 2;  // products still built with hbar = 1
    EXPECT_FALSE(check_comp_identity(alg, 50, 9).passed());
}

TEST(CompBeta, ReproducesMatrixProduct) {
    Rng rng(34);
    const auto e = standard_rep<GaussComplex>(elliptic, 2);
    const auto h = standard_rep<SplitComplex>(hyperbolic, 2);
    for (int i = 0; i < 20; ++i) {
        const auto a = e.sample(rng), b = e.sample(rng);
        EXPECT_EQ(beta(e, -1, a, b), a * b);
        EXPECT_EQ(beta(e, 1, a, b), b * a);
        EXPECT_EQ(beta(e, -1, *e.identity, b), b);
        const auto c = h.sample(rng), d = h.sample(rng);
        EXPECT_EQ(beta(h, 1, c, d), oracle::matmul(c, d));
        EXPECT_EQ(beta(h, 1, *h.identity, d), d);
    }
}

TEST(CompBeta, NeedsJInTheCarrier) {
    const auto alg = phase::phase_space_algebra(parabolic, 2);
    EXPECT_THROW(beta(alg, 1, PolySymbol::x(), PolySymbol::p()), UnsupportedCoefficientRing);
}

TEST(CompTensor, FixedPointAgainstLargeRep) {
    const auto base = standard_rep<GaussComplex>(elliptic, 2);
    const auto comp = tensor_compose(base, base);
    const auto big = standard_rep<GaussComplex>(elliptic, 4);
    Rng rng(35);
    for (int i = 0; i < 30; ++i) {
        const auto a = base.sample(rng), b = base.sample(rng), c = base.sample(rng), d = base.sample(rng);
        const auto x = kron(a, b), y = kron(c, d);
        // (AC (x) BD - CA (x) DB) / hbar
        EXPECT_EQ(comp.alpha_core(x, y), kron(a * c, b * d) - kron(c * a, d * b));
        EXPECT_EQ(comp.alpha_core(x, y), big.alpha_core(x, y));
        EXPECT_EQ(comp.sigma(x, y), big.sigma(x, y));
    }
    const auto cd = kron(base.sample(rng), base.sample(rng));
    EXPECT_EQ(comp.sigma(*comp.identity, cd), cd);
}

TEST(CompTensor, SuitesPass) {
    const auto e = standard_rep<GaussComplex>(elliptic, 2);
    expect_all_pass(run_axiom_suite(tensor_compose(e, e), 40, 10));
    const auto h = standard_rep<SplitComplex>(hyperbolic, 2);
    const auto hh = tensor_compose(h, h);
    EXPECT_TRUE(check_comp_identity(hh, 40, 11).passed());
    expect_all_pass(run_axiom_suite(hh, 40, 12));
}

TEST(CompTensor, MismatchRejected) {
    const auto a = standard_rep<GaussComplex>(elliptic, 2);
    const auto b = standard_rep<GaussComplex>(make_class(-1, 2), 2);
    EXPECT_THROW(tensor_compose(a, b), ClassMismatch);
}

TEST(CompClassicalLimit, SigmaAssociativeAlphaPoisson) {
    const auto alg = phase::phase_space_algebra(parabolic, 4);
    const PolySymbol x = PolySymbol::x(), p = PolySymbol::p();
    EXPECT_TRUE(detail::is_zero(associator(alg, Product::Sigma, x, p, x * p)));
    EXPECT_EQ(alg.alpha_core(x, p), PolySymbol::constant(1));
    EXPECT_EQ(alg.alpha_core(x * x, p), x * Rational(2));
    EXPECT_EQ(alg.alpha_core(x * x, p), oracle::nabla_power(x * x, p, 1));
    Rng rng(36);
    for (int i = 0; i < 50; ++i) {
        const auto a = alg.sample(rng), b = alg.sample(rng), c = alg.sample(rng);
        EXPECT_TRUE(detail::is_zero(associator(alg, Product::Sigma, a, b, c)));
        EXPECT_EQ(alg.sigma(a, b), a * b);
    }
}
