#pragma once

// Two-product (alpha, sigma) algebras and their axiom checkers.
//
// J is carried symbolically: every intermediate value is a pair
// (even, odd) standing for even + J*odd, with J*J reduced to the class
// constant J^2 in {-1, 0, +1}. A product alpha may itself carry one power of
// J (alpha = J * alpha_core, as in the matrix commutator realization) or
// none (phase-space realizations). Identities are then checked exactly on
// both components, which works uniformly for all three classes including the
// nilpotent J^2 = 0 case where no numeric J exists.

#include "hqm/errors.hpp"
#include "hqm/matrix.hpp"
#include "hqm/parallel.hpp"
#include "hqm/rational.hpp"
#include "hqm/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hqm::comp {

/// Composability class: J^2 and Planck's constant.
struct CompClass {
    int j_squared = -1;
    Rational hbar = 1;
};

/// Validates j_squared in {-1, 0, +1} and hbar > 0.
CompClass make_class(int j_squared, const Rational& hbar);

/// "elliptic", "parabolic" or "hyperbolic".
std::string_view class_name(int j_squared);
/// Inverse of class_name; throws std::invalid_argument.
int class_from_name(std::string_view name);

/// even + J * odd
template <class E>
struct JGraded {
    E even;
    E odd;
};

template <class E>
struct TwoProductAlgebra {
    std::string name;
    CompClass cls;
    int alpha_j_power = 0;  // alpha = J^alpha_j_power * alpha_core
    std::function<E(const E&, const E&)> alpha_core;
    std::function<E(const E&, const E&)> sigma;
    std::function<E(Rng&)> sample;
    std::function<E(const E&)> times_j;  // numeric J inside the carrier; empty if the scalars lack J
    std::optional<E> identity;
};

enum class Product { Alpha, Sigma, Beta };

namespace detail {

template <class E>
E zero_like(const E& e) {
    return e * Rational(0);
}

template <class E>
JGraded<E> lift(const E& e) {
    return {e, zero_like(e)};
}

template <class E>
JGraded<E> add(const JGraded<E>& a, const JGraded<E>& b) {
    return {a.even + b.even, a.odd + b.odd};
}

template <class E>
JGraded<E> sub(const JGraded<E>& a, const JGraded<E>& b) {
    return {a.even - b.even, a.odd - b.odd};
}

template <class E>
JGraded<E> scale(const JGraded<E>& a, const Rational& s) {
    return {a.even * s, a.odd * s};
}

template <class E>
JGraded<E> times_j(const JGraded<E>& a, int j_squared) {
    return {a.odd * Rational(j_squared), a.even};
}

template <class E>
bool is_zero(const JGraded<E>& a) {
    return a.even.is_zero() && a.odd.is_zero();
}

/// R[J]-bilinear extension of a carrier product.
template <class E, class F>
JGraded<E> extend(const F& f, const JGraded<E>& x, const JGraded<E>& y, int j_squared) {
    const bool xo = !x.odd.is_zero();
    const bool yo = !y.odd.is_zero();
    E even = f(x.even, y.even);
    E odd = zero_like(even);
    if (xo && yo && j_squared != 0) even += f(x.odd, y.odd) * Rational(j_squared);
    if (yo) odd += f(x.even, y.odd);
    if (xo) odd += f(x.odd, y.even);
    return {std::move(even), std::move(odd)};
}

} // namespace detail

template <class E>
JGraded<E> alpha(const TwoProductAlgebra<E>& alg, const JGraded<E>& x, const JGraded<E>& y) {
    auto r = detail::extend(alg.alpha_core, x, y, alg.cls.j_squared);
    for (int k = 0; k < alg.alpha_j_power; ++k) r = detail::times_j(r, alg.cls.j_squared);
    return r;
}

template <class E>
JGraded<E> sigma(const TwoProductAlgebra<E>& alg, const JGraded<E>& x, const JGraded<E>& y) {
    return detail::extend(alg.sigma, x, y, alg.cls.j_squared);
}

/// sigma + sign * (J hbar / 2) * alpha, kept symbolic in J.
template <class E>
JGraded<E> beta_graded(const TwoProductAlgebra<E>& alg, int sign, const JGraded<E>& x, const JGraded<E>& y) {
    auto a = detail::times_j(alpha(alg, x, y), alg.cls.j_squared);
    return detail::add(sigma(alg, x, y), detail::scale(a, Rational(sign * alg.cls.hbar / 2)));
}

template <class E>
JGraded<E> apply(const TwoProductAlgebra<E>& alg, Product p, const JGraded<E>& x, const JGraded<E>& y, int sign = 1) {
    switch (p) {
    case Product::Alpha: return alpha(alg, x, y);
    case Product::Sigma: return sigma(alg, x, y);
    case Product::Beta: return beta_graded(alg, sign, x, y);
    }
    throw Error("unknown product");
}

/// [a, b, c]_p = (a p b) p c - a p (b p c)
template <class E>
JGraded<E> associator(const TwoProductAlgebra<E>& alg, Product p, const E& a, const E& b, const E& c, int sign = 1) {
    const auto A = detail::lift(a), B = detail::lift(b), C = detail::lift(c);
    return detail::sub(apply(alg, p, apply(alg, p, A, B, sign), C, sign), apply(alg, p, A, apply(alg, p, B, C, sign), sign));
}

/// beta evaluated inside the carrier, with J replaced by its numeric value.
template <class E>
E beta(const TwoProductAlgebra<E>& alg, int sign, const E& a, const E& b) {
    if (!alg.times_j)
        throw UnsupportedCoefficientRing("carrier of '" + alg.name + "' has no scalar realizing J");
    auto g = beta_graded(alg, sign, detail::lift(a), detail::lift(b));
    return g.even + alg.times_j(g.odd);
}

template <class E>
std::string show(const JGraded<E>& g) {
    using hqm::to_string;
    if (g.odd.is_zero()) return to_string(g.even);
    return to_string(g.even) + " + J*(" + to_string(g.odd) + ")";
}

namespace detail {

/// Runs `body(a, b, c, failures)` on `samples` independent random triples.
template <class E, class Body>
PropertyReport sweep(const TwoProductAlgebra<E>& alg, std::string law, std::size_t samples, std::uint64_t seed,
                     Body body) {
    auto per_sample = parallel_map<std::vector<Failure>>(samples, [&](std::size_t i) {
        Rng rng = sample_rng(seed, i);
        E a = alg.sample(rng);
        E b = alg.sample(rng);
        E c = alg.sample(rng);
        std::vector<Failure> out;
        body(a, b, c, out);
        return out;
    });
    PropertyReport r;
    r.law = std::move(law);
    r.samples = samples;
    for (auto& fs : per_sample)
        for (auto& f : fs) r.add_failure(std::move(f));
    r.notes.push_back("algebra: " + alg.name);
    return r;
}

template <class E>
void expect_zero(std::vector<Failure>& out, std::string sublaw, const JGraded<E>& lhs, const JGraded<E>& rhs,
                 std::vector<std::string> inputs) {
    if (is_zero(sub(lhs, rhs))) return;
    out.push_back({std::move(sublaw), std::move(inputs), show(lhs), show(rhs)});
}

template <class E>
std::vector<std::string> names(const E& a, const E& b, const E& c) {
    using hqm::to_string;
    return {to_string(a), to_string(b), to_string(c)};
}

} // namespace detail

/// sigma symmetric and power associative: A o (B o A^2) = (A o B) o A^2.
template <class E>
PropertyReport check_jordan(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return detail::sweep(alg, "jordan", samples, seed, [&](const E& a, const E& b, const E& c, auto& out) {
        const auto A = detail::lift(a), B = detail::lift(b);
        detail::expect_zero(out, "symmetric", sigma(alg, A, B), sigma(alg, B, A), detail::names(a, b, c));
        const auto A2 = sigma(alg, A, A);
        detail::expect_zero(out, "power_associative", sigma(alg, A, sigma(alg, B, A2)), sigma(alg, sigma(alg, A, B), A2),
                            detail::names(a, b, c));
    });
}

/// alpha skew-symmetric and Jacobi.
template <class E>
PropertyReport check_lie(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return detail::sweep(alg, "lie", samples, seed, [&](const E& a, const E& b, const E& c, auto& out) {
        const auto A = detail::lift(a), B = detail::lift(b), C = detail::lift(c);
        const auto ab = alpha(alg, A, B);
        const auto ba = alpha(alg, B, A);
        detail::expect_zero(out, "skew", ab, detail::scale(ba, Rational(-1)), detail::names(a, b, c));
        auto jac = detail::add(alpha(alg, A, alpha(alg, B, C)), alpha(alg, C, ab));
        jac = detail::add(jac, alpha(alg, B, alpha(alg, C, A)));
        detail::expect_zero(out, "jacobi", jac, detail::scale(jac, Rational(0)), detail::names(a, b, c));
    });
}

/// alpha is a derivation of sigma and of itself.
template <class E>
PropertyReport check_leibniz(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return detail::sweep(alg, "leibniz", samples, seed, [&](const E& a, const E& b, const E& c, auto& out) {
        const auto A = detail::lift(a), B = detail::lift(b), C = detail::lift(c);
        const auto ab = alpha(alg, A, B);
        const auto ac = alpha(alg, A, C);
        detail::expect_zero(out, "alpha_over_sigma", alpha(alg, A, sigma(alg, B, C)),
                            detail::add(sigma(alg, ab, C), sigma(alg, B, ac)), detail::names(a, b, c));
        detail::expect_zero(out, "alpha_over_alpha", alpha(alg, A, alpha(alg, B, C)),
                            detail::add(alpha(alg, ab, C), alpha(alg, B, ac)), detail::names(a, b, c));
    });
}

/// [A,B,C]_sigma + (hbar^2/4) [A,B,C]_{J alpha} = 0
template <class E>
JGraded<E> comp_identity_residual(const TwoProductAlgebra<E>& alg, const E& a, const E& b, const E& c) {
    const auto A = detail::lift(a), B = detail::lift(b), C = detail::lift(c);
    const int s = alg.cls.j_squared;
    auto ja = [&](const JGraded<E>& x, const JGraded<E>& y) { return detail::times_j(alpha(alg, x, y), s); };
    const auto assoc_ja = detail::sub(ja(ja(A, B), C), ja(A, ja(B, C)));
    const auto assoc_s = associator(alg, Product::Sigma, a, b, c);
    return detail::add(assoc_s, detail::scale(assoc_ja, Rational(alg.cls.hbar * alg.cls.hbar / 4)));
}

template <class E>
PropertyReport check_comp_identity(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return detail::sweep(alg, "composability_associator", samples, seed,
                         [&](const E& a, const E& b, const E& c, auto& out) {
                             const auto r = comp_identity_residual(alg, a, b, c);
                             detail::expect_zero(out, "sigma + hbar^2/4 J alpha", r, detail::scale(r, Rational(0)),
                                                 detail::names(a, b, c));
                         });
}

/// Associativity of beta = sigma +/- (J hbar/2) alpha, both signs.
template <class E>
PropertyReport check_beta_associative(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return detail::sweep(alg, "beta_associative", samples, seed, [&](const E& a, const E& b, const E& c, auto& out) {
        for (int sign : {1, -1}) {
            const auto r = associator(alg, Product::Beta, a, b, c, sign);
            detail::expect_zero(out, sign > 0 ? "beta_plus" : "beta_minus", r, detail::scale(r, Rational(0)),
                                detail::names(a, b, c));
        }
    });
}

/// The five checks in a fixed order: jordan, lie, leibniz, composability, beta.
template <class E>
std::vector<PropertyReport> run_axiom_suite(const TwoProductAlgebra<E>& alg, std::size_t samples, std::uint64_t seed) {
    return {check_jordan(alg, samples, seed), check_lie(alg, samples, seed), check_leibniz(alg, samples, seed),
            check_comp_identity(alg, samples, seed), check_beta_associative(alg, samples, seed)};
}

// ---------------------------------------------------------------------------
// Matrix realizations

/// Random Hermitian n x n matrix (A* = A) with small rational entries.
template <class S>
Matrix<S> random_hermitian(Rng& rng, std::size_t n) {
    Matrix<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = S(random_rational(rng));
        for (std::size_t j = i + 1; j < n; ++j) {
            S s(random_rational(rng), random_rational(rng));
            m(j, i) = s.conj();
            m(i, j) = std::move(s);
        }
    }
    return m;
}

/// alpha = (J/hbar)(AB - BA), sigma = (AB + BA)/2 on n x n matrices over the
/// Gaussian rationals (J^2 = -1) or the split-complex numbers (J^2 = +1).
template <class S>
TwoProductAlgebra<Matrix<S>> standard_rep(const CompClass& cls, std::size_t n) {
    if (cls.j_squared != S::unit_square)
        throw ClassMismatch("standard representation over this scalar ring needs J^2 = " +
                            std::to_string(S::unit_square));
    using M = Matrix<S>;
    TwoProductAlgebra<M> alg;
    alg.name = "standard_rep(" + std::string(class_name(cls.j_squared)) + ", n=" + std::to_string(n) + ")";
    alg.cls = cls;
    alg.alpha_j_power = 1;
    const S inv_hbar(Rational(1 / cls.hbar));
    alg.alpha_core = [inv_hbar](const M& a, const M& b) { return (a * b - b * a) * inv_hbar; };
    alg.sigma = [](const M& a, const M& b) { return (a * b + b * a) * S(Rational(1, 2)); };
    alg.sample = [n](Rng& rng) { return random_hermitian<S>(rng, n); };
    alg.times_j = [](const M& a) { return a * S::unit(); };
    alg.identity = M::identity(n);
    return alg;
}

/// Composite-system algebra on the tensor-product carrier:
///     alpha_12 = alpha_1 sigma_2 + sigma_1 alpha_2
///     sigma_12 = sigma_1 sigma_2 + (J^2 hbar^2 / 4) alpha_1 alpha_2
/// on pure tensors, extended bilinearly through the block decomposition
/// M = sum_ab E_ab (x) M_ab. Throws ClassMismatch for unlike classes.
template <class S>
TwoProductAlgebra<Matrix<S>> tensor_compose(const TwoProductAlgebra<Matrix<S>>& a1,
                                            const TwoProductAlgebra<Matrix<S>>& a2) {
    if (a1.cls.j_squared != a2.cls.j_squared || a1.cls.hbar != a2.cls.hbar || a1.alpha_j_power != a2.alpha_j_power)
        throw ClassMismatch("tensor composition requires algebras of the same class");
    if (!a1.identity || !a2.identity) throw Error("tensor composition needs matrix algebras with an identity");
    using M = Matrix<S>;
    const std::size_t n1 = a1.identity->dim();
    const std::size_t n2 = a2.identity->dim();
    const int s = a1.cls.j_squared;
    // d * J^(2p): alpha_1 alpha_2 carries J^(2p) from the two alpha factors
    Rational d = Rational(s) * a1.cls.hbar * a1.cls.hbar / 4;
    if (a1.alpha_j_power == 1) d *= s;

    // first-factor products on matrix units, indexed by (a*n1 + b, c*n1 + d)
    struct UnitProducts {
        std::optional<M> sigma, alpha;
    };
    std::vector<UnitProducts> table(n1 * n1 * n1 * n1);
    auto unit = [n1](std::size_t k) {
        M e(n1);
        e(k / n1, k % n1) = S(1);
        return e;
    };
    for (std::size_t k = 0; k < n1 * n1; ++k)
        for (std::size_t l = 0; l < n1 * n1; ++l) {
            auto& t = table[k * n1 * n1 + l];
            M sg = a1.sigma(unit(k), unit(l)), al = a1.alpha_core(unit(k), unit(l));
            if (!sg.is_zero()) t.sigma = std::move(sg);
            if (!al.is_zero()) t.alpha = std::move(al);
        }

    auto blocks = [n1, n2](const M& m) {
        std::vector<std::pair<std::size_t, M>> out;  // (unit index a*n1 + b, M_ab)
        for (std::size_t a = 0; a < n1; ++a)
            for (std::size_t b = 0; b < n1; ++b) {
                M blk(n2);
                bool nz = false;
                for (std::size_t r = 0; r < n2; ++r)
                    for (std::size_t c = 0; c < n2; ++c) {
                        blk(r, c) = m(a * n2 + r, b * n2 + c);
                        nz = nz || !(blk(r, c) == S(0));
                    }
                if (nz) out.emplace_back(a * n1 + b, std::move(blk));
            }
        return out;
    };
    const std::size_t units = n1 * n1;

    TwoProductAlgebra<M> alg;
    alg.name = "(" + a1.name + ") (x) (" + a2.name + ")";
    alg.cls = a1.cls;
    alg.alpha_j_power = a1.alpha_j_power;
    alg.alpha_core = [=](const M& x, const M& y) {
        M out(n1 * n2);
        const auto yb = blocks(y);
        for (const auto& [e, xe] : blocks(x))
            for (const auto& [f, yf] : yb) {
                const auto& t = table[e * units + f];
                if (t.alpha) out += kron(*t.alpha, a2.sigma(xe, yf));
                if (t.sigma) out += kron(*t.sigma, a2.alpha_core(xe, yf));
            }
        return out;
    };
    alg.sigma = [=](const M& x, const M& y) {
        M out(n1 * n2);
        const auto yb = blocks(y);
        for (const auto& [e, xe] : blocks(x))
            for (const auto& [f, yf] : yb) {
                const auto& t = table[e * units + f];
                if (t.sigma) out += kron(*t.sigma, a2.sigma(xe, yf));
                if (sgn(d) != 0 && t.alpha) out += kron(*t.alpha, a2.alpha_core(xe, yf)) * S(d);
            }
        return out;
    };
    alg.sample = [=](Rng& rng) {
        M x = a1.sample(rng);
        M y = a2.sample(rng);
        M u = a1.sample(rng);
        M v = a2.sample(rng);
        return kron(x, y) + kron(u, v);
    };
    alg.times_j = a1.times_j;
    alg.identity = kron(*a1.identity, *a2.identity);
    return alg;
}

} // namespace hqm::comp
