#pragma once

// Exact polynomials in (x, p) with coefficients in Q, Q[i] or Q[j].

#include "hqm/errors.hpp"
#include "hqm/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace hqm::phase {

using hqm::to_string;

enum class Ring { Real, Complex, Split };

std::string_view ring_name(Ring r);

/// Square of the imaginary unit of the ring (0 for Real, which has none).
int unit_square(Ring r);

/// The smaller ring containing both; Complex with Split throws RingMismatch.
Ring join(Ring a, Ring b);

/// re + u*im where u is i or j depending on the ring.
struct Coeff {
    Rational re;
    Rational im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    friend bool operator==(const Coeff&, const Coeff&) = default;
};

Coeff mul(Ring r, const Coeff& a, const Coeff& b);

/// Monomial x^dx p^dp
struct Mono {
    int dx = 0;
    int dp = 0;
    auto operator<=>(const Mono&) const = default;
};

class PolySymbol {
public:
    PolySymbol() = default;
    explicit PolySymbol(Ring ring) : ring_(ring) {}

    static PolySymbol constant(const Rational& c, Ring ring = Ring::Real);
    static PolySymbol constant(const Coeff& c, Ring ring);
    static PolySymbol x(Ring ring = Ring::Real);
    static PolySymbol p(Ring ring = Ring::Real);
    /// i in Complex, j in Split.
    static PolySymbol unit(Ring ring);

    Ring ring() const { return ring_; }
    const std::map<Mono, Coeff>& terms() const { return terms_; }

    /// Adds c * x^dx p^dp; drops zero coefficients.
    void add_term(Mono m, const Coeff& c);
    Coeff coeff(Mono m) const;

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_real() const;

    /// Same polynomial viewed in a larger ring.
    PolySymbol promoted(Ring target) const;

    PolySymbol conj() const;
    PolySymbol dx() const;
    PolySymbol dp() const;

    /// Multiplies every coefficient by the ring's unit.
    PolySymbol times_unit() const;

    PolySymbol& operator+=(const PolySymbol& o);
    PolySymbol& operator-=(const PolySymbol& o);
    PolySymbol& operator*=(const Rational& s);

    friend PolySymbol operator+(PolySymbol a, const PolySymbol& b) { return a += b; }
    friend PolySymbol operator-(PolySymbol a, const PolySymbol& b) { return a -= b; }
    friend PolySymbol operator-(PolySymbol a) { return a *= Rational(-1); }
    friend PolySymbol operator*(PolySymbol a, const Rational& s) { return a *= s; }
    friend PolySymbol operator*(const Rational& s, PolySymbol a) { return a *= s; }
    friend PolySymbol operator*(const PolySymbol& a, const PolySymbol& b);
    PolySymbol operator*(const Coeff& c) const;

    /// Equal as polynomials; the ring tag is ignored when both are real.
    friend bool operator==(const PolySymbol& a, const PolySymbol& b);

private:
    Ring ring_ = Ring::Real;
    std::map<Mono, Coeff> terms_;
};

/// Canonical text, highest total degree first: `x*p + (1/2)j`.
std::string to_string(const PolySymbol& s);

/// Uniformly random polynomial of total degree <= max_degree with small
/// rational coefficients; complex parts are drawn only for non-real rings.
PolySymbol random_poly(Rng& rng, Ring ring, int max_degree, int max_num = 8, int max_den = 8);

} // namespace hqm::phase
