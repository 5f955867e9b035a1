#pragma once

// Exact univariate polynomials over Q, just enough for characteristic
// polynomials and Sturm-sequence real-root isolation.

#include "hqm/matrix.hpp"

#include <optional>
#include <vector>

namespace hqm {

/// coeffs[k] multiplies t^k; no trailing zeros (the zero polynomial is empty).
struct UPoly {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Rational operator()(const Rational& t) const;
    void trim();
};

UPoly derivative(const UPoly& p);
/// Remainder of p / q (q nonzero).
UPoly remainder(const UPoly& p, const UPoly& q);
UPoly quotient(const UPoly& p, const UPoly& q);
UPoly gcd(UPoly a, UPoly b);

/// det(t I - A), monic, via Faddeev-LeVerrier.
UPoly characteristic_polynomial(const RMatrix& a);

/// A real root bracketed in [lo, hi]; `exact` is set when a rational root was
/// located exactly.
struct RealRoot {
    Rational lo;
    Rational hi;
    std::optional<Rational> exact;

    double approx() const;
};

/// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly& p);

/// Isolates every distinct real root to a bracket narrower than 2^-precision_bits.
std::vector<RealRoot> real_roots(const UPoly& p, int precision_bits = 80);

} // namespace hqm
