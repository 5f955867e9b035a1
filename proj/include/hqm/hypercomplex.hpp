#pragma once

#include "hqm/rational.hpp"

#include <string>

namespace hqm {

/// Exact two-component number x + u*y over the rationals, where the unit u
/// squares to `UnitSquare`: -1 gives the Gaussian rationals, +1 the
/// split-complex (hyperbolic) numbers.
template <int UnitSquare>
struct Hypercomplex {
    static_assert(UnitSquare == -1 || UnitSquare == 1);
    static constexpr int unit_square = UnitSquare;

    Rational re;
    Rational im;

    Hypercomplex() = default;
    Hypercomplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    Hypercomplex(int r) : re(r), im(0) {}

    static Hypercomplex unit() { return {0, 1}; }

    Hypercomplex conj() const { return {re, -im}; }

    /// z* z = x^2 - u^2 y^2; always real.
    Rational norm2() const { return re * re - UnitSquare * im * im; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    Hypercomplex& operator+=(const Hypercomplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Hypercomplex& operator-=(const Hypercomplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Hypercomplex& operator*=(const Hypercomplex& o) {
        Rational r = re * o.re + UnitSquare * im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Hypercomplex& operator*=(const Rational& s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend Hypercomplex operator+(Hypercomplex a, const Hypercomplex& b) { return a += b; }
    friend Hypercomplex operator-(Hypercomplex a, const Hypercomplex& b) { return a -= b; }
    friend Hypercomplex operator*(Hypercomplex a, const Hypercomplex& b) { return a *= b; }
    friend Hypercomplex operator*(Hypercomplex a, const Rational& s) { return a *= s; }
    friend Hypercomplex operator*(const Rational& s, Hypercomplex a) { return a *= s; }
    friend Hypercomplex operator-(const Hypercomplex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Hypercomplex& a, const Hypercomplex& b) { return a.re == b.re && a.im == b.im; }
};

using SplitComplex = Hypercomplex<1>;
using GaussComplex = Hypercomplex<-1>;

template <int S>
Hypercomplex<S> conj(const Hypercomplex<S>& z) {
    return z.conj();
}

/// Canonical text form `a+bj` (or `a+bi`); each component as `n` or `n/d`.
template <int S>
std::string to_string(const Hypercomplex<S>& z) {
    const char unit = S == 1 ? 'j' : 'i';
    std::string out = to_string(z.re);
    if (sgn(z.im) >= 0) out += '+';
    out += to_string(z.im);
    out += unit;
    return out;
}

} // namespace hqm
