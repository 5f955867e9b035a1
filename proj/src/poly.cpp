#include "hqm/poly.hpp"

#include <algorithm>
#include <vector>

namespace hqm::phase {

std::string_view ring_name(Ring r) {
    switch (r) {
    case Ring::Real: return "real";
    case Ring::Complex: return "complex";
    case Ring::Split: return "split";
    }
    return "?";
}

int unit_square(Ring r) {
    switch (r) {
    case Ring::Real: return 0;
    case Ring::Complex: return -1;
    case Ring::Split: return 1;
    }
    return 0;
}

Ring join(Ring a, Ring b) {
    if (a == b || b == Ring::Real) return a;
    if (a == Ring::Real) return b;
    throw RingMismatch("cannot combine complex (i) and split-complex (j) coefficients");
}

Coeff mul(Ring r, const Coeff& a, const Coeff& b) {
    const int s = unit_square(r);
    Coeff c;
    c.re = a.re * b.re;
    if (s != 0) c.re += s * a.im * b.im;
    c.im = a.re * b.im + a.im * b.re;
    return c;
}

PolySymbol PolySymbol::constant(const Rational& c, Ring ring) { return constant(Coeff{c, 0}, ring); }

PolySymbol PolySymbol::constant(const Coeff& c, Ring ring) {
    if (ring == Ring::Real && sgn(c.im) != 0) throw RingMismatch("imaginary coefficient in a real polynomial");
    PolySymbol s(ring);
    s.add_term({0, 0}, c);
    return s;
}

PolySymbol PolySymbol::x(Ring ring) {
    PolySymbol s(ring);
    s.add_term({1, 0}, {1, 0});
    return s;
}

PolySymbol PolySymbol::p(Ring ring) {
    PolySymbol s(ring);
    s.add_term({0, 1}, {1, 0});
    return s;
}

PolySymbol PolySymbol::unit(Ring ring) {
    if (ring == Ring::Real) throw UnsupportedCoefficientRing("the real ring has no imaginary unit");
    return constant(Coeff{0, 1}, ring);
}

void PolySymbol::add_term(Mono m, const Coeff& c) {
    if (c.is_zero()) return;
    if (ring_ == Ring::Real && sgn(c.im) != 0) throw RingMismatch("imaginary coefficient in a real polynomial");
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second.re += c.re;
    it->second.im += c.im;
    if (it->second.is_zero()) terms_.erase(it);
}

Coeff PolySymbol::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{0, 0} : it->second;
}

int PolySymbol::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx + m.dp);
    return d;
}

bool PolySymbol::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second.im) == 0; });
}

PolySymbol PolySymbol::promoted(Ring target) const {
    PolySymbol s = *this;
    s.ring_ = join(target, ring_);
    return s;
}

PolySymbol PolySymbol::conj() const {
    PolySymbol s = *this;
    for (auto& [m, c] : s.terms_) c.im = -c.im;
    return s;
}

PolySymbol PolySymbol::dx() const {
    PolySymbol s(ring_);
    for (const auto& [m, c] : terms_)
        if (m.dx > 0) s.terms_.emplace(Mono{m.dx - 1, m.dp}, Coeff{c.re * m.dx, c.im * m.dx});
    return s;
}

PolySymbol PolySymbol::dp() const {
    PolySymbol s(ring_);
    for (const auto& [m, c] : terms_)
        if (m.dp > 0) s.terms_.emplace(Mono{m.dx, m.dp - 1}, Coeff{c.re * m.dp, c.im * m.dp});
    return s;
}

PolySymbol PolySymbol::times_unit() const {
    if (ring_ == Ring::Real) throw UnsupportedCoefficientRing("the real ring has no imaginary unit");
    return *this * Coeff{0, 1};
}

PolySymbol& PolySymbol::operator+=(const PolySymbol& o) {
    ring_ = join(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolySymbol& PolySymbol::operator-=(const PolySymbol& o) {
    ring_ = join(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff{-c.re, -c.im});
    return *this;
}

PolySymbol& PolySymbol::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c.re *= s;
        c.im *= s;
    }
    return *this;
}

PolySymbol operator*(const PolySymbol& a, const PolySymbol& b) {
    PolySymbol out(join(a.ring_, b.ring_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term({ma.dx + mb.dx, ma.dp + mb.dp}, mul(out.ring_, ca, cb));
    return out;
}

PolySymbol PolySymbol::operator*(const Coeff& c) const {
    PolySymbol out(ring_);
    for (const auto& [m, t] : terms_) out.add_term(m, mul(ring_, t, c));
    return out;
}

bool operator==(const PolySymbol& a, const PolySymbol& b) {
    if (a.terms_ != b.terms_) return false;
    return a.ring_ == b.ring_ || a.is_real();
}

namespace {

std::string magnitude(const Rational& q) {
    const Rational a = abs_value(q);
    if (a.get_den() == 1) return hqm::to_string(a);
    return "(" + hqm::to_string(a) + ")";
}

std::string monomial(const Mono& m) {
    std::string out;
    auto factor = [&](char v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += v;
        if (e > 1) out += '^' + std::to_string(e);
    };
    factor('x', m.dx);
    factor('p', m.dp);
    return out;
}

} // namespace

std::string to_string(const PolySymbol& s) {
    if (s.is_zero()) return "0";
    const char unit = s.ring() == Ring::Split ? 'j' : 'i';
    std::vector<std::pair<Mono, Coeff>> terms(s.terms().begin(), s.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = a.first.dx + a.first.dp, db = b.first.dx + b.first.dp;
        if (da != db) return da > db;
        return a.first.dx > b.first.dx;
    });

    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const std::string mono = monomial(m);
        bool negative = false;
        std::string coef;
        if (sgn(c.im) == 0) {
            negative = sgn(c.re) < 0;
            if (abs_value(c.re) != 1 || mono.empty()) coef = magnitude(c.re);
        } else if (sgn(c.re) == 0) {
            negative = sgn(c.im) < 0;
            coef = abs_value(c.im) == 1 ? std::string(1, unit) : magnitude(c.im) + unit;
        } else {
            coef = "(" + hqm::to_string(c.re) + (sgn(c.im) > 0 ? "+" : "-");
            if (abs_value(c.im) != 1) coef += magnitude(c.im);
            coef += unit;
            coef += ")";
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        out += coef;
        if (!coef.empty() && !mono.empty()) out += '*';
        out += mono;
    }
    return out;
}

PolySymbol random_poly(Rng& rng, Ring ring, int max_degree, int max_num, int max_den) {
    PolySymbol s(ring);
    for (int d = 0; d <= max_degree; ++d)
        for (int dx = d; dx >= 0; --dx) {
            Coeff c{random_rational(rng, max_num, max_den), 0};
            if (ring != Ring::Real) c.im = random_rational(rng, max_num, max_den);
            s.add_term({dx, d - dx}, c);
        }
    return s;
}

} // namespace hqm::phase
