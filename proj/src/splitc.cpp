#include "hqm/splitc.hpp"

#include "hqm/errors.hpp"

#include <cmath>

namespace hqm::splitc {

std::string_view cone_name(Cone c) {
    switch (c) {
    case Cone::RightTimelike: return "RightTimelike";
    case Cone::UpSpacelike: return "UpSpacelike";
    case Cone::LeftTimelike: return "LeftTimelike";
    case Cone::DownSpacelike: return "DownSpacelike";
    case Cone::Null: return "Null";
    }
    return "?";
}

double seminorm(const SplitComplex& z) {
    const Rational q = z.norm2();
    const int s = sgn(q);
    if (s == 0) return 0.0;
    return s * std::sqrt(std::fabs(q.get_d()));
}

Cone cone_of(const SplitComplex& z) {
    const Rational ax = abs_value(z.re);
    const Rational ay = abs_value(z.im);
    if (ax == ay) return Cone::Null;
    if (ax > ay) return sgn(z.re) > 0 ? Cone::RightTimelike : Cone::LeftTimelike;
    return sgn(z.im) > 0 ? Cone::UpSpacelike : Cone::DownSpacelike;
}

PolarForm polar_decompose(const SplitComplex& z) {
    const Cone c = cone_of(z);
    if (c == Cone::Null) throw NullConeError("no polar form on the null cone: " + to_string(z));

    PolarForm p;
    p.branch = c;
    p.rho = std::sqrt(std::fabs(z.norm2().get_d()));
    // tanh(theta) is the ratio of the smaller to the larger component, with the
    // overall sign absorbed into p.sign.
    switch (c) {
    case Cone::RightTimelike:
        p.sign = 1;
        p.theta = std::atanh(Rational(z.im / z.re).get_d());
        break;
    case Cone::LeftTimelike:
        p.sign = -1;
        p.theta = std::atanh(Rational(z.im / z.re).get_d());
        break;
    case Cone::UpSpacelike:
        p.sign = 1;
        p.theta = std::atanh(Rational(z.re / z.im).get_d());
        break;
    case Cone::DownSpacelike:
        p.sign = -1;
        p.theta = std::atanh(Rational(z.re / z.im).get_d());
        break;
    case Cone::Null: break;
    }
    return p;
}

std::pair<double, double> reconstruct(const PolarForm& p) {
    const double ch = p.sign * p.rho * std::cosh(p.theta);
    const double sh = p.sign * p.rho * std::sinh(p.theta);
    switch (p.branch) {
    case Cone::RightTimelike:
    case Cone::LeftTimelike: return {ch, sh};
    case Cone::UpSpacelike:
    case Cone::DownSpacelike: return {sh, ch};
    case Cone::Null: break;
    }
    throw NullConeError("polar form with a null branch");
}

SplitComplex inverse(const SplitComplex& z) {
    const Rational q = z.norm2();
    if (sgn(q) == 0) throw ZeroDivisorError("zero divisor has no inverse: " + to_string(z));
    SplitComplex w = z.conj();
    w *= Rational(1 / q);
    return w;
}

Lightcone lightcone(const SplitComplex& z) { return {z.re + z.im, z.re - z.im}; }

SplitComplex from_lightcone(const Rational& u, const Rational& v) {
    return {Rational((u + v) / 2), Rational((u - v) / 2)};
}

bool same_cone(const SplitComplex& z, const SplitComplex& w) {
    const Cone c = cone_of(z);
    return c != Cone::Null && c == cone_of(w);
}

bool sqrt_sum_le(const Rational& b, const Rational& c, const Rational& a) {
    // sqrt(a) >= sqrt(b) + sqrt(c)  <=>  a - b - c >= 0 and (a - b - c)^2 >= 4bc
    const Rational d = a - b - c;
    if (sgn(d) < 0) return false;
    return d * d >= 4 * b * c;
}

bool reversed_triangle_exact(const SplitComplex& z, const SplitComplex& w) {
    return sqrt_sum_le(abs_value(z.norm2()), abs_value(w.norm2()), abs_value((z + w).norm2()));
}

SplitComplex random_split(Rng& rng, int max_num, int max_den) {
    Rational re = random_rational(rng, max_num, max_den);
    Rational im = random_rational(rng, max_num, max_den);
    return {std::move(re), std::move(im)};
}

} // namespace hqm::splitc
