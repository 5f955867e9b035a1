#pragma once

// Split-complex numbers x + j y with j^2 = +1: seminorm, cones, polar form.

#include "hqm/hypercomplex.hpp"

#include <string_view>
#include <utility>

namespace hqm::splitc {

using hqm::SplitComplex;

/// Partition of the plane by the null cone |x| = |y|.
enum class Cone { RightTimelike, UpSpacelike, LeftTimelike, DownSpacelike, Null };

std::string_view cone_name(Cone c);

struct PolarForm {
    int sign = 1;     // +1 for the right/up branches, -1 for left/down
    double rho = 0;   // modulus, > 0
    double theta = 0; // hyperbolic phase
    Cone branch = Cone::RightTimelike;
};

/// Lightcone (idempotent) coordinates u = x + y, v = x - y.
struct Lightcone {
    Rational u;
    Rational v;
};

inline SplitComplex mul(const SplitComplex& a, const SplitComplex& b) { return a * b; }

/// sign(z*z) * sqrt(|z*z|); exactly zero on the null cone.
double seminorm(const SplitComplex& z);

Cone cone_of(const SplitComplex& z);

/// Throws NullConeError when |x| = |y|.
PolarForm polar_decompose(const SplitComplex& z);

/// Inverse of polar_decompose, in floating point: (re, im).
std::pair<double, double> reconstruct(const PolarForm& p);

/// z* / (z* z); throws ZeroDivisorError on the null cone.
SplitComplex inverse(const SplitComplex& z);

Lightcone lightcone(const SplitComplex& z);
SplitComplex from_lightcone(const Rational& u, const Rational& v);

/// True when z and w lie in the same open (convex) cone, so the segment
/// between them never meets the null cone.
bool same_cone(const SplitComplex& z, const SplitComplex& w);

/// |‖z+w‖| >= |‖z‖| + |‖w‖|, decided exactly on the squared magnitudes.
bool reversed_triangle_exact(const SplitComplex& z, const SplitComplex& w);

/// sqrt(a) >= sqrt(b) + sqrt(c) for nonnegative rationals, decided exactly.
bool sqrt_sum_le(const Rational& b, const Rational& c, const Rational& a);

SplitComplex random_split(Rng& rng, int max_num = 8, int max_den = 8);

} // namespace hqm::splitc
