#pragma once

// Phase-space symbol calculus for one degree of freedom.
//
// The bidifferential operator
//     nabla(f, g) = f_x g_p - f_p g_x
// and its powers generate every product here. With s = J^2,
//     sigma_s = sum_m s^m (hbar/2)^(2m) / (2m)!   nabla^(2m)
//     alpha_s = (2/hbar) sum_m s^m (hbar/2)^(2m+1) / (2m+1)! nabla^(2m+1)
// which gives cos/sin (Moyal, s = -1), cosh/sinh (s = +1) and
// multiplication/Poisson bracket (s = 0). The star product is
//     f * g = sum_k (J hbar / 2)^k / k! nabla^k(f, g).
// All series terminate because at least one factor is a polynomial.

#include "hqm/composability.hpp"
#include "hqm/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hqm::phase {

/// value * pi^pi_power with value in the given ring.
struct PiScalar {
    Ring ring = Ring::Real;
    Coeff value;
    int pi_power = 0;

    double real_approx() const;
    /// Sign of the real part (pi > 0 so the power does not matter).
    int real_sign() const { return sgn(value.re); }
    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.value == b.value && (a.value.is_zero() || a.pi_power == b.pi_power);
    }
};

std::string to_string(const PiScalar& s);

/// scale * pi^pi_power * exp(-width (x^2 + p^2) / hbar) * poly
struct GaussPoly {
    Rational width = 0;
    Rational scale = 1;
    int pi_power = 0;
    PolySymbol poly;
    Rational hbar = 1;

    static GaussPoly from_poly(PolySymbol p, const Rational& hbar);

    GaussPoly dx() const;
    GaussPoly dp() const;
    GaussPoly conj() const;
    bool is_zero() const { return poly.is_zero(); }
    Ring ring() const { return poly.ring(); }

    /// Pointwise product.
    friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b);
    friend GaussPoly operator*(GaussPoly a, const PolySymbol& b);
    /// Sum of two terms with the same Gaussian factor.
    friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b);
    GaussPoly operator*(const Coeff& c) const;
    GaussPoly operator*(const Rational& c) const;
};

std::string to_string(const GaussPoly& g);

// --- bidifferential operator ------------------------------------------------

PolySymbol nabla_power(const PolySymbol& f, const PolySymbol& g, int k);
GaussPoly nabla_power(const GaussPoly& f, const PolySymbol& g, int k);
GaussPoly nabla_power(const PolySymbol& f, const GaussPoly& g, int k);
/// Throws UnsupportedPair unless one of the widths is zero.
GaussPoly nabla_power(const GaussPoly& f, const GaussPoly& g, int k);

// --- unified products ---------------------------------------------------------

PolySymbol phase_alpha(int j_squared, const PolySymbol& f, const PolySymbol& g, const Rational& hbar);
PolySymbol phase_sigma(int j_squared, const PolySymbol& f, const PolySymbol& g, const Rational& hbar);

inline PolySymbol moyal_alpha(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return phase_alpha(-1, f, g, hbar);
}
inline PolySymbol moyal_sigma(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return phase_sigma(-1, f, g, hbar);
}
inline PolySymbol hyper_alpha(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return phase_alpha(1, f, g, hbar);
}
inline PolySymbol hyper_sigma(const PolySymbol& f, const PolySymbol& g, const Rational& hbar) {
    return phase_sigma(1, f, g, hbar);
}
inline PolySymbol poisson_bracket(const PolySymbol& f, const PolySymbol& g) { return nabla_power(f, g, 1); }

/// Ring holding J for the class: Complex for -1, Split for +1; throws
/// UnsupportedClass for 0.
Ring star_ring(int j_squared);

PolySymbol star(const PolySymbol& f, const PolySymbol& g, const comp::CompClass& cls);
GaussPoly star(const GaussPoly& f, const PolySymbol& g, const comp::CompClass& cls);
GaussPoly star(const PolySymbol& f, const GaussPoly& g, const comp::CompClass& cls);

// --- Gaussians -----------------------------------------------------------------

struct GaussianStar {
    Rational prefactor;
    Rational width;
};

/// exp(-a r^2/hbar) * exp(-b r^2/hbar) = prefactor * exp(-width r^2/hbar).
/// Elliptic: 1/(1+ab), (a+b)/(1+ab). Hyperbolic: each lightcone component is
/// a real-parameter Moyal product and both give 1/(1-ab), (a+b)/(1-ab);
/// ab = 1 throws HyperbolicSingularity.
GaussianStar gaussian_star_isotropic(const Rational& a, const Rational& b, const comp::CompClass& cls);

/// (1/(pi hbar)) exp(-(x^2+p^2)/hbar)
GaussPoly wigner_ground_state(const Rational& hbar);

/// Closed-form Gaussian moments; throws NonIntegrable for width <= 0.
PiScalar integrate(const GaussPoly& s);

// --- expectation values --------------------------------------------------------

struct Expectation {
    PiScalar lhs;          // integral of (g* * g) F
    PiScalar chain_rhs;    // (2 pi hbar) integral of (g * F)^* (g * F)
    PiScalar literal_rhs;  // (2 pi hbar) integral of (F * g)^* (F * g)
};

Expectation expectation(const PolySymbol& g, const GaussPoly& f, const comp::CompClass& cls);

struct ConstantCase {
    PolySymbol g;
    PiScalar value;
};

struct NegativityResult {
    bool found = false;
    PolySymbol witness;
    PiScalar value;
    std::size_t trial = 0;        // index of the witness
    std::size_t trials_run = 0;
    double min_value = 0;         // smallest real part seen
    ConstantCase constant_case;   // g = unit of the class ring
    std::vector<std::pair<PolySymbol, double>> samples;  // (g, value) for every trial run
};

struct NegativityOptions {
    int degree_bound = 1;
    int min_degree = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    Rational target = 0;  // accept a witness whose value is < 0 and <= target
    bool keep_samples = false;
};

/// Random search for g with negative expectation in state F.
NegativityResult negativity_search(const GaussPoly& f, const comp::CompClass& cls, const NegativityOptions& opts);

// --- axioms ------------------------------------------------------------------------

/// (alpha_s, sigma_s) on real polynomials of total degree <= degree.
comp::TwoProductAlgebra<PolySymbol> phase_space_algebra(const comp::CompClass& cls, int degree);

std::vector<PropertyReport> check_phase_space_axioms(const comp::CompClass& cls, std::size_t samples,
                                                     std::uint64_t seed, int degree = 3);

/// (f*g)*h = f*(g*h) on random polynomials in the class ring.
PropertyReport check_star_associative(const comp::CompClass& cls, std::size_t samples, std::uint64_t seed,
                                      int degree = 4);

} // namespace hqm::phase
