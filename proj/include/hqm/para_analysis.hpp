#pragma once

// Indefinite ("para") metric and norm structures over the split-complex
// numbers: reversed triangle inequality, para-Cauchy sequences, the scalar
// identities of the indefinite inner product, and non-unique best
// approximation on convex sets.

#include "hqm/errors.hpp"
#include "hqm/report.hpp"
#include "hqm/splitc.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hqm::para {

using Vec = std::vector<SplitComplex>;

/// Finite space with a symmetric table of distances. Distances are stored
/// squared so that seminorm distances sqrt|z*z| stay exact rationals.
struct FiniteParaMetric {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> dist2;

    std::size_t size() const { return labels.size(); }

    /// d(z, w) = |‖z - w‖| on points of D.
    static FiniteParaMetric from_points(const std::vector<SplitComplex>& pts);
    /// From a table of (nonnegative rational) distances.
    static FiniteParaMetric from_distances(std::vector<std::string> labels,
                                           const std::vector<std::vector<Rational>>& d);
};

/// Decides whether x and y are connectable through z along a path that
/// avoids points at zero distance (the PM4 side condition).
using PathOracle = std::function<bool(std::size_t x, std::size_t y, std::size_t z)>;

/// Every triple admissible.
PathOracle any_path();
/// For points of D: z lies between x and y with z - x and y - z in the same
/// open cone, so the broken segment x -> z -> y never becomes null.
PathOracle cone_path(std::vector<SplitComplex> pts);

/// PM1-PM3 on every point/pair, PM4 on every ordered triple the oracle admits.
PropertyReport check_pm_axioms(const FiniteParaMetric& space, const PathOracle& oracle);

/// Finite prefix x_1 .. x_L of a sequence in D.
struct SampledSequence {
    std::vector<SplitComplex> terms;
    std::string generator;
};

/// d(x_m, x_n) > epsilon for all m != n > N on the prefix (1-based indices).
/// Prefix-level evidence only. Throws std::invalid_argument unless L > N + 1.
bool para_cauchy_detect(const SampledSequence& seq, const Rational& epsilon, std::size_t n);

/// If d(x_n, x) > epsilon/2 for all n > N, then d(x_m, x_n) > epsilon for all
/// m != n > N with x between x_m and x_n. Pairs failing the path condition are
/// counted as skipped; when the hypothesis fails the report says so in notes.
PropertyReport divergent_implies_para_cauchy_demo(const SampledSequence& seq, const SplitComplex& x,
                                                  const Rational& epsilon, std::size_t n);

/// sum_i x_i* x_i (always real).
Rational quadratic_form(const Vec& x);
/// sign(q) sqrt|q| for q = quadratic_form(x).
double para_norm(const Vec& x);
/// True when q((1-t) a + t b) != 0 for every t in [0, 1], decided exactly.
bool segment_avoids_null(const Vec& a, const Vec& b);

/// [0]: PN1 on every scalar/vector pair (exact). [1]: PN2 on every pair of
/// vectors whose connecting segment avoids the null cone (exact).
std::vector<PropertyReport> check_pn_axioms(const std::vector<Vec>& vectors, const std::vector<SplitComplex>& scalars);

using Pair = std::pair<SplitComplex, SplitComplex>;

PropertyReport polarization_check(const std::vector<Pair>& pairs);
PropertyReport parallelogram_check(const std::vector<Pair>& pairs);
/// |‖x* y‖| >= ‖x‖ ‖y‖ where ‖x‖ ‖y‖ >= 0; other pairs are skipped.
PropertyReport para_cauchy_schwarz_check(const std::vector<Pair>& pairs);
/// |‖xy‖| >= |‖x‖| |‖y‖| where ‖x‖ ‖y‖ > 0; other pairs are skipped.
PropertyReport para_normed_algebra_check(const std::vector<SplitComplex>& sample);

/// Same-cone random pairs checked for |‖z+w‖| >= |‖z‖| + |‖w‖| both exactly
/// and in floating point with absolute tolerance `tol`.
PropertyReport reversed_triangle_sweep(std::size_t samples, std::uint64_t seed, double tol = 1e-12);

std::vector<Pair> random_pairs(std::size_t n, std::uint64_t seed);

/// Closed segment {(1 - t) q0 + t q1 : t in [0, 1]} in D^n.
struct Segment {
    Vec q0;
    Vec q1;
    std::vector<std::pair<double, double>> at(double t) const;
};

struct Minimizer {
    double t = 0;
    std::vector<std::pair<double, double>> point;  // (re, im) per coordinate
    double delta = 0;
};

struct MinimizerScan {
    std::vector<Minimizer> minimizers;
    double min_value = 0;
    std::vector<std::pair<double, double>> profile;  // (t, |‖x - y(t)‖|) on the grid
};

/// Minimizes |‖x - y(t)‖| over the segment: grid scan, golden-section
/// refinement of each local minimum, then every global minimizer within 1e-9
/// of the minimum (deduplicated by point).
MinimizerScan minimizer_scan(const Vec& x, const Segment& m, std::size_t grid = 201);

std::string profile_csv(const MinimizerScan& scan);

} // namespace hqm::para
