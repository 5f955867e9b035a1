#pragma once

// Matrices over the split-complex numbers. All invertibility and spectral
// questions are routed through the lightcone decomposition
//     A = A_plus * e_plus + A_minus * e_minus,   e_(+/-) = (1 +/- j) / 2,
// which turns D^(n x n) into a pair of real matrix algebras.

#include "hqm/matrix.hpp"
#include "hqm/report.hpp"
#include "hqm/splitc.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace hqm::dmatrix {

using DMatrix = Matrix<SplitComplex>;
using CMatrix = Eigen::MatrixXcd;

struct LightconePair {
    RMatrix plus;   // coefficients of e_plus: x + y entrywise
    RMatrix minus;  // coefficients of e_minus: x - y entrywise
};

/// tr(A* B); throws DimensionMismatch.
SplitComplex trace_inner_product(const DMatrix& a, const DMatrix& b);

LightconePair decompose(const DMatrix& a);
DMatrix recompose(const LightconePair& p);

/// z * I_n
DMatrix scalar_matrix(const SplitComplex& z, std::size_t n);

/// Exact singularity test of T - lambda I: det(T+ - lambda+ I) = 0 or
/// det(T- - lambda- I) = 0.
bool para_spectrum_witness(const DMatrix& t, const SplitComplex& lambda);

/// A point lambda with T - lambda I singular and |‖lambda‖| = 0. One lightcone
/// coordinate is a real eigenvalue of the matching component, the other is 0.
struct SpectralWitness {
    bool from_plus = true;                 // which component supplied the eigenvalue
    double eigenvalue = 0;                 // real eigenvalue of that component
    std::optional<Rational> exact_eigenvalue;
    std::optional<SplitComplex> exact_lambda;  // set when the eigenvalue is rational
    double lambda_re = 0;
    double lambda_im = 0;
};

struct ParaSpectralRadius {
    std::optional<double> value;           // empty: T - lambda I is invertible for every lambda
    std::vector<SpectralWitness> witnesses;
    int plus_real_eigenvalues = 0;         // distinct, counted exactly (Sturm)
    int minus_real_eigenvalues = 0;
};

/// min |‖lambda‖| over the para spectrum. Whenever the spectrum is nonempty the
/// minimum is 0 (a lightcone coordinate can be chosen to vanish), so the result
/// is either 0 or empty.
ParaSpectralRadius para_spectral_radius(const DMatrix& t);

/// sqrt of the largest eigenvalue of T^H T (the operator 2-norm).
double complex_spectral_radius(const CMatrix& t);

/// Para-norm of a vector in D^n: sign(sum x_i* x_i) sqrt|sum x_i* x_i|.
double vector_para_norm(const std::vector<SplitComplex>& x);

/// Which vectors the para-norm infimum ranges over.
enum class VectorDomain {
    Split,  // all of D^n (both hyperboloid families ‖x‖ = +1 and ‖x‖ = -1)
    Real,   // real vectors only (unit sphere)
};

struct ParaNormEstimate {
    double value = 0;                 // smallest signed ratio found
    std::vector<double> witness_u;    // lightcone coordinates of the best x
    std::vector<double> witness_v;
    std::size_t samples_used = 0;
};

struct ParaNormOptions {
    std::size_t samples = 256;
    std::size_t refine = 64;
    std::uint64_t seed = 0;
    VectorDomain domain = VectorDomain::Split;
};

/// Randomized upper-bound estimate of
///     inf_{‖x‖ != 0} ‖Tx‖ / ‖x‖
/// (the signed ratio). Each sample has its own random stream, so the estimate
/// is non-increasing in `samples` for a fixed seed.
ParaNormEstimate operator_para_norm(const DMatrix& t, const ParaNormOptions& opts = {});

/// Heuristic check of |‖AB‖| >= |‖A‖||‖B‖| and |‖A*A‖| = ‖A‖^2 over a sample,
/// using operator_para_norm estimates at relative tolerance `tol`.
std::vector<PropertyReport> para_cstar_check(const std::vector<DMatrix>& sample, const ParaNormOptions& opts = {},
                                             double tol = 1e-6);

DMatrix random_dmatrix(Rng& rng, std::size_t n, int max_num = 8, int max_den = 8);

} // namespace hqm::dmatrix
