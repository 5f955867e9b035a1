#include "hqm/dmatrix.hpp"

#include "hqm/parallel.hpp"
#include "hqm/univariate.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace hqm::dmatrix {

SplitComplex trace_inner_product(const DMatrix& a, const DMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace inner product of matrices with different dimensions");
    // tr(A* B) = sum_{i,k} conj(A_ki) B_ki
    SplitComplex acc(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) acc += a(k, i).conj() * b(k, i);
    return acc;
}

LightconePair decompose(const DMatrix& a) {
    const std::size_t n = a.dim();
    LightconePair p{RMatrix(n), RMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto lc = splitc::lightcone(a(i, j));
            p.plus(i, j) = lc.u;
            p.minus(i, j) = lc.v;
        }
    return p;
}

DMatrix recompose(const LightconePair& p) {
    if (p.plus.dim() != p.minus.dim()) throw DimensionMismatch("lightcone components differ in dimension");
    const std::size_t n = p.plus.dim();
    DMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = splitc::from_lightcone(p.plus(i, j), p.minus(i, j));
    return a;
}

DMatrix scalar_matrix(const SplitComplex& z, std::size_t n) {
    DMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = z;
    return m;
}

namespace {

RMatrix shifted(RMatrix m, const Rational& s) {
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) -= s;
    return m;
}

SpectralWitness make_witness(const RealRoot& root, bool from_plus) {
    SpectralWitness w;
    w.from_plus = from_plus;
    w.eigenvalue = root.approx();
    w.exact_eigenvalue = root.exact;
    if (root.exact) {
        w.exact_lambda = from_plus ? splitc::from_lightcone(*root.exact, 0) : splitc::from_lightcone(0, *root.exact);
    }
    // lambda = (s/2)(1 + j) from the plus component, (s/2)(1 - j) from the minus one
    w.lambda_re = w.eigenvalue / 2;
    w.lambda_im = from_plus ? w.eigenvalue / 2 : -w.eigenvalue / 2;
    return w;
}

} // namespace

bool para_spectrum_witness(const DMatrix& t, const SplitComplex& lambda) {
    const auto p = decompose(t);
    const auto lc = splitc::lightcone(lambda);
    return sgn(determinant(shifted(p.plus, lc.u))) == 0 || sgn(determinant(shifted(p.minus, lc.v))) == 0;
}

ParaSpectralRadius para_spectral_radius(const DMatrix& t) {
    const auto p = decompose(t);
    const UPoly cp_plus = characteristic_polynomial(p.plus);
    const UPoly cp_minus = characteristic_polynomial(p.minus);

    ParaSpectralRadius r;
    const auto roots_plus = real_roots(cp_plus);
    const auto roots_minus = real_roots(cp_minus);
    r.plus_real_eigenvalues = static_cast<int>(roots_plus.size());
    r.minus_real_eigenvalues = static_cast<int>(roots_minus.size());
    for (const auto& root : roots_plus) r.witnesses.push_back(make_witness(root, true));
    for (const auto& root : roots_minus) r.witnesses.push_back(make_witness(root, false));
    if (!r.witnesses.empty()) r.value = 0.0;
    return r;
}

double complex_spectral_radius(const CMatrix& t) {
    const CMatrix gram = t.adjoint() * t;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    return std::sqrt(top);
}

double vector_para_norm(const std::vector<SplitComplex>& x) {
    Rational q = 0;
    for (const auto& xi : x) q += xi.norm2();
    const int s = sgn(q);
    return s == 0 ? 0.0 : s * std::sqrt(std::fabs(q.get_d()));
}

namespace {

struct Real2 {
    Eigen::MatrixXd plus, minus;
};

Real2 to_double(const LightconePair& p) {
    const auto n = static_cast<Eigen::Index>(p.plus.dim());
    Real2 r{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            r.plus(i, j) = p.plus(i, j).get_d();
            r.minus(i, j) = p.minus(i, j).get_d();
        }
    return r;
}

double signed_sqrt(double q) { return q == 0.0 ? 0.0 : std::copysign(std::sqrt(std::fabs(q)), q); }

// ‖Tx‖ / ‖x‖ in lightcone coordinates, where <x, x> = u . v
double ratio(const Real2& t, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    const double q = u.dot(v);
    if (q == 0.0) return std::numeric_limits<double>::infinity();
    const double qt = (t.plus * u).dot(t.minus * v);
    return signed_sqrt(qt) / signed_sqrt(q);
}

bool normalize(Eigen::VectorXd& u, Eigen::VectorXd& v) {
    const double q = u.dot(v);
    if (!(std::fabs(q) > 1e-9)) return false;
    const double s = 1.0 / std::sqrt(std::fabs(q));
    u *= s;
    v *= s;
    return true;
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd u, v;
    bool valid = false;
};

Candidate draw_and_refine(const Real2& t, const ParaNormOptions& opts, std::size_t index) {
    const auto n = t.plus.rows();
    Rng rng = sample_rng(opts.seed, index);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&](Eigen::VectorXd& u, Eigen::VectorXd& v) {
        u.resize(n);
        v.resize(n);
        for (Eigen::Index k = 0; k < n; ++k) u(k) = gauss(rng);
        if (opts.domain == VectorDomain::Real) {
            v = u;
        } else {
            for (Eigen::Index k = 0; k < n; ++k) v(k) = gauss(rng);
        }
    };

    Candidate c;
    for (int attempt = 0; attempt < 16 && !c.valid; ++attempt) {
        draw(c.u, c.v);
        c.valid = normalize(c.u, c.v);
    }
    if (!c.valid) return c;
    c.value = ratio(t, c.u, c.v);

    double step = 0.5;
    Eigen::VectorXd du, dv;
    for (std::size_t it = 0; it < opts.refine; ++it) {
        draw(du, dv);
        Eigen::VectorXd u = c.u + step * du;
        Eigen::VectorXd v = opts.domain == VectorDomain::Real ? u : Eigen::VectorXd(c.v + step * dv);
        if (!normalize(u, v)) continue;
        const double r = ratio(t, u, v);
        if (r < c.value) {
            c.value = r;
            c.u = std::move(u);
            c.v = std::move(v);
            step = std::min(step * 1.5, 2.0);
        } else {
            step *= 0.7;
        }
    }
    return c;
}

} // namespace

ParaNormEstimate operator_para_norm(const DMatrix& t, const ParaNormOptions& opts) {
    if (opts.samples == 0) throw Error("operator_para_norm needs at least one sample");
    const Real2 tr = to_double(decompose(t));
    const auto cands = parallel_map<Candidate>(opts.samples, [&](std::size_t i) { return draw_and_refine(tr, opts, i); });

    ParaNormEstimate est;
    est.value = std::numeric_limits<double>::infinity();
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        if (!c.valid) continue;
        ++est.samples_used;
        if (c.value < est.value) {
            est.value = c.value;
            best = &c;
        }
    }
    if (!best) throw DegenerateError("no sampled vector had nonzero para-norm");
    est.witness_u.assign(best->u.data(), best->u.data() + best->u.size());
    est.witness_v.assign(best->v.data(), best->v.data() + best->v.size());
    return est;
}

namespace {

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

std::vector<PropertyReport> para_cstar_check(const std::vector<DMatrix>& sample, const ParaNormOptions& opts,
                                             double tol) {
    std::vector<double> norms;
    norms.reserve(sample.size());
    for (const auto& a : sample) norms.push_back(operator_para_norm(a, opts).value);

    PropertyReport sub;
    sub.law = "para_cstar_submultiplicative";
    PropertyReport star;
    star.law = "para_cstar_identity";
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = 0; j < sample.size(); ++j) {
            ++sub.samples;
            const double ab = std::fabs(operator_para_norm(sample[i] * sample[j], opts).value);
            const double rhs = std::fabs(norms[i]) * std::fabs(norms[j]);
            if (ab < rhs * (1 - tol) - tol)
                sub.add_failure({"|‖AB‖| >= |‖A‖||‖B‖|", {to_string(sample[i]), to_string(sample[j])},
                                 fmt_double(ab), fmt_double(rhs)});
        }
        ++star.samples;
        const double lhs = std::fabs(operator_para_norm(sample[i].hermitian_conj() * sample[i], opts).value);
        const double rhs = norms[i] * norms[i];
        if (std::fabs(lhs - rhs) > tol * std::max(1.0, rhs))
            star.add_failure({"|‖A*A‖| = ‖A‖^2", {to_string(sample[i])}, fmt_double(lhs), fmt_double(rhs)});
    }
    sub.notes.push_back("para-norms are randomized upper-bound estimates; verdicts are heuristic");
    star.notes.push_back("para-norms are randomized upper-bound estimates; verdicts are heuristic");
    return {sub, star};
}

DMatrix random_dmatrix(Rng& rng, std::size_t n, int max_num, int max_den) {
    DMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = splitc::random_split(rng, max_num, max_den);
    return m;
}

} // namespace hqm::dmatrix
