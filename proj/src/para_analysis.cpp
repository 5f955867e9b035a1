#include "hqm/para_analysis.hpp"

#include "hqm/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hqm::para {

using splitc::cone_of;
using splitc::Cone;

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

int sign_of(const Rational& q) { return sgn(q); }

} // namespace

// --- finite para-metric spaces ---------------------------------------------

FiniteParaMetric FiniteParaMetric::from_points(const std::vector<SplitComplex>& pts) {
    FiniteParaMetric m;
    const std::size_t n = pts.size();
    m.dist2.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m.labels.push_back(to_string(pts[i]));
        for (std::size_t k = 0; k < n; ++k) m.dist2[i][k] = abs_value((pts[i] - pts[k]).norm2());
    }
    return m;
}

FiniteParaMetric FiniteParaMetric::from_distances(std::vector<std::string> labels,
                                                  const std::vector<std::vector<Rational>>& d) {
    FiniteParaMetric m;
    m.labels = std::move(labels);
    const std::size_t n = m.labels.size();
    if (d.size() != n) throw DimensionMismatch("distance table does not match the label count");
    m.dist2.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i].size() != n) throw DimensionMismatch("distance table is not square");
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(d[i][k]) < 0) throw std::invalid_argument("negative distance in table");
            m.dist2[i][k] = d[i][k] * d[i][k];
        }
    }
    return m;
}

PathOracle any_path() {
    return [](std::size_t, std::size_t, std::size_t) { return true; };
}

PathOracle cone_path(std::vector<SplitComplex> pts) {
    return [pts = std::move(pts)](std::size_t x, std::size_t y, std::size_t z) {
        const Cone c = cone_of(pts[z] - pts[x]);
        return c != Cone::Null && c == cone_of(pts[y] - pts[z]);
    };
}

PropertyReport check_pm_axioms(const FiniteParaMetric& space, const PathOracle& oracle) {
    PropertyReport r;
    r.law = "para_metric";
    const std::size_t n = space.size();
    const auto& d2 = space.dist2;
    auto label = [&](std::size_t i) { return space.labels[i]; };
    for (std::size_t i = 0; i < n; ++i) {
        ++r.samples;
        if (sgn(d2[i][i]) != 0) r.add_failure({"PM2 d(x,x) = 0", {label(i)}, "d^2 = " + to_string(d2[i][i]), "0"});
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(d2[i][k]) < 0)
                r.add_failure({"PM1 d >= 0", {label(i), label(k)}, "d^2 = " + to_string(d2[i][k]), ">= 0"});
            if (k > i && d2[i][k] != d2[k][i])
                r.add_failure({"PM3 d(x,y) = d(y,x)", {label(i), label(k)}, to_string(d2[i][k]), to_string(d2[k][i])});
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (x == y || y == z || x == z) continue;
                if (!oracle(x, y, z)) {
                    ++r.skipped;
                    continue;
                }
                ++r.samples;
                if (!splitc::sqrt_sum_le(d2[x][z], d2[z][y], d2[x][y]))
                    r.add_failure({"PM4 d(x,y) >= d(x,z) + d(z,y)",
                                   {label(x), label(y), label(z)},
                                   "d(x,y)^2 = " + to_string(d2[x][y]),
                                   "d(x,z)^2 = " + to_string(d2[x][z]) + ", d(z,y)^2 = " + to_string(d2[z][y])});
            }
    r.notes.push_back("distances compared exactly through their squares");
    return r;
}

// --- sequences ---------------------------------------------------------------

namespace {

Rational dist2(const SplitComplex& a, const SplitComplex& b) { return abs_value((a - b).norm2()); }

} // namespace

bool para_cauchy_detect(const SampledSequence& seq, const Rational& epsilon, std::size_t n) {
    const std::size_t len = seq.terms.size();
    if (len <= n + 1) throw std::invalid_argument("prefix must be longer than N + 1");
    if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon must be positive");
    const Rational eps2 = epsilon * epsilon;
    // terms[k] is x_{k+1}; m, n > N means k >= N
    for (std::size_t a = n; a < len; ++a)
        for (std::size_t b = a + 1; b < len; ++b)
            if (dist2(seq.terms[a], seq.terms[b]) <= eps2) return false;
    return true;
}

PropertyReport divergent_implies_para_cauchy_demo(const SampledSequence& seq, const SplitComplex& x,
                                                  const Rational& epsilon, std::size_t n) {
    PropertyReport r;
    r.law = "divergent_implies_para_cauchy";
    const std::size_t len = seq.terms.size();
    if (len <= n + 1) throw std::invalid_argument("prefix must be longer than N + 1");
    r.notes.push_back("prefix length " + std::to_string(len) + ", N = " + std::to_string(n) + ", epsilon = " +
                      to_string(epsilon) + ", reference point " + to_string(x));
    const Rational half2 = epsilon * epsilon / 4;
    for (std::size_t k = n; k < len; ++k)
        if (dist2(seq.terms[k], x) <= half2) {
            r.notes.push_back("hypothesis d(x_n, x) > epsilon/2 fails at n = " + std::to_string(k + 1) +
                              "; nothing to check");
            return r;
        }
    const Rational eps2 = epsilon * epsilon;
    for (std::size_t a = n; a < len; ++a)
        for (std::size_t b = a + 1; b < len; ++b) {
            const Cone c = cone_of(x - seq.terms[a]);
            if (c == Cone::Null || c != cone_of(seq.terms[b] - x)) {
                ++r.skipped;
                continue;
            }
            ++r.samples;
            const Rational d = dist2(seq.terms[a], seq.terms[b]);
            if (d <= eps2)
                r.add_failure({"d(x_m, x_n) > epsilon",
                               {std::to_string(a + 1), std::to_string(b + 1)},
                               "d^2 = " + to_string(d),
                               "epsilon^2 = " + to_string(eps2)});
        }
    return r;
}

// --- para-normed spaces --------------------------------------------------------

Rational quadratic_form(const Vec& x) {
    Rational q = 0;
    for (const auto& xi : x) q += xi.norm2();
    return q;
}

double para_norm(const Vec& x) {
    const Rational q = quadratic_form(x);
    return sign_of(q) * std::sqrt(std::fabs(q.get_d()));
}

bool segment_avoids_null(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vectors of different length");
    // q(a + t d) = c + bb t + aa t^2
    Rational c = 0, bb = 0, aa = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const SplitComplex d = b[i] - a[i];
        c += a[i].norm2();
        bb += 2 * (a[i].conj() * d).re;
        aa += d.norm2();
    }
    const int s = sign_of(c);
    if (s == 0 || sign_of(Rational(aa + bb + c)) != s) return false;
    if (sgn(aa) != 0) {
        const Rational t = -bb / (2 * aa);
        if (sgn(t) > 0 && t < 1 && sign_of(Rational(c - bb * bb / (4 * aa))) != s) return false;
    }
    return true;
}

namespace {

std::string show(const Vec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

Vec scale(const SplitComplex& a, const Vec& x) {
    Vec out;
    out.reserve(x.size());
    for (const auto& xi : x) out.push_back(a * xi);
    return out;
}

Vec add(const Vec& x, const Vec& y) {
    Vec out;
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
    return out;
}

} // namespace

std::vector<PropertyReport> check_pn_axioms(const std::vector<Vec>& vectors, const std::vector<SplitComplex>& scalars) {
    PropertyReport pn1;
    pn1.law = "PN1";
    for (const auto& a : scalars)
        for (const auto& x : vectors) {
            ++pn1.samples;
            // ‖a x‖ = ‖a‖ ‖x‖  <=>  q(a x) = (a* a) q(x), since sign * sqrt|.| is injective and multiplicative
            const Rational lhs = quadratic_form(scale(a, x));
            const Rational rhs = a.norm2() * quadratic_form(x);
            if (lhs != rhs)
                pn1.add_failure({"‖a x‖ = ‖a‖ ‖x‖", {to_string(a), show(x)}, "q(ax) = " + to_string(lhs),
                                 "(a*a) q(x) = " + to_string(rhs)});
        }

    PropertyReport pn2;
    pn2.law = "PN2";
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t k = i + 1; k < vectors.size(); ++k) {
            const Vec& x = vectors[i];
            const Vec& y = vectors[k];
            if (!segment_avoids_null(x, y)) {
                ++pn2.skipped;
                continue;
            }
            ++pn2.samples;
            const Rational sx = abs_value(quadratic_form(x));
            const Rational sy = abs_value(quadratic_form(y));
            const Rational sxy = abs_value(quadratic_form(add(x, y)));
            if (!splitc::sqrt_sum_le(sx, sy, sxy))
                pn2.add_failure({"|‖x+y‖| >= |‖x‖| + |‖y‖|", {show(x), show(y)},
                                 fmt(std::sqrt(sxy.get_d())), fmt(std::sqrt(sx.get_d()) + std::sqrt(sy.get_d()))});
        }
    pn2.notes.push_back("pairs whose connecting segment meets the null cone are skipped");
    return {pn1, pn2};
}

PropertyReport polarization_check(const std::vector<Pair>& pairs) {
    PropertyReport r;
    r.law = "polarization_identity";
    const SplitComplex j = SplitComplex::unit();
    const Rational q(1, 4);
    for (const auto& [x, y] : pairs) {
        ++r.samples;
        auto sq = [](const SplitComplex& z) { return z.conj() * z; };
        const SplitComplex lhs = x.conj() * y;
        const SplitComplex rhs = (sq(x + y) - sq(x - y)) * q + j * (sq(x + j * y) - sq(x - j * y)) * q;
        if (!(lhs == rhs)) r.add_failure({"x*y", {to_string(x), to_string(y)}, to_string(lhs), to_string(rhs)});
    }
    return r;
}

PropertyReport parallelogram_check(const std::vector<Pair>& pairs) {
    PropertyReport r;
    r.law = "parallelogram_identity";
    for (const auto& [x, y] : pairs) {
        ++r.samples;
        const Rational lhs = (x + y).norm2() + (x - y).norm2();
        const Rational rhs = 2 * (x.norm2() + y.norm2());
        if (lhs != rhs) r.add_failure({"(x+y)*(x+y) + (x-y)*(x-y) = 2(x*x + y*y)", {to_string(x), to_string(y)},
                                       to_string(lhs), to_string(rhs)});
    }
    return r;
}

PropertyReport para_cauchy_schwarz_check(const std::vector<Pair>& pairs) {
    PropertyReport r;
    r.law = "para_cauchy_schwarz";
    std::size_t equal = 0;
    for (const auto& [x, y] : pairs) {
        const Rational nx = x.norm2(), ny = y.norm2();
        if (sign_of(nx) * sign_of(ny) < 0) {
            ++r.skipped;
            continue;
        }
        ++r.samples;
        // |‖x*y‖|^2 = |(x*y)*(x*y)| against (‖x‖ ‖y‖)^2 = nx ny (both of one sign)
        const Rational lhs = abs_value((x.conj() * y).norm2());
        const Rational rhs = nx * ny;
        if (lhs < rhs)
            r.add_failure({"|<x,y>| >= ‖x‖ ‖y‖", {to_string(x), to_string(y)}, "|<x,y>|^2 = " + to_string(lhs),
                           "(‖x‖ ‖y‖)^2 = " + to_string(rhs)});
        else if (lhs == rhs)
            ++equal;
    }
    r.notes.push_back("equality in " + std::to_string(equal) + " of " + std::to_string(r.samples) + " checked pairs");
    r.notes.push_back("skipped pairs have ‖x‖ ‖y‖ < 0");
    return r;
}

PropertyReport para_normed_algebra_check(const std::vector<SplitComplex>& sample) {
    PropertyReport r;
    r.law = "para_normed_algebra";
    std::size_t equal = 0;
    for (const auto& x : sample)
        for (const auto& y : sample) {
            const Rational nx = x.norm2(), ny = y.norm2();
            if (sign_of(nx) * sign_of(ny) <= 0) {
                ++r.skipped;
                continue;
            }
            ++r.samples;
            const Rational lhs = abs_value((x * y).norm2());
            const Rational rhs = abs_value(nx) * abs_value(ny);
            if (lhs < rhs)
                r.add_failure({"|‖xy‖| >= |‖x‖| |‖y‖|", {to_string(x), to_string(y)}, "|‖xy‖|^2 = " + to_string(lhs),
                               "(|‖x‖| |‖y‖|)^2 = " + to_string(rhs)});
            else if (lhs == rhs)
                ++equal;
        }
    r.notes.push_back("equality in " + std::to_string(equal) + " of " + std::to_string(r.samples) + " checked pairs");
    return r;
}

std::vector<Pair> random_pairs(std::size_t n, std::uint64_t seed) {
    std::vector<Pair> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng = sample_rng(seed, i);
        SplitComplex x = splitc::random_split(rng);
        SplitComplex y = splitc::random_split(rng);
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

PropertyReport reversed_triangle_sweep(std::size_t samples, std::uint64_t seed, double tol) {
    auto per = parallel_map<std::optional<Failure>>(samples, [&](std::size_t i) -> std::optional<Failure> {
        Rng rng = sample_rng(seed, i);
        SplitComplex z, w;
        do {
            z = splitc::random_split(rng);
            w = splitc::random_split(rng);
        } while (!splitc::same_cone(z, w));
        const double lhs = std::fabs(splitc::seminorm(z + w));
        const double rhs = std::fabs(splitc::seminorm(z)) + std::fabs(splitc::seminorm(w));
        const bool exact = splitc::reversed_triangle_exact(z, w);
        if (exact && lhs >= rhs - tol) return std::nullopt;
        return Failure{exact ? "floating evaluation" : "exact evaluation", {to_string(z), to_string(w)}, fmt(lhs),
                       fmt(rhs)};
    });
    PropertyReport r;
    r.law = "reversed_triangle";
    r.samples = samples;
    for (auto& f : per)
        if (f) r.add_failure(std::move(*f));
    r.notes.push_back("pairs drawn in a common open cone, so the segment between them avoids the null cone");
    return r;
}

// --- best approximation on a segment -----------------------------------------------

std::vector<std::pair<double, double>> Segment::at(double t) const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < q0.size(); ++i)
        out.emplace_back((1 - t) * q0[i].re.get_d() + t * q1[i].re.get_d(),
                         (1 - t) * q0[i].im.get_d() + t * q1[i].im.get_d());
    return out;
}

MinimizerScan minimizer_scan(const Vec& x, const Segment& m, std::size_t grid) {
    if (grid < 3) throw std::invalid_argument("grid must have at least 3 points");
    if (m.q0.size() != m.q1.size() || x.size() != m.q0.size())
        throw DimensionMismatch("point and segment live in different dimensions");
    // x - y(t) = (x - q0) - t (q1 - q0); q(t) = c + b t + a t^2 exactly
    Rational a = 0, b = 0, c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const SplitComplex e = x[i] - m.q0[i];
        const SplitComplex d = m.q1[i] - m.q0[i];
        c += e.norm2();
        b -= 2 * (e.conj() * d).re;
        a += d.norm2();
    }
    const double ad = a.get_d(), bd = b.get_d(), cd = c.get_d();
    auto f = [&](double t) { return std::sqrt(std::fabs(cd + t * (bd + t * ad))); };

    MinimizerScan scan;
    std::vector<double> ts(grid), fs(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        ts[i] = static_cast<double>(i) / static_cast<double>(grid - 1);
        fs[i] = f(ts[i]);
        scan.profile.emplace_back(ts[i], fs[i]);
    }

    std::vector<std::pair<double, double>> cands;  // (t, f)
    const double phi = (std::sqrt(5.0) - 1) / 2;
    for (std::size_t i = 0; i < grid; ++i) {
        const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
        const bool right_ok = i + 1 == grid || fs[i] <= fs[i + 1];
        if (!left_ok || !right_ok) continue;
        double lo = ts[i == 0 ? 0 : i - 1];
        double hi = ts[i + 1 == grid ? i : i + 1];
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double t1 = hi - phi * (hi - lo);
            const double t2 = lo + phi * (hi - lo);
            if (f(t1) <= f(t2))
                hi = t2;
            else
                lo = t1;
        }
        double best = (lo + hi) / 2;
        // the bracket may have collapsed onto an endpoint of the segment
        for (double t : {ts[i], lo, hi})
            if (f(t) < f(best)) best = t;
        cands.emplace_back(best, f(best));
    }

    scan.min_value = std::numeric_limits<double>::infinity();
    for (const auto& cnd : cands) scan.min_value = std::min(scan.min_value, cnd.second);
    for (const auto& [t, v] : cands) {
        if (v > scan.min_value + 1e-9) continue;
        Minimizer mz{t, m.at(t), v};
        const bool dup = std::any_of(scan.minimizers.begin(), scan.minimizers.end(), [&](const Minimizer& o) {
            for (std::size_t k = 0; k < o.point.size(); ++k)
                if (std::fabs(o.point[k].first - mz.point[k].first) > 1e-7 ||
                    std::fabs(o.point[k].second - mz.point[k].second) > 1e-7)
                    return false;
            return true;
        });
        if (!dup) scan.minimizers.push_back(std::move(mz));
    }
    return scan;
}

std::string profile_csv(const MinimizerScan& scan) {
    std::ostringstream os;
    os.precision(17);
    os << "t,distance\n";
    for (const auto& [t, v] : scan.profile) os << t << ',' << v << '\n';
    return os.str();
}

} // namespace hqm::para
