#include "hqm/univariate.hpp"

#include <algorithm>

namespace hqm {

namespace {

Rational floor_q(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(f);
}

// Rational with the smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
    if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
    const Rational fl = floor_q(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    const Rational inner = simplest_between(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
    return fl + 1 / inner;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    if (p.is_zero()) return chain;
    UPoly sq = quotient(p, gcd(p, derivative(p)));
    chain.push_back(sq);
    chain.push_back(derivative(sq));
    while (!chain.back().is_zero()) {
        UPoly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r.coeffs) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<UPoly>& chain, const Rational& t) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sgn(p(t)));
    return variations(s);
}

int variations_at_infinity(const std::vector<UPoly>& chain, bool positive) {
    std::vector<int> s;
    for (const auto& p : chain) {
        if (p.is_zero()) continue;
        int lead = sgn(p.coeffs.back());
        if (!positive && p.degree() % 2 == 1) lead = -lead;
        s.push_back(lead);
    }
    return variations(s);
}

Rational root_bound(const UPoly& p) {
    Rational m = 0;
    const Rational& lead = p.coeffs.back();
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs_value(Rational(p.coeffs[k] / lead));
        if (r > m) m = r;
    }
    return m + 1;
}

} // namespace

void UPoly::trim() {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t k = 1; k < p.coeffs.size(); ++k) d.coeffs.push_back(p.coeffs[k] * static_cast<long>(k));
    d.trim();
    return d;
}

namespace {

std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& q) {
    if (q.is_zero()) throw Error("polynomial division by zero");
    UPoly r = p;
    UPoly quo;
    const int dq = q.degree();
    if (r.degree() >= dq) quo.coeffs.assign(r.degree() - dq + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= dq) {
        const int shift = r.degree() - dq;
        const Rational f = r.coeffs.back() / q.coeffs.back();
        quo.coeffs[shift] = f;
        for (int k = 0; k <= dq; ++k) r.coeffs[k + shift] -= f * q.coeffs[k];
        r.coeffs.pop_back();
        r.trim();
    }
    quo.trim();
    return {quo, r};
}

} // namespace

UPoly remainder(const UPoly& p, const UPoly& q) { return divmod(p, q).second; }
UPoly quotient(const UPoly& p, const UPoly& q) { return divmod(p, q).first; }

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const Rational lead = a.coeffs.back();
        for (auto& c : a.coeffs) c /= lead;
    }
    return a;
}

UPoly characteristic_polynomial(const RMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RMatrix m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -(a * m).trace() / static_cast<long>(k);
    }
    UPoly p{std::move(c)};
    p.trim();
    return p;
}

double RealRoot::approx() const {
    if (exact) return exact->get_d();
    return Rational((lo + hi) / 2).get_d();
}

int count_real_roots(const UPoly& p) {
    if (p.degree() < 1) return 0;
    const auto chain = sturm_chain(p);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::vector<RealRoot> real_roots(const UPoly& p, int precision_bits) {
    std::vector<RealRoot> roots;
    if (p.degree() < 1) return roots;
    const auto chain = sturm_chain(p);
    const UPoly& sq = chain.front();
    Rational eps = 1;
    mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), precision_bits);

    const Rational bound = root_bound(sq);
    struct Interval {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Interval> stack;
    stack.push_back({-bound, bound, variations_at(chain, -bound), variations_at(chain, bound)});
    while (!stack.empty()) {
        Interval iv = std::move(stack.back());
        stack.pop_back();
        const int count = iv.vlo - iv.vhi;
        if (count <= 0) continue;
        if (count == 1 && iv.hi - iv.lo < eps) {
            RealRoot r{iv.lo, iv.hi, std::nullopt};
            const Rational cand = simplest_between(iv.lo, iv.hi);
            if (sgn(sq(cand)) == 0) r.exact = cand;
            roots.push_back(std::move(r));
            continue;
        }
        const Rational width = iv.hi - iv.lo;
        Rational mid = (iv.lo + iv.hi) / 2;
        if (sgn(sq(mid)) == 0) {
            if (count == 1) {
                roots.push_back({mid, mid, mid});
                continue;
            }
            Rational step = width;
            mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), 20);
            while (sgn(sq(mid)) == 0) mid += step;
        }
        const int vmid = variations_at(chain, mid);
        stack.push_back({mid, iv.hi, vmid, iv.vhi});
        stack.push_back({iv.lo, mid, iv.vlo, vmid});
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
    return roots;
}

} // namespace hqm
