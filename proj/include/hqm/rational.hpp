#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace hqm {

using Rational = mpq_class;
using Rng = std::mt19937_64;

/// `n` or `n/d` in lowest terms.
std::string to_string(const Rational& q);

/// Accepts `n`, `n/d` and plain decimals such as `-2.75`.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }
inline Rational conj(const Rational& q) { return q; }
inline Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

/// Independent generator for sample `index` of a sweep seeded with `seed`.
/// Sweeps derive one stream per sample so results do not depend on scheduling.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform rational num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, int max_num = 8, int max_den = 8);

} // namespace hqm
