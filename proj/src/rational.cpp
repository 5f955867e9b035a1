#include "hqm/rational.hpp"

#include "hqm/errors.hpp"

#include <cctype>

namespace hqm {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw SyntaxError("empty rational literal", 0);
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw SyntaxError("mixed decimal and fraction", dot);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const auto frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") throw SyntaxError("malformed decimal", 0);
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const bool sign_ok = i == 0 && (digits[i] == '-' || digits[i] == '+');
            if (!sign_ok && !std::isdigit(static_cast<unsigned char>(digits[i])))
                throw SyntaxError("malformed decimal", i);
        }
        if (digits[0] == '+') digits.erase(0, 1);
        mpz_class num(digits, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (i == 0 && (c == '-' || c == '+'));
        if (!ok) throw SyntaxError("malformed rational '" + s + "'", i);
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw SyntaxError("malformed rational '" + s + "'", 0);
    if (r.get_den() == 0) throw SyntaxError("zero denominator", s.find('/'));
    r.canonicalize();
    return r;
}

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
    return Rng(seq);
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

} // namespace hqm
