#pragma once

// Expression syntax for scalars and phase-space symbols.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*')? unary | '/' rational)*   juxtaposition multiplies: 3j, 2x p
//   unary  := '-' unary | factor
//   factor := atom ('^' uint)?
//   atom   := rational | 'i' | 'j' | 'x' | 'p' | NAME | '(' expr ')'
//
// Rationals are `n`, `n/d` or decimals. NAME is a built-in (currently `F0`,
// the oscillator ground-state Wigner function). An expression may use i or j
// but not both.

#include "hqm/errors.hpp"
#include "hqm/phasespace.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hqm::expr {

struct Ast {
    enum class Kind { Number, Unit, VarX, VarP, Builtin, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Number;
    Rational value;      // Number
    char unit = 0;       // Unit: 'i' or 'j'
    std::string name;    // Builtin
    unsigned exponent = 0;  // Pow
    std::size_t pos = 0;
    std::vector<Ast> kids;
};

/// Throws SyntaxError (with byte offset) or UnitMixError.
Ast parse(std::string_view text);

/// 'i', 'j' or 0 when the expression has no imaginary unit.
char unit_of(const Ast& a);

/// Polynomial in x, p; the ring follows the unit used (Real when none).
phase::PolySymbol to_poly(const Ast& a);

/// Polynomial times Gaussians: every summand must carry the same Gaussian.
phase::GaussPoly to_symbol(const Ast& a, const Rational& hbar);

/// Split-complex constant; rejects x, p, i and built-ins.
SplitComplex to_split(const Ast& a);
GaussComplex to_gauss(const Ast& a);

inline phase::PolySymbol parse_poly(std::string_view text) { return to_poly(parse(text)); }
inline SplitComplex parse_split(std::string_view text) { return to_split(parse(text)); }

} // namespace hqm::expr
