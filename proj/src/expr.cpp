#include "hqm/expr.hpp"

#include <cctype>

namespace hqm::expr {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Ast run() {
        Ast a = expr();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return a;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    char unit_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool starts_atom() {
        skip();
        if (i_ >= s_.size()) return false;
        const auto c = static_cast<unsigned char>(s_[i_]);
        return std::isdigit(c) || c == '.' || std::isalpha(c) || c == '(';
    }

    static Ast node(Ast::Kind k, std::size_t pos, std::vector<Ast> kids = {}) {
        Ast a;
        a.kind = k;
        a.pos = pos;
        a.kids = std::move(kids);
        return a;
    }

    Ast expr() {
        Ast lhs = term();
        for (;;) {
            skip();
            if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) return lhs;
            const std::size_t pos = i_;
            const auto k = s_[i_] == '+' ? Ast::Kind::Add : Ast::Kind::Sub;
            ++i_;
            Ast rhs = term();
            std::vector<Ast> kids;
            kids.push_back(std::move(lhs));
            kids.push_back(std::move(rhs));
            lhs = node(k, pos, std::move(kids));
        }
    }

    Ast term() {
        Ast lhs = unary();
        for (;;) {
            const std::size_t pos = i_;
            if (peek('/')) {
                ++i_;
                skip();
                if (i_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.'))
                    fail("only division by a number is supported");
                Ast d = number();
                if (sgn(d.value) == 0) {
                    i_ = d.pos;
                    fail("division by zero");
                }
                d.value = 1 / d.value;
                std::vector<Ast> kids;
                kids.push_back(std::move(lhs));
                kids.push_back(std::move(d));
                lhs = node(Ast::Kind::Mul, pos, std::move(kids));
                continue;
            }
            if (peek('*')) {
                ++i_;
            } else if (!starts_atom()) {
                return lhs;
            }
            Ast rhs = unary();
            std::vector<Ast> kids;
            kids.push_back(std::move(lhs));
            kids.push_back(std::move(rhs));
            lhs = node(Ast::Kind::Mul, pos, std::move(kids));
        }
    }

    Ast unary() {
        if (peek('-')) {
            const std::size_t pos = i_++;
            std::vector<Ast> kids;
            kids.push_back(unary());
            return node(Ast::Kind::Neg, pos, std::move(kids));
        }
        return factor();
    }

    Ast factor() {
        Ast a = atom();
        if (!peek('^')) return a;
        const std::size_t pos = i_++;
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("exponent must be a nonnegative integer");
        if (i_ - start > 4) fail("exponent too large");
        Ast p = node(Ast::Kind::Pow, pos);
        p.exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
        p.kids.push_back(std::move(a));
        return p;
    }

    Ast atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const std::size_t pos = i_;
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Ast a = expr();
            if (!peek(')')) fail("expected ')'");
            ++i_;
            return a;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == 'x' || c == 'p') {
            ++i_;
            return node(c == 'x' ? Ast::Kind::VarX : Ast::Kind::VarP, pos);
        }
        if (c == 'i' || c == 'j') {
            if (unit_ != 0 && unit_ != c)
                throw UnitMixError("expression mixes the units i and j (position " + std::to_string(pos) + ")");
            unit_ = c;
            ++i_;
            Ast a = node(Ast::Kind::Unit, pos);
            a.unit = c;
            return a;
        }
        if (std::isupper(static_cast<unsigned char>(c))) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            Ast a = node(Ast::Kind::Builtin, pos);
            a.name = std::string(s_.substr(start, i_ - start));
            if (a.name != "F0") {
                i_ = start;
                fail("unknown name '" + a.name + "'");
            }
            return a;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Ast number() {
        const std::size_t start = i_;
        auto digits = [&] {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        };
        digits();
        if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == '/')) {
            ++i_;
            const std::size_t after = i_;
            digits();
            if (after == i_) fail("malformed number");
        }
        Ast a = node(Ast::Kind::Number, start);
        try {
            a.value = parse_rational(s_.substr(start, i_ - start));
        } catch (const SyntaxError&) {
            throw SyntaxError("malformed number", start);
        }
        return a;
    }
};

template <class T, class Leaf>
T eval(const Ast& a, const Leaf& leaf) {
    switch (a.kind) {
    case Ast::Kind::Neg: return eval<T>(a.kids[0], leaf) * Rational(-1);
    case Ast::Kind::Add: return eval<T>(a.kids[0], leaf) + eval<T>(a.kids[1], leaf);
    case Ast::Kind::Sub: return eval<T>(a.kids[0], leaf) + eval<T>(a.kids[1], leaf) * Rational(-1);
    case Ast::Kind::Mul: return eval<T>(a.kids[0], leaf) * eval<T>(a.kids[1], leaf);
    case Ast::Kind::Pow: {
        const T base = eval<T>(a.kids[0], leaf);
        Ast one;
        one.value = 1;
        T acc = leaf(one);
        for (unsigned k = 0; k < a.exponent; ++k) acc = acc * base;
        return acc;
    }
    default: return leaf(a);
    }
}

} // namespace

Ast parse(std::string_view text) { return Parser(text).run(); }

char unit_of(const Ast& a) {
    if (a.kind == Ast::Kind::Unit) return a.unit;
    for (const auto& k : a.kids)
        if (char u = unit_of(k)) return u;
    return 0;
}

phase::PolySymbol to_poly(const Ast& a) {
    using phase::PolySymbol;
    using phase::Ring;
    const char u = unit_of(a);
    const Ring ring = u == 'i' ? Ring::Complex : u == 'j' ? Ring::Split : Ring::Real;
    return eval<PolySymbol>(a, [ring](const Ast& n) {
        switch (n.kind) {
        case Ast::Kind::Number: return PolySymbol::constant(n.value, ring);
        case Ast::Kind::Unit: return PolySymbol::unit(ring);
        case Ast::Kind::VarX: return PolySymbol::x(ring);
        case Ast::Kind::VarP: return PolySymbol::p(ring);
        default: throw SyntaxError("'" + n.name + "' is not a polynomial", n.pos);
        }
    });
}

phase::GaussPoly to_symbol(const Ast& a, const Rational& hbar) {
    using phase::GaussPoly;
    using phase::PolySymbol;
    using phase::Ring;
    const char u = unit_of(a);
    const Ring ring = u == 'i' ? Ring::Complex : u == 'j' ? Ring::Split : Ring::Real;
    return eval<GaussPoly>(a, [ring, &hbar](const Ast& n) {
        switch (n.kind) {
        case Ast::Kind::Number: return GaussPoly::from_poly(PolySymbol::constant(n.value, ring), hbar);
        case Ast::Kind::Unit: return GaussPoly::from_poly(PolySymbol::unit(ring), hbar);
        case Ast::Kind::VarX: return GaussPoly::from_poly(PolySymbol::x(ring), hbar);
        case Ast::Kind::VarP: return GaussPoly::from_poly(PolySymbol::p(ring), hbar);
        default: {
            GaussPoly f = phase::wigner_ground_state(hbar);
            f.poly = f.poly.promoted(ring);
            return f;
        }
        }
    });
}

namespace {

template <class S>
S to_scalar(const Ast& a, char allowed) {
    return eval<S>(a, [allowed](const Ast& n) {
        switch (n.kind) {
        case Ast::Kind::Number: return S(n.value);
        case Ast::Kind::Unit:
            if (n.unit != allowed)
                throw UnitMixError(std::string("expected the unit ") + allowed + ", found " + n.unit);
            return S::unit();
        case Ast::Kind::Builtin: throw SyntaxError("'" + n.name + "' is not a scalar", n.pos);
        default: throw SyntaxError("a scalar cannot contain x or p", n.pos);
        }
    });
}

} // namespace

SplitComplex to_split(const Ast& a) { return to_scalar<SplitComplex>(a, 'j'); }
GaussComplex to_gauss(const Ast& a) { return to_scalar<GaussComplex>(a, 'i'); }

} // namespace hqm::expr
