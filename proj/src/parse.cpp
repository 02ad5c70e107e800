#include "pedal/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace pedal {
namespace {

struct Lexer {
    const std::string& s;
    std::size_t at = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (at < s.size() && std::isspace((unsigned char)s[at])) ++at;
    }
    char peek() {
        skip_ws();
        return at < s.size() ? s[at] : '\0';
    }
    char get() {
        char c = peek();
        if (at < s.size()) ++at;
        return c;
    }
    [[noreturn]] void error(const std::string& expected) {
        fail("SyntaxError", "at position " + std::to_string(at) + ": expected " + expected);
    }
};

AstPtr make(Ast::Kind k) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    return a;
}

Rational parse_int(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.at;
    while (lx.at < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.at])) ++lx.at;
    if (lx.at == start) lx.error("integer");
    return Rational(std::strtoll(lx.s.substr(start, lx.at - start).c_str(), nullptr, 10));
}

// number := digits [ "." digits ] [ ("e"|"E") ("+"|"-")? digits ]; exact rational
Rational parse_number(Lexer& lx) {
    Rational whole = parse_int(lx);
    Rational out = whole;
    if (lx.at < lx.s.size() && lx.s[lx.at] == '.') {
        ++lx.at;
        std::size_t start = lx.at;
        while (lx.at < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.at])) ++lx.at;
        if (lx.at == start) lx.error("digits after decimal point");
        std::string frac = lx.s.substr(start, lx.at - start);
        Rational scale(1);
        for (std::size_t i = 0; i < frac.size(); ++i) scale = scale * Rational(10);
        out = out + Rational(std::strtoll(frac.c_str(), nullptr, 10)) / scale;
    }
    if (lx.at < lx.s.size() && (lx.s[lx.at] == 'e' || lx.s[lx.at] == 'E')) {
        ++lx.at;
        bool neg = false;
        if (lx.at < lx.s.size() && (lx.s[lx.at] == '+' || lx.s[lx.at] == '-')) {
            neg = lx.s[lx.at] == '-';
            ++lx.at;
        }
        Rational exp = parse_int(lx);
        Rational scale = Rational(10).pow_int(exp.num());
        out = neg ? out / scale : out * scale;
    }
    return out;
}

// a bare exponent is a signed integer; fractional exponents take parentheses
// ("r^(1/2)") so that "L^2/p^2" keeps its term-level division
Rational parse_signed_rational(Lexer& lx) {
    bool parens = false;
    if (lx.peek() == '(') { lx.get(); parens = true; }
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    if (!std::isdigit((unsigned char)lx.peek()))
        fail("NonNumericExponent", "at position " + std::to_string(lx.at) +
             ": exponent must be a rational literal");
    Rational num = parse_int(lx);
    Rational out = num;
    if (parens && lx.peek() == '/') {
        lx.get();
        Rational den = parse_int(lx);
        out = num / den;
    }
    if (neg) out = -out;
    if (parens) {
        if (lx.peek() != ')') lx.error("')' closing exponent");
        lx.get();
    }
    return out;
}

AstPtr parse_expr(Lexer& lx);

AstPtr parse_base(Lexer& lx) {
    char c = lx.peek();
    std::size_t pos = lx.at;
    if (c == '(') {
        lx.get();
        AstPtr e = parse_expr(lx);
        if (lx.peek() != ')') lx.error("')'");
        lx.get();
        return e;
    }
    if (std::isdigit((unsigned char)c)) {
        auto a = make(Ast::Number);
        a->pos = pos;
        a->value = parse_number(lx);
        return a;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
        std::size_t start = lx.at;
        while (lx.at < lx.s.size() &&
               (std::isalnum((unsigned char)lx.s[lx.at]) || lx.s[lx.at] == '_'))
            ++lx.at;
        auto a = make(Ast::Ident);
        a->pos = pos;
        a->name = lx.s.substr(start, lx.at - start);
        return a;
    }
    lx.error("'r', 'p', a number, an identifier or '('");
}

AstPtr parse_factor(Lexer& lx) {
    AstPtr base = parse_base(lx);
    if (lx.peek() == '^') {
        lx.get();
        auto a = make(Ast::Pow);
        a->pos = lx.at;
        a->value = parse_signed_rational(lx);
        a->lhs = base;
        return a;
    }
    return base;
}

AstPtr parse_term(Lexer& lx) {
    AstPtr lhs = parse_factor(lx);
    for (;;) {
        char c = lx.peek();
        if (c != '*' && c != '/') return lhs;
        lx.get();
        auto a = make(c == '*' ? Ast::Mul : Ast::Div);
        a->lhs = lhs;
        a->rhs = parse_factor(lx);
        lhs = a;
    }
}

AstPtr parse_expr(Lexer& lx) {
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    AstPtr lhs = parse_term(lx);
    if (neg) {
        auto a = make(Ast::Neg);
        a->lhs = lhs;
        lhs = a;
    }
    for (;;) {
        char c = lx.peek();
        if (c != '+' && c != '-') return lhs;
        lx.get();
        auto a = make(c == '+' ? Ast::Add : Ast::Sub);
        a->lhs = lhs;
        a->rhs = parse_term(lx);
        lhs = a;
    }
}

bool is_monomial(const PrPoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->second.size() == 1;
}

PrRat pr_mul(const PrRat& a, const PrRat& b) {
    PrRat out;
    out.num = a.num * b.num;
    out.den = a.den * b.den;
    return out;
}

PrRat pr_div(const PrRat& a, const PrRat& b) {
    if (b.num.is_zero()) fail("DomainError", "division by zero expression");
    PrRat out;
    out.num = a.num * b.den;
    out.den = a.den * b.num;
    return out;
}

PrRat pr_add(const PrRat& a, const PrRat& b, bool sub) {
    PrRat out;
    PrPoly rn = sub ? a.num * b.den - b.num * a.den : a.num * b.den + b.num * a.den;
    out.num = std::move(rn);
    out.den = a.den * b.den;
    return out;
}

// fractional powers apply only to monomials c * p^a * r^e
PrRat pr_pow(const PrRat& a, const Rational& e, std::size_t pos) {
    if (e.is_integer()) {
        long n = e.num();
        PrRat out;
        if (n >= 0) {
            out.num = a.num.pow_int((unsigned)n);
            out.den = a.den.pow_int((unsigned)n);
        } else {
            if (a.num.is_zero()) fail("DomainError", "0 raised to a negative power");
            out.num = a.den.pow_int((unsigned)(-n));
            out.den = a.num.pow_int((unsigned)(-n));
        }
        return out;
    }
    if (!is_monomial(a.num) || !is_monomial(a.den))
        fail("SyntaxError", "at position " + std::to_string(pos) +
             ": fractional power of a non-monomial expression");
    auto mono_pow = [&](const PrPoly& m) {
        int pexp = m.terms().begin()->first;
        const auto& [rexp, c] = *m.terms().begin()->second.terms().begin();
        Rational pe = Rational(pexp) * e;
        if (!pe.is_integer())
            fail("NotReducibleToQ", "fractional power of p is outside the representable class");
        PrPoly out;
        out.add_term((int)pe.num(), PowerSum::term(rexp * e, c.pow_rational(e)));
        return out;
    };
    PrRat out;
    out.num = mono_pow(a.num);
    out.den = mono_pow(a.den);
    return out;
}

PrRat eval_node(const AstPtr& a, const ConstTable& constants, const std::string& radial) {
    switch (a->kind) {
    case Ast::Number:
        return PrRat(PrPoly(PowerSum(Coeff(a->value))));
    case Ast::Ident: {
        if (a->name == radial)
            return PrRat(PrPoly(PowerSum::term(Rational(1), Coeff(1))));
        if (a->name == "p")
            return PrRat(PrPoly::p_power(1));
        auto it = constants.find(a->name);
        if (it == constants.end())
            fail("SyntaxError", "at position " + std::to_string(a->pos) +
                 ": unknown identifier '" + a->name + "'");
        return PrRat(PrPoly(PowerSum(it->second)));
    }
    case Ast::Add: return pr_add(eval_node(a->lhs, constants, radial),
                                 eval_node(a->rhs, constants, radial), false);
    case Ast::Sub: return pr_add(eval_node(a->lhs, constants, radial),
                                 eval_node(a->rhs, constants, radial), true);
    case Ast::Mul: return pr_mul(eval_node(a->lhs, constants, radial),
                                 eval_node(a->rhs, constants, radial));
    case Ast::Div: return pr_div(eval_node(a->lhs, constants, radial),
                                 eval_node(a->rhs, constants, radial));
    case Ast::Neg: {
        PrRat v = eval_node(a->lhs, constants, radial);
        v.num = -v.num;
        return v;
    }
    case Ast::Pow: return pr_pow(eval_node(a->lhs, constants, radial), a->value, a->pos);
    }
    fail("SyntaxError", "corrupt expression tree");
}

} // namespace

AstPtr parse_expression(const std::string& text) {
    Lexer lx(text);
    AstPtr e = parse_expr(lx);
    if (lx.peek() != '\0') lx.error("end of input");
    return e;
}

AstPtr parse_equation_ast(const std::string& text) {
    Lexer lx(text);
    AstPtr lhs = parse_expr(lx);
    if (lx.peek() != '=') lx.error("'='");
    lx.get();
    AstPtr rhs = parse_expr(lx);
    if (lx.peek() != '\0') lx.error("end of input");
    auto a = make(Ast::Sub);
    a->lhs = lhs;
    a->rhs = rhs;
    return a;
}

PrRat eval_pr(const AstPtr& ast, const ConstTable& constants, const std::string& radial) {
    return eval_node(ast, constants, radial);
}

PowerSum parse_power_sum(const std::string& text, const ConstTable& constants,
                         const std::string& radial) {
    PrRat v = eval_pr(parse_expression(text), constants, radial);
    auto no_p = [](const PrPoly& poly) {
        for (const auto& [k, ps] : poly.terms())
            if (k != 0) return false;
        return true;
    };
    if (!no_p(v.num) || !no_p(v.den))
        fail("SyntaxError", "'p' is not allowed in a power sum");
    if (!is_monomial(v.den))
        fail("SyntaxError", "non-monomial denominator does not reduce to a power sum");
    const auto& [dexp, dcoef] = *v.den.terms().begin()->second.terms().begin();
    PowerSum out;
    for (const auto& [k, ps] : v.num.terms())
        out = out + ps.shifted(-dexp, Coeff(1) / dcoef);
    out.normalize();
    return out;
}

PrPoly parse_pr_equation(const std::string& text, const ConstTable& constants) {
    PrRat v = eval_pr(parse_equation_ast(text), constants, "r");
    return v.num; // equation equals zero: denominator clears
}

PedalEquation parse_pedal_equation(const std::string& text, const ConstTable& constants) {
    return parse_pr_equation(text, constants).to_pedal();
}

} // namespace pedal
