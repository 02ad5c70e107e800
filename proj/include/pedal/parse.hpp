#pragma once

#include <map>
#include <memory>
#include <string>

#include "pedal/equation.hpp"

namespace pedal {

// grammar:
//   equation := expr "=" expr
//   expr     := ("-")? term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := base ("^" signed_rational)?
//   base     := "r" | "p" | number | ident | "(" expr ")"
//   signed_rational := ("-")? int ("/" int)?   (parens around it accepted)
// idents resolve from a caller-supplied constant table.

struct Ast {
    enum Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow } kind;
    Rational value;                  // Number / Pow exponent
    std::string name;                // Ident
    std::size_t pos = 0;             // source position, for diagnostics
    std::shared_ptr<Ast> lhs, rhs;   // operands (Pow uses lhs only)
};

using AstPtr = std::shared_ptr<Ast>;

// parse a single expression (no '='); throws SyntaxError
AstPtr parse_expression(const std::string& text);
// parse "lhs = rhs"; returns Sub(lhs, rhs)
AstPtr parse_equation_ast(const std::string& text);

using ConstTable = std::map<std::string, Coeff>;

// rational function of (p, r): the closed class the parser evaluates into
struct PrRat {
    PrPoly num;
    PrPoly den; // always nonzero

    PrRat() : num(), den(PowerSum(Coeff(1))) {}
    explicit PrRat(PrPoly n) : num(std::move(n)), den(PowerSum(Coeff(1))) {}
};

PrRat eval_pr(const AstPtr& ast, const ConstTable& constants,
              const std::string& radial_var = "r");

// text -> normalized PowerSum in `radial_var`; exact for rational literals
PowerSum parse_power_sum(const std::string& text, const ConstTable& constants = {},
                         const std::string& radial_var = "r");

// text "lhs = rhs" over (r, p) -> canonical pedal equation (odd p powers squared away)
PedalEquation parse_pedal_equation(const std::string& text, const ConstTable& constants = {});

// same but stopping at the pre-squared (p, r) polynomial form
PrPoly parse_pr_equation(const std::string& text, const ConstTable& constants = {});

} // namespace pedal
