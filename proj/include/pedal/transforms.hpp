#pragma once

#include <string>
#include <vector>

#include "pedal/equation.hpp"

namespace pedal {

// r-substitution kinds closed under the catalog: identity, power c*r^gamma,
// Moebius a*r/(1-b*r), shift r-c. Moebius and shift require integer exponents
// and clear their denominators through the whole equation.
struct RMap {
    enum Kind { Identity, Power, Moebius, Shift } kind = Identity;
    Coeff c = Coeff(1);      // Power scale / Shift amount
    Rational gamma{1};       // Power exponent
    Coeff alpha = Coeff(1);  // Moebius numerator scale
    Coeff beta = Coeff(0);   // Moebius denominator coefficient

    static RMap identity() { return {}; }
    static RMap power(const Coeff& scale, const Rational& exponent) {
        RMap m; m.kind = Power; m.c = scale; m.gamma = exponent; return m;
    }
    static RMap moebius(const Coeff& a, const Coeff& b) {
        RMap m; m.kind = Moebius; m.alpha = a; m.beta = b; return m;
    }
    static RMap shift(const Coeff& s) {
        RMap m; m.kind = Shift; m.c = s; return m;
    }

    bool is_identity() const;
    RMap inverse() const;
    double eval(double r) const;

    // substitute into a power sum; result is num / base^dpow with base = den_base()
    PowerSum den_base() const;
    std::pair<PowerSum, int> substitute(const PowerSum& ps) const;

    // 1/f(r)^2 as a power sum (for the T_f rule)
    PowerSum inverse_square() const;
    // f'(r) r^2 / f(r)^2, the T_f integrand, evaluated numerically
    double tf_integrand(double r) const;
};

// q-substitution q -> (A(r) q + B(r)) / D(r), affine with PowerSum pieces
struct QMap {
    PowerSum A = PowerSum(Coeff(1));
    PowerSum B;
    PowerSum D = PowerSum(Coeff(1));
};

enum class Tag { S, I, M, H, Estar, A, B, F, Epar, P, Pinv, Dual, Tf, Pipeline };

std::string tag_name(Tag t);

// A composable substitution rule on pedal equations. For A and B the catalog
// lists the curve-level map; the stored q_map is the equation-level inverse
// (see README on transform semantics).
struct TransformSpec {
    Tag tag = Tag::S;
    std::vector<Coeff> params;
    RMap r_map;
    QMap q_map;
    RMap tf_f;   // Tf only: the function f
    std::vector<TransformSpec> pipeline;

    std::string str() const;
};

// the catalog: S(a), I(R), M(a), H(k), Estar(c), A(w), B(a), F(c), Epar(c),
// P, Pinv, Dual(R), Tf(f, k)
TransformSpec named_transform(Tag tag, const std::vector<Coeff>& params);
TransformSpec tf_transform_spec(const RMap& f, const Coeff& k);

// rightmost applied first, matching the paper's operator order
TransformSpec compose(std::vector<TransformSpec> list);

PedalEquation apply_transform(const TransformSpec& t, const PedalEquation& e);

// T_f rule (f power or Moebius): h(r, q) = 0 -> h(f(r), k^2 q - k^2/r^2 + 1/f^2) = 0
PedalEquation t_f_transform(const PedalEquation& e, const RMap& f, const Coeff& k);

// pedal curve of a pre-squared (p, r) equation: f(p, r) -> f(r, r^2/p)
PedalEquation pedal_transform(const PrPoly& e);
PedalEquation antipedal_transform(const PrPoly& e);

// curve-level action on (r, p) samples; inverse of the equation substitution,
// uniformly, so equation-level identities hold pointwise with the same params
struct RP {
    double r;
    double p;
};
std::vector<RP> apply_pointwise(const TransformSpec& t, const std::vector<RP>& samples);

// pipeline text: "H(2) * Estar(-0.5) * S(3)"; '*' composes, rightmost first
TransformSpec parse_pipeline(const std::string& text);

} // namespace pedal
