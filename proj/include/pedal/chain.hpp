#pragma once

#include <map>
#include <string>
#include <vector>

#include "pedal/parse.hpp"

namespace pedal {

// Polynomial over the derivative-chain symbols D_k = (p_c d/dp)^k p, so
// D_0 = p and D_1 = p_c. Monomials are exponent vectors indexed by k.
class ChainEquation {
public:
    using Mono = std::vector<int>;
    using Terms = std::map<Mono, Coeff>;

    ChainEquation() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Mono m, const Coeff& c);

    friend ChainEquation operator-(const ChainEquation& a);
    friend ChainEquation operator+(const ChainEquation& a, const ChainEquation& b);
    friend ChainEquation operator-(const ChainEquation& a, const ChainEquation& b);
    friend ChainEquation operator*(const ChainEquation& a, const ChainEquation& b);
    ChainEquation pow_int(unsigned n) const;

    int max_index() const;          // largest k with D_k present
    bool uses(int k) const;

    // evolute: D_k -> D_{k-1}; requires no bare D_0 (Proposition hypothesis)
    ChainEquation evolute() const;
    // inverse evolute: D_k -> D_{k+1} (always defined; yields the ODE)
    ChainEquation inverse_evolute() const;

    // closed-form first integral of the two worked patterns, introducing the
    // integration constant `c`:
    //   D_{k+1} = s            ->  D_k^2 = 2 s D_{k-1} + c      (k >= 1)
    //   D_{k+1}^2 + D_k^2 = s  ->  D_k^2 + (D_{k-1} - c)^2 = s
    // throws NotShiftable when the equation matches neither
    ChainEquation first_integral(const Coeff& c) const;

    // textual scaling S_alpha: D_k <- alpha D_k
    ChainEquation scaled_curve(const Coeff& alpha) const;

    // rewrite in (p, r): D_0 -> p, D_1^2 -> r^2 - p^2 (odd D_1 powers squared
    // away); requires max index <= 1
    PrPoly to_pr() const;

    // residual at a sample with numerically estimated derivatives:
    // values[k] = D_k at the sample
    double eval(const std::vector<double>& values) const;

    std::string str() const;

private:
    Terms terms_;
};

// Proposition 3.1: an autonomous polar ODE f(r, |r'|, r'', ...) = 0 is the
// pedal of the chain curve f(D_0, D_1, D_2, ...) = 0. Identifiers: r, and
// r1..r9 for plain derivatives (odd orders must appear to even powers, else
// OddFirstDerivative) or ar1, ar3, ... for the absolute odd derivatives.
ChainEquation chain_from_polar_ode(const std::string& ode_text,
                                   const ConstTable& constants = {});

// pedal equation of the ODE's solution curve: P applied to the chain curve
PedalEquation polar_ode_to_pedal(const std::string& ode_text,
                                 const ConstTable& constants = {});

// contrapedal P_c = P . E
PedalEquation contrapedal(const ChainEquation& c);

// catacaustic C = E . S_{1/2} . P of a curve given by a pedal equation;
// requires the post-pedal equation to be chain-expressible (even r-powers)
// and to satisfy the evolute hypothesis
ChainEquation catacaustic(const PedalEquation& e);

// anticatacaustic C^{-1} = P^{-1} S_2 E^{-1} with closed-form first integral;
// `c` is the integration constant (the paper's 2R)
PedalEquation anticatacaustic(const ChainEquation& chain, const Coeff& c);

// chain form of a pedal equation: p = D_0, r^2 = D_0^2 + D_1^2;
// requires even r-powers
ChainEquation chain_from_pedal(const PedalEquation& e);

} // namespace pedal
