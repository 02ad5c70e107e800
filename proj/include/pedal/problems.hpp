#pragma once

#include "pedal/spirals.hpp"

namespace pedal {

// relativistic Kepler: 1/p^2 = d + r_s/(a^2 r) + r_s/r^3, d = 1/b^2 - 1/a^2
struct SchwarzschildParams {
    Coeff r_s;
    Coeff a;
    Coeff b;

    Coeff d() const; // recomputed, never stored
};

struct SchwarzschildResult {
    PedalEquation equation;
    RegionReport region;
};

SchwarzschildResult schwarzschild_equation(const SchwarzschildParams& sp);

struct SchwarzschildReduction {
    double gamma;            // smallest-magnitude real root of the tilde cubic
    PedalEquation reduced;   // 1/p^2 = b~/r + d~/r^2 + r_s/r^3
    EllipticTriple triple;   // the alpha = 1/2 elliptic-spiral triple
    SpiralFamily family;
};

SchwarzschildReduction schwarzschild_reduce(const SchwarzschildParams& sp);

// dark Kepler: L^2/p^2 = 2M/r + 2Fr - w^2 r^2 + c
struct DarkParams {
    Coeff M = Coeff(0);
    Coeff F = Coeff(0);
    Coeff omega2 = Coeff(0); // w^2; the sign of w is fixed <= 0 at solve time
    Coeff L = Coeff(0);
    Coeff c = Coeff(0);
};

PedalEquation dark_equation(const DarkParams& dp);
PedalEquation dark_rotating(const DarkParams& dp);

struct OvalParams {
    double alpha2;
    double C;
    double b2;
    double mu;
    bool conic_degenerate = false; // the F = w = 0 Kepler branch (alpha = +-1)
};

// residuals of the five matching equations, largest relative
double oval_match_residual(const DarkParams& dp, const OvalParams& ov);

OvalParams oval_match(const DarkParams& dp);

DarkParams dark_shift_params(const Coeff& alpha, const DarkParams& dp);

// alpha such that the shifted parameters satisfy F~^2 L~^2 = w~^2 M~^2
double dark_reduce(const DarkParams& dp);

// the eliminated mu-quadratic (ascending coefficients), derived symbolically
// from the five matching equations
std::vector<Coeff> dark_mu_quadratic(const DarkParams& dp);

// F~^2 L~^2 - w~^2 M~^2 as a polynomial in alpha (ascending); degree <= 3
// because the alpha^6, alpha^5, alpha^4 coefficients cancel identically
std::vector<Coeff> dark_reduce_polynomial(const DarkParams& dp);

} // namespace pedal
