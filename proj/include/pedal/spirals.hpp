#pragma once

#include <string>

#include "pedal/curves.hpp"

namespace pedal {

struct JacobiValues {
    double sn;
    double cn;
    double dn;
};

// AGM / descending-Landen evaluation, |k| < 1, series fallback for tiny k
JacobiValues jacobi(double z, double k);
double elliptic_K(double k);

// sn with modulus on the unit circle: real-valued by construction,
// w'' = 2 w^3 - 2 cos(lambda) w with w(0) = 0, w'(0) = 1
double sn_star(double z, double lambda);
std::pair<double, double> sn_star_pair(double z, double lambda);

enum class SpiralFamily { Exp, Id, Sin, Sinh, Cosh, Sn, Cn, SnStar, Sc, Dn, Ds };

std::string family_name(SpiralFamily f);
SpiralFamily family_from_name(const std::string& name);

struct SpiralParams {
    SpiralFamily family = SpiralFamily::Sin;
    Rational alpha{1};
    Coeff l = Coeff(1);
    Coeff c = Coeff(1);
    Coeff k = Coeff(0); // modulus, or lambda for sn_star
    double phi0 = 0.0;
};

// the general elliptic-spiral equation 1/p^2 = a/r^2 + beta r^{2a-2} + gamma/r^{2a+2}
struct EllipticTriple {
    Coeff a;
    Coeff beta;
    Coeff gamma;
    Rational alpha{1};
};

PedalEquation triple_equation(const EllipticTriple& t);

// pedal equation of the f-spiral family r^alpha = (c/l) f(l alpha phi + phi0)
PedalEquation f_spiral_equation(const SpiralParams& sp);
EllipticTriple f_spiral_triple(const SpiralParams& sp);

// classification of the general equation; throws NoCurve where p > r everywhere
SpiralFamily classify_spiral(const EllipticTriple& t);

struct SnRecovery {
    double c;
    double l2;
    double k;
    // the paper prints l^2 = sqrt((1-a)^2 - 4 b g) + 1 - a; back-substitution
    // validates half that value, recorded here
    double paper_l2;
    bool halved_form_validates;
};

SnRecovery recover_sn_params(const EllipticTriple& t);

PolarPath sample_f_spiral(const SpiralParams& sp, double phi_lo, double phi_hi, int n);

} // namespace pedal
