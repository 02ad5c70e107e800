#pragma once

#include <vector>

#include "pedal/power_sum.hpp"

namespace pedal {

struct IsolatedRoot {
    double value;
    double lo;          // enclosing interval
    double hi;
    int multiplicity;   // 1 for sign-change roots, 2 for detected tangencies
};

// sign variation of a coefficient list in order of increasing degree
// (zero entries skipped); exact on exact coefficients
int sign_variation(const std::vector<Coeff>& ascending);

// positive real roots of a polynomial given by ascending coefficients,
// found by derivative recursion (monotone bisection between critical points)
std::vector<IsolatedRoot> isolate_positive_roots(const std::vector<double>& ascending,
                                                 double tol = 1e-13);

// brute-force oracle: scan [0, hi] with n points for sign changes, bisect each
std::vector<double> scan_positive_roots(const std::vector<double>& ascending,
                                        double hi, int n);

double eval_poly(const std::vector<double>& ascending, double x);

// Cauchy-style upper bound on positive roots
double positive_root_bound(const std::vector<double>& ascending);

} // namespace pedal
