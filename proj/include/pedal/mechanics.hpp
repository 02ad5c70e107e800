#pragma once

#include <vector>

#include "pedal/equation.hpp"
#include "pedal/roots.hpp"
#include "pedal/transforms.hpp"

namespace pedal {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 perp() const { return {-y, x}; } // ccw rotation by +90 degrees
    double norm2() const { return x * x + y * y; }
    double norm() const;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
    friend double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
};

// Central potential F and Lorentz-like potential G, both power sums in s = r^2;
// the equation of motion is xdd = F'(|x|^2) x + 2 G'(|x|^2) xd_perp.
struct ForceSpec {
    PowerSum F;
    PowerSum G;

    Vec2 accel(Vec2 x, Vec2 v) const;
};

struct OrbitConstants {
    double L = 0.0; // x . v_perp + G(|x|^2)
    double c = 0.0; // |v|^2 - F(|x|^2)
};

struct TrajectorySample {
    double t;
    Vec2 x;
    Vec2 v;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    double tol = 0.0;
    long steps_accepted = 0;
    long steps_rejected = 0;

    double r(std::size_t i) const { return samples[i].x.norm(); }
    double p(std::size_t i) const; // |x . v_perp| / |v|
};

struct ResidualStats {
    double max_rel = 0.0;
    double rms = 0.0;
};

struct RegionReport {
    PowerSum h;                 // admissibility power sum, h(r) >= 0
    std::vector<Coeff> poly;    // ascending coefficients after r = u^m
    std::int64_t m = 1;         // exponent substitution r = u^m
    int nu = 0;                 // sign variation
    std::vector<IsolatedRoot> roots;                    // in r
    std::vector<std::pair<double, double>> admissible;  // (r_lo, r_hi], hi may be inf
    int N = 0;                  // positive real roots, with multiplicity

    bool contains(double r, double slack = 1e-9) const;
};

// Theorem 2: (L - G(r^2))^2 / p^2 = F(r^2) + c
PedalEquation force_to_pedal(const ForceSpec& fs, double L, double c);

OrbitConstants conserved_quantities(Vec2 x, Vec2 v, const ForceSpec& fs);

struct IntegrateOptions {
    int samples_per_rev = 512; // cap on polar-angle advance per accepted step
};

Trajectory integrate_orbit(const ForceSpec& fs, Vec2 x0, Vec2 v0, double t_end,
                           double tol, const IntegrateOptions& opt = {});

ResidualStats pedal_residual(const Trajectory& tr, const PedalEquation& e);

// region inequality (L - G(r^2))^2 / r^2 <= F(r^2) + c cleared to h(r) >= 0
RegionReport allowed_region(const PedalEquation& e);

struct PolarSample {
    double r;
    double phi;
};

struct PolarPath {
    std::vector<PolarSample> points;
    std::vector<double> drdphi;            // optional analytic dr/dphi per point
    std::vector<std::size_t> branch_marks; // indices where dr/dphi flips sign
    bool closed = false;

    std::vector<RP> rp_samples() const; // (r, p) pairs by finite differences
};

// numeric Theorem-1 map: the pointwise realization of t_f_transform(e; f, k)
// (printed integral map applied with (f^{-1}, 1/k); see README)
PolarPath transform_trajectory(const Trajectory& tr, const RMap& f, double k);

// numeric rotating-frame map paired with apply_transform(A_w):
// phi~ = phi - w * integral r^2 dphi (invert=false), + for the inverse
PolarPath rotate_frame(const Trajectory& tr, double w, bool invert = false);
PolarPath rotate_frame(const PolarPath& path, double w, bool invert = false);

// rho = r dr/dp by implicit differentiation; +inf for r-free equations
double curvature_radius(const PedalEquation& e, double r);

// continuous polar angles along a trajectory (unwrapped)
std::vector<double> unwrap_angles(const Trajectory& tr);

// cumulative quadrature of samples (xs, ys) by local parabolic fits
std::vector<double> cumulative_quadrature(const std::vector<double>& xs,
                                          const std::vector<double>& ys);

} // namespace pedal
