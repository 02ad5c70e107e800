#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pedal/chain.hpp"
#include "pedal/mechanics.hpp"

namespace pedal {

// parametric curve; derivative optional (finite differences otherwise)
struct CurveSampler {
    std::function<Vec2(double)> position;
    std::function<Vec2(double)> derivative; // may be empty
    double t0 = 0.0;
    double t1 = 1.0;
};

struct CatalogEntry {
    std::string name;
    std::vector<Coeff> params;
    PedalEquation equation;
    std::optional<ChainEquation> chain; // for p_c-style entries
    std::optional<CurveSampler> sampler;
    double sampler_span = 1.0; // suggested parameter span actually stored in sampler
};

// line, point, circle_centered, circle_on, circle_offset, concentric,
// log_spiral, circle_involute, archimedes, spiral_family, conic_focus,
// sinusoidal, cassini_focus, cassini_center, cartesian_oval
CatalogEntry catalog(const std::string& name, const std::vector<Coeff>& params);

// (r, p) samples of a parametric curve about the pedal point O
std::vector<RP> curve_to_pedal_samples(const CurveSampler& s, int n, Vec2 O = {0, 0});

// implicit curve F(x, y) = 0 sampled by polar ray shooting; exact tangents via
// the gradient; returns (r, p) about the origin
struct ImplicitCurve {
    std::function<double(Vec2)> f;
    std::function<Vec2(Vec2)> grad;
    double rmax = 10.0;
};
std::vector<RP> implicit_pedal_samples(const ImplicitCurve& c, int rays);
std::vector<Vec2> implicit_points(const ImplicitCurve& c, int rays);

// reconstruct a polar curve from a pedal equation by integrating
// dphi = dr / (r sqrt(r^2 q(r) - 1)) with sqrt-substitution at apsides
struct ReconstructOptions {
    int points_per_branch = 600;
    int q_root = -1; // selector for degree > 1 equations
};
PolarPath pedal_to_polar(const PedalEquation& e, double r_start, double revolutions,
                         int branch, const ReconstructOptions& opt = {});

// analytic-tangent (r, p) samples of a reconstructed path (uses the stored
// dr/dphi when present, finite differences otherwise)
std::vector<RP> path_pedal_samples(const PolarPath& path);

// Cartesian points of a polar path
std::vector<Vec2> path_points(const PolarPath& path);

} // namespace pedal
