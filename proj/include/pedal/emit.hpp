#pragma once

#include <string>

#include "pedal/curves.hpp"

namespace pedal {

std::string fmt17(double v);

// CSV columns r, phi, x, y
std::string path_csv(const PolarPath& path);

// CSV columns t, x, y, vx, vy, r, p, residual (residual blank without an equation)
std::string trajectory_csv(const Trajectory& tr, const PedalEquation* eq = nullptr);

// JSON schema "pedalcurve/1"
std::string path_json(const PolarPath& path);
std::string region_json(const RegionReport& rep);

// schematic SVG: one polyline per branch, pedal point marked at the origin
std::string path_svg(const PolarPath& path);

} // namespace pedal
