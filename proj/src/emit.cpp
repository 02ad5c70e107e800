#include "pedal/emit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace pedal {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string path_csv(const PolarPath& path) {
    if (path.points.empty()) fail("EmptyPath", "nothing to emit");
    std::ostringstream os;
    os << "r,phi,x,y\n";
    for (const auto& pt : path.points)
        os << fmt17(pt.r) << ',' << fmt17(pt.phi) << ','
           << fmt17(pt.r * std::cos(pt.phi)) << ',' << fmt17(pt.r * std::sin(pt.phi)) << '\n';
    return os.str();
}

std::string trajectory_csv(const Trajectory& tr, const PedalEquation* eq) {
    if (tr.samples.empty()) fail("EmptyPath", "nothing to emit");
    std::ostringstream os;
    os << "t,x,y,vx,vy,r,p,residual\n";
    for (std::size_t i = 0; i < tr.samples.size(); ++i) {
        const auto& s = tr.samples[i];
        double r = tr.r(i), p = tr.p(i);
        os << fmt17(s.t) << ',' << fmt17(s.x.x) << ',' << fmt17(s.x.y) << ','
           << fmt17(s.v.x) << ',' << fmt17(s.v.y) << ',' << fmt17(r) << ',' << fmt17(p) << ',';
        if (eq) os << fmt17(eq->residual(r, 1.0 / (p * p)));
        os << '\n';
    }
    return os.str();
}

std::string path_json(const PolarPath& path) {
    if (path.points.empty()) fail("EmptyPath", "nothing to emit");
    nlohmann::ordered_json j;
    j["schema"] = "pedalcurve/1";
    j["closed"] = path.closed;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& pt : path.points) pts.push_back({pt.r, pt.phi});
    j["points"] = std::move(pts);
    j["branch_marks"] = path.branch_marks;
    return j.dump(2) + "\n";
}

std::string region_json(const RegionReport& rep) {
    nlohmann::ordered_json j;
    j["schema"] = "pedalcurve/1";
    j["h"] = rep.h.str();
    j["nu"] = rep.nu;
    j["N"] = rep.N;
    auto roots = nlohmann::ordered_json::array();
    for (const auto& r : rep.roots)
        roots.push_back({{"r", r.value}, {"lo", r.lo}, {"hi", r.hi},
                         {"multiplicity", r.multiplicity}});
    j["roots"] = std::move(roots);
    auto iv = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : rep.admissible)
        iv.push_back({lo, std::isinf(hi) ? -1.0 : hi}); // -1 encodes an unbounded end
    j["intervals"] = std::move(iv);
    return j.dump(2) + "\n";
}

std::string path_svg(const PolarPath& path) {
    if (path.points.empty()) fail("EmptyPath", "nothing to emit");
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    std::vector<Vec2> pts = path_points(path);
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    double w = xmax - xmin, h = ymax - ymin;
    double pad = 0.05 * std::max({w, h, 1e-9});
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt17(xmin - pad) << ' ' << fmt17(-(ymax + pad)) << ' '
       << fmt17(w + 2 * pad) << ' ' << fmt17(h + 2 * pad) << "\">\n";
    // one polyline per branch
    std::vector<std::size_t> cuts = path.branch_marks;
    cuts.push_back(pts.size() - 1);
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
        if (cut <= start) { start = cut; continue; }
        os << "  <polyline data-closed=\"" << (path.closed ? "true" : "false")
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
           << fmt17(0.004 * std::max(w + 2 * pad, h + 2 * pad)) << "\" points=\"";
        for (std::size_t i = start; i <= cut; ++i) {
            if (i > start) os << ' ';
            os << fmt17(pts[i].x) << ',' << fmt17(-pts[i].y);
        }
        os << "\"/>\n";
        start = cut;
    }
    double mark = 0.01 * std::max(w + 2 * pad, h + 2 * pad);
    os << "  <circle cx=\"0\" cy=\"0\" r=\"" << fmt17(mark) << "\" fill=\"red\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace pedal
