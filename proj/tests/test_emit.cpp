#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "pedal/emit.hpp"
#include "pedal/parse.hpp"

using namespace pedal;

namespace {

PolarPath three_points() {
    PolarPath p;
    p.points = {{1.0, 0.0}, {1.5, 0.5}, {2.0, 1.0}};
    return p;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("csv: header plus one row per point") {
    std::string csv = path_csv(three_points());
    CHECK(count_lines(csv) == 4);
    CHECK(csv.substr(0, 12) == "r,phi,x,y\n1,");
    CHECK_THROWS_AS(path_csv(PolarPath{}), Error);
}

TEST_CASE("csv is deterministic") {
    CHECK(path_csv(three_points()) == path_csv(three_points()));
}

TEST_CASE("json carries the schema version") {
    std::string j = path_json(three_points());
    CHECK(j.find("\"schema\": \"pedalcurve/1\"") != std::string::npos);
    CHECK(j.find("\"points\"") != std::string::npos);
}

TEST_CASE("region report json") {
    PedalEquation kepler = parse_pedal_equation("1/p^2 = 2/r - 1/2");
    RegionReport rep = allowed_region(kepler);
    std::string j = region_json(rep);
    CHECK(j.find("\"nu\"") != std::string::npos);
    CHECK(j.find("\"N\"") != std::string::npos);
    CHECK(j.find("\"intervals\"") != std::string::npos);
}

TEST_CASE("svg: closed path marks the polyline, origin marked") {
    PedalEquation kepler = parse_pedal_equation("1/p^2 = 2/r - 1/2");
    PolarPath ellipse = pedal_to_polar(kepler, 1.0, 1.0, +1);
    REQUIRE(ellipse.closed);
    std::string svg = path_svg(ellipse);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("viewBox") != std::string::npos);
    CHECK(svg.find("data-closed=\"true\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"0\" cy=\"0\"") != std::string::npos);

    std::string open_svg = path_svg(three_points());
    CHECK(open_svg.find("data-closed=\"false\"") != std::string::npos);
}

TEST_CASE("trajectory csv columns") {
    ForceSpec fs;
    fs.F = PowerSum::term(Rational(-1, 2), Coeff(2));
    Trajectory tr = integrate_orbit(fs, {1, 0}, {0, 1.1}, 3.0, 1e-9);
    PedalEquation e = parse_pedal_equation("1/p^2 = 2/r - 0.79");
    std::string csv = trajectory_csv(tr, &e);
    CHECK(csv.substr(0, 25) == "t,x,y,vx,vy,r,p,residual\n");
    CHECK(count_lines(csv) == tr.samples.size() + 1);
}

TEST_CASE("17 significant digits survive a round trip") {
    double v = 0.12345678901234567;
    CHECK(std::stod(fmt17(v)) == v);
    CHECK(fmt17(1.0) == "1");
}
