#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pedal/chain.hpp"
#include "pedal/curves.hpp"

using namespace pedal;

TEST_CASE("polar ODE to chain: circle involute") {
    ConstTable ct{{"a", Coeff(3)}};
    ChainEquation ch = chain_from_polar_ode("ar1 = a", ct);
    CHECK(ch.max_index() == 1);
    // D1 - 3 = 0
    ChainEquation expect;
    expect.add_term({0, 1}, Coeff(1));
    expect.add_term({}, Coeff(-3));
    CHECK(ch.terms() == expect.terms());

    // its pedal is the spiral of Archimedes
    PedalEquation arch = polar_ode_to_pedal("ar1 = a", ct);
    PedalEquation expect_eq = parse_pedal_equation("r^4/p^2 = r^2 + a^2", ct);
    CHECK(PedalEquation::equivalent(arch, expect_eq));
}

TEST_CASE("polar ODE to pedal: logarithmic spiral") {
    // |r'| = k r with k = cos(alpha)/sin(alpha) gives p = |sin alpha| r,
    // i.e. (1 + k^2) p^2 = r^2
    ConstTable ct{{"k", rational(3, 4)}};
    PedalEquation e = polar_ode_to_pedal("ar1 = k*r", ct);
    PedalEquation expect = parse_pedal_equation("(1 + k^2)*p^2 = r^2", ct);
    CHECK(PedalEquation::equivalent(e, expect));
}

TEST_CASE("polar ODE: Kepler in inverted radial form") {
    // r'' + r = K is the circle-inverted Kepler equation; its chain curve,
    // first-integrated, is the circle r^2 = 2Kp + c
    ConstTable ct{{"K", Coeff(2)}};
    ChainEquation ch = chain_from_polar_ode("r2 + r = K", ct);
    CHECK(ch.max_index() == 2);
    ChainEquation integ = ch.first_integral(Coeff(5)); // D1^2 + D0^2 - 2K D0 - 5 = 0
    PrPoly pr = integ.to_pr();
    // r^2 - p^2 + p^2 - 2K p - 5 = r^2 - 2Kp - 5
    PedalEquation eq = pr.to_pedal();
    PedalEquation expect = parse_pedal_equation("r^2 = 2*K*p + 5", ct);
    CHECK(PedalEquation::equivalent(eq, expect));

    // pedal + inverse completes the conic construction
    PedalEquation conic = apply_transform(named_transform(Tag::I, {Coeff(1)}),
                                          pedal_transform(pr));
    PedalEquation kepler = parse_pedal_equation("1/p^2 = 2*K/r + 5", ct);
    CHECK(PedalEquation::equivalent(conic, kepler));
}

TEST_CASE("odd plain derivatives are rejected") {
    try {
        chain_from_polar_ode("r1 = 2");
        FAIL("expected OddFirstDerivative");
    } catch (const Error& e) {
        CHECK(e.kind() == "OddFirstDerivative");
    }
    CHECK_NOTHROW(chain_from_polar_ode("r1^2 = 4"));
    CHECK_NOTHROW(chain_from_polar_ode("ar1 = 2"));
}

TEST_CASE("evolute index shift") {
    ChainEquation involute; // D1 = a
    involute.add_term({0, 1}, Coeff(1));
    involute.add_term({}, rational(-3, 1));
    ChainEquation ev = involute.evolute(); // D0 = a
    ChainEquation expect;
    expect.add_term({1}, Coeff(1));
    expect.add_term({}, Coeff(-3));
    CHECK(ev.terms() == expect.terms());

    CHECK_THROWS_AS(ev.evolute(), Error); // bare D0 present now
    try {
        ev.evolute();
    } catch (const Error& e) {
        CHECK(e.kind() == "NotShiftable");
    }
}

TEST_CASE("inverse evolute and first integrals") {
    // E^{-1}(p_c = 0) -> p_c p_c' = 0 -> p_c = a
    ChainEquation circle_centered; // D1 = 0
    circle_centered.add_term({0, 1}, Coeff(1));
    ChainEquation ode = circle_centered.inverse_evolute(); // D2 = 0
    CHECK(ode.max_index() == 2);
    ChainEquation integ = ode.first_integral(Coeff(9)); // D1^2 = 9
    ChainEquation expect;
    expect.add_term({0, 2}, Coeff(1));
    expect.add_term({}, Coeff(-9));
    CHECK(integ.terms() == expect.terms());

    // E^{-1}(point) -> (p_c p_c')^2 + p_c^2 = a^2 -> p_c^2 + (p - C)^2 = a^2
    ChainEquation point; // D0^2 + D1^2 = a^2
    point.add_term({2}, Coeff(1));
    point.add_term({0, 2}, Coeff(1));
    point.add_term({}, Coeff(-25));
    ChainEquation ode2 = point.inverse_evolute();
    ChainEquation integ2 = ode2.first_integral(Coeff(4));
    // D1^2 + (D0 - 4)^2 = 25
    ChainEquation expect2;
    expect2.add_term({0, 2}, Coeff(1));
    expect2.add_term({2}, Coeff(1));
    expect2.add_term({1}, Coeff(-8));
    expect2.add_term({}, Coeff(16 - 25));
    CHECK(integ2.terms() == expect2.terms());
}

TEST_CASE("evolute undoes the inverse-evolute shift") {
    ChainEquation involute; // D1 = a
    involute.add_term({0, 1}, Coeff(1));
    involute.add_term({}, Coeff(-3));
    CHECK(involute.inverse_evolute().evolute().terms() == involute.terms());

    ChainEquation point; // D0^2 + D1^2 = a^2
    point.add_term({2}, Coeff(1));
    point.add_term({0, 2}, Coeff(1));
    point.add_term({}, Coeff(-25));
    CHECK(point.inverse_evolute().evolute().terms() == point.terms());

    // and the closed-form integral of E^{-1}(p_c = 0) at constant a^2
    // recovers the involute family p_c = a, whose evolute is p = a
    ChainEquation circle_centered; // D1 = 0
    circle_centered.add_term({0, 1}, Coeff(1));
    ChainEquation family = circle_centered.inverse_evolute().first_integral(Coeff(9));
    ChainEquation ev = family.evolute(); // D0^2 = 9
    ChainEquation expect;
    expect.add_term({2}, Coeff(1));
    expect.add_term({}, Coeff(-9));
    CHECK(ev.terms() == expect.terms());
}

TEST_CASE("anticatacaustic of a point is the conic family") {
    // point at distance a: D0^2 + D1^2 = a^2; constant c = 2R
    Coeff a = rational(3, 2), R = Coeff(2);
    ChainEquation point;
    point.add_term({2}, Coeff(1));
    point.add_term({0, 2}, Coeff(1));
    point.add_term({}, -(a * a));
    PedalEquation conic = anticatacaustic(point, Coeff(2) * R);
    // (R^2 - a^2/4)/p^2 = 2R/r - 1
    ConstTable ct{{"R", R}, {"a", a}};
    PedalEquation expect = parse_pedal_equation("(R^2 - a^2/4)/p^2 = 2*R/r - 1", ct);
    CHECK(PedalEquation::equivalent(conic, expect));
}

TEST_CASE("forward catacaustic checks the evolute hypothesis") {
    // the conic's pedal has a bare p after scaling: Proposition hypothesis fails
    ConstTable ct{{"R", Coeff(2)}, {"a", rational(3, 2)}};
    PedalEquation conic = parse_pedal_equation("(R^2 - a^2/4)/p^2 = 2*R/r - 1", ct);
    try {
        catacaustic(conic);
        FAIL("expected NotShiftable");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotShiftable");
    }
}

TEST_CASE("contrapedal of the circle involute is the point r = a") {
    ChainEquation involute; // D1 = a, a = 2
    involute.add_term({0, 1}, Coeff(1));
    involute.add_term({}, Coeff(-2));
    PedalEquation cp = contrapedal(involute);
    CHECK(cp.degree() == 0); // r - a = 0 does not constrain p
    // numeric: feet of normals of a sampled involute all sit at distance a
    double a = 2.0;
    for (int i = 1; i <= 200; ++i) {
        double t = 0.3 + (4.0 * M_PI - 0.3) * i / 201.0;
        Vec2 x{a * (std::cos(t) + t * std::sin(t)), a * (std::sin(t) - t * std::cos(t))};
        Vec2 tang{a * t * std::cos(t), a * t * std::sin(t)};
        Vec2 n = tang.perp();
        double nn = n.norm();
        Vec2 foot = x - (dot(x, n) / (nn * nn)) * n;
        CHECK(foot.norm() == doctest::Approx(a).epsilon(1e-9));
    }
}

TEST_CASE("chain scaling matches the textual S_alpha") {
    // S_2 on p_c^2 + (p - R)^2 = a^2: (2pc)^2 + (2p - R)^2 = a^2
    ChainEquation circ;
    circ.add_term({0, 2}, Coeff(1));
    circ.add_term({2}, Coeff(1));
    circ.add_term({1}, Coeff(-4)); // -2R p with R = 2
    circ.add_term({}, Coeff(4 - 9)); // R^2 - a^2 with a = 3
    ChainEquation scaled = circ.scaled_curve(Coeff(2));
    ChainEquation expect;
    expect.add_term({0, 2}, Coeff(4));
    expect.add_term({2}, Coeff(4));
    expect.add_term({1}, Coeff(-8));
    expect.add_term({}, Coeff(-5));
    CHECK(scaled.terms() == expect.terms());
}
