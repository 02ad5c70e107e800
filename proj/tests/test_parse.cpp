#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pedal/parse.hpp"

using namespace pedal;

TEST_CASE("power sum literals") {
    PowerSum a = parse_power_sum("2/r - 1");
    CHECK(a.coeff(Rational(-1)) == Coeff(2));
    CHECK(a.coeff(Rational(0)) == Coeff(-1));
    CHECK(a.size() == 2);

    CHECK(parse_power_sum("r^2 + r^2").coeff(Rational(2)) == Coeff(2));

    PowerSum b = parse_power_sum("1/r^2 + 0.25/r^4");
    CHECK(b.coeff(Rational(-2)) == Coeff(1));
    CHECK(b.coeff(Rational(-4)) == rational(1, 4)); // decimal literals parse exactly
}

TEST_CASE("rational and scientific literals are exact") {
    CHECK(parse_power_sum("1/3").constant_value() == rational(1, 3));
    CHECK(parse_power_sum("2.5e-2").constant_value() == rational(1, 40));
    CHECK(parse_power_sum("r^(1/2)").coeff(Rational(1, 2)) == Coeff(1));
    CHECK(parse_power_sum("r^-2").coeff(Rational(-2)) == Coeff(1));
}

TEST_CASE("constants table") {
    ConstTable ct{{"a", rational(3, 2)}};
    PowerSum p = parse_power_sum("a^2*r - a", ct);
    CHECK(p.coeff(Rational(1)) == rational(9, 4));
    CHECK(p.coeff(Rational(0)) == rational(-3, 2));
    CHECK_THROWS_WITH_AS(parse_power_sum("b + 1"), doctest::Contains("unknown identifier"),
                         Error);
}

TEST_CASE("syntax errors carry position and expectation") {
    try {
        parse_power_sum("2 + * 3");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == "SyntaxError");
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_power_sum("(1 + r"), Error);
    try {
        parse_power_sum("r^n");
        FAIL("expected NonNumericExponent");
    } catch (const Error& e) {
        CHECK(e.kind() == "NonNumericExponent");
    }
}

TEST_CASE("pedal equation: Kepler form") {
    ConstTable ct{{"L", Coeff(2)}, {"M", Coeff(3)}, {"c", Coeff(-1)}};
    PedalEquation e = parse_pedal_equation("L^2/p^2 = 2*M/r + c", ct);
    CHECK(e.degree() == 1);
    // canonical: 4 r q - (6 - r)... i.e. N1 = 4r, N0 = r - 6
    PowerSum n1 = PowerSum::term(Rational(1), Coeff(4));
    PowerSum n0 = PowerSum::term(Rational(1), Coeff(1)) + PowerSum(Coeff(-6));
    CHECK(e == PedalEquation::linear(n1, n0));
}

TEST_CASE("pedal equation: odd p powers square on ingestion") {
    // 2Rp = r^2 + R^2 - a^2 squares to the circle-with-offset-pedal equation
    ConstTable ct{{"R", Coeff(2)}, {"a", rational(7, 10)}};
    PedalEquation e = parse_pedal_equation("2*R*p = r^2 + R^2 - a^2", ct);
    CHECK(e.degree() == 1);
    // (r^2 + 351/100)^2 q = 16
    PowerSum inner = PowerSum::term(Rational(2), Coeff(1)) + PowerSum(rational(351, 100));
    PedalEquation expect = PedalEquation::linear(inner * inner, PowerSum(Coeff(-16)));
    CHECK(e == expect);
}

TEST_CASE("pedal equation: concentric circles") {
    PedalEquation e = parse_pedal_equation("p = r");
    PedalEquation expect = PedalEquation::linear(PowerSum::term(Rational(2), Coeff(1)),
                                                 PowerSum(Coeff(-1)));
    CHECK(e == expect);
}

TEST_CASE("fractional p powers are not reducible") {
    try {
        parse_pedal_equation("p^(1/2) = r");
        FAIL("expected NotReducibleToQ");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotReducibleToQ");
    }
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(4321);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5), expn(-4, 4), nterm(1, 5);
    for (int i = 0; i < 200; ++i) {
        PowerSum p;
        int n = nterm(rng);
        for (int t = 0; t < n; ++t)
            p.add_term(Rational(expn(rng), den(rng)), Coeff(Rational(num(rng), den(rng))));
        p.normalize();
        PowerSum q = parse_power_sum(p.str());
        CHECK(q == p);
        CHECK(parse_power_sum(q.str()) == q);
    }
}

TEST_CASE("equation render uses the display normal form") {
    PedalEquation kepler = parse_pedal_equation("1/p^2 = 2/r - 1");
    CHECK(kepler.str() == "1/p^2 = 2/r - 1");
    PedalEquation arch = parse_pedal_equation("1/p^2 = 1/r^2 + 4/r^4");
    CHECK(arch.str() == "1/p^2 = 4/r^4 + 1/r^2");
}
