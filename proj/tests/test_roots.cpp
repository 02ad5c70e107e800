#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pedal/roots.hpp"

using namespace pedal;

TEST_CASE("sign variation") {
    // Schwarzschild coefficient list (r_s, -1, r_s/a^2, d)
    CHECK(sign_variation({rational(1, 10), Coeff(-1), rational(2, 5), Coeff(1)}) == 2);
    CHECK(sign_variation({rational(1, 10), Coeff(-1), rational(2, 5), Coeff(-1)}) == 3);
    CHECK(sign_variation({Coeff(1), Coeff(0), Coeff(1)}) == 0);
    CHECK(sign_variation({Coeff(-1), Coeff(0), Coeff(1)}) == 1);
}

TEST_CASE("isolation on known polynomials") {
    // (x - 1)(x - 3) = 3 - 4x + x^2
    auto r = isolate_positive_roots({3, -4, 1});
    REQUIRE(r.size() == 2);
    CHECK(r[0].value == doctest::Approx(1.0));
    CHECK(r[1].value == doctest::Approx(3.0));

    // (x - 2)^2 (x + 1): tangency at 2
    auto t = isolate_positive_roots({4, 0, -3, 1});
    REQUIRE(t.size() == 1);
    CHECK(t[0].value == doctest::Approx(2.0));
    CHECK(t[0].multiplicity == 2);

    // no positive roots
    CHECK(isolate_positive_roots({1, 2, 3}).empty());
}

TEST_CASE("random agreement with the brute-force scan") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> poly(5);
        for (auto& c : poly) c = coef(rng);
        if (poly.back() == 0.0) poly.back() = 1.0;
        auto mine = isolate_positive_roots(poly);
        double hi = positive_root_bound(poly);
        auto scan = scan_positive_roots(poly, hi, 1000000);
        std::size_t simple = 0;
        for (const auto& r : mine)
            if (r.multiplicity % 2 == 1) ++simple;
        REQUIRE(simple == scan.size());
        std::size_t j = 0;
        for (const auto& r : mine) {
            if (r.multiplicity % 2 == 0) continue;
            CHECK(r.value == doctest::Approx(scan[j]).epsilon(1e-8));
            ++j;
        }
    }
}

TEST_CASE("descartes structure: root count <= sign variation, same parity") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Coeff> exact(6);
        std::vector<double> poly(6);
        for (std::size_t i = 0; i < 6; ++i) {
            exact[i] = Coeff(coef(rng));
            poly[i] = exact[i].value();
        }
        if (poly.back() == 0.0) { poly.back() = 1.0; exact.back() = Coeff(1); }
        int nu = sign_variation(exact);
        int N = 0;
        for (const auto& r : isolate_positive_roots(poly)) N += r.multiplicity;
        CHECK(N <= nu);
        CHECK((nu - N) % 2 == 0);
    }
}
