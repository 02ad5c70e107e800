#include "pedal/problems.hpp"

#include <algorithm>
#include <cmath>

namespace pedal {

namespace {

PowerSum rpow(const Rational& e, const Coeff& c = Coeff(1)) { return PowerSum::term(e, c); }

// all real roots of an ascending-coefficient polynomial
std::vector<double> real_roots(const std::vector<double>& poly) {
    std::vector<double> out;
    for (const auto& r : isolate_positive_roots(poly)) out.push_back(r.value);
    std::vector<double> neg = poly;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    for (const auto& r : isolate_positive_roots(neg)) out.push_back(-r.value);
    if (!poly.empty() && poly[0] == 0.0) out.push_back(0.0);
    std::sort(out.begin(), out.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
    });
    return out;
}

} // namespace

Coeff SchwarzschildParams::d() const {
    return Coeff(1) / (b * b) - Coeff(1) / (a * a);
}

SchwarzschildResult schwarzschild_equation(const SchwarzschildParams& sp) {
    if (!(sp.r_s.value() > 0.0) || !(sp.a.value() > 0.0) || !(sp.b.value() > 0.0))
        fail("InvalidParam", "r_s, a, b must be positive");
    Coeff dd = sp.d();
    PowerSum n0 = PowerSum(dd) + rpow(Rational(-1), sp.r_s / (sp.a * sp.a)) +
                  rpow(Rational(-3), sp.r_s);
    SchwarzschildResult out;
    out.equation = PedalEquation::linear(PowerSum(Coeff(1)), -n0);
    out.region = allowed_region(out.equation);
    return out;
}

SchwarzschildReduction schwarzschild_reduce(const SchwarzschildParams& sp) {
    Coeff dd = sp.d();
    double rs = sp.r_s.value(), a2 = (sp.a * sp.a).value(), d = dd.value();
    // a~(g) = d - g rs/a^2 - g^2 - g^3 rs = 0, smallest-magnitude real root
    std::vector<double> cubic{d, -rs / a2, -1.0, -rs};
    std::vector<double> roots = real_roots(cubic);
    if (roots.empty()) fail("DomainError", "tilde cubic has no real root"); // cannot happen
    double g = roots.front();

    SchwarzschildReduction out;
    out.gamma = g;
    Coeff gc = Coeff::inexact(g);
    if (d == 0.0) gc = Coeff(0); // gamma = 0 arises iff d = 0
    Coeff bt = sp.r_s / (sp.a * sp.a) + Coeff(2) * gc + Coeff(3) * sp.r_s * gc * gc;
    Coeff dt = Coeff(-3) * gc * sp.r_s;
    PowerSum n0 = rpow(Rational(-1), bt) + rpow(Rational(-2), dt) + rpow(Rational(-3), sp.r_s);
    out.reduced = PedalEquation::linear(PowerSum(Coeff(1)), -n0);
    out.triple = EllipticTriple{dt, bt, sp.r_s, Rational(1, 2)};
    out.family = classify_spiral(out.triple);
    return out;
}

PedalEquation dark_equation(const DarkParams& dp) {
    if (dp.L.is_zero())
        fail("ZeroAngularMomentum",
             "L = 0 degenerates to a line segment through the origin, p = 0");
    PowerSum n0 = rpow(Rational(-1), Coeff(2) * dp.M) + rpow(Rational(1), Coeff(2) * dp.F) +
                  rpow(Rational(2), -dp.omega2) + PowerSum(dp.c);
    return PedalEquation::linear(PowerSum(dp.L * dp.L), -n0);
}

PedalEquation dark_rotating(const DarkParams& dp) {
    PedalEquation base = dark_equation(dp);
    double w2 = dp.omega2.value();
    if (w2 < 0.0) fail("InvalidParam", "omega^2 must be nonnegative for the rotating frame");
    Coeff w = dp.omega2.exact() && dp.omega2.rat().is_zero()
                  ? Coeff(0)
                  : Coeff::inexact(-std::sqrt(w2)); // w <= 0 by agreement
    // exact when omega^2 is a perfect rational square
    if (dp.omega2.exact()) {
        const Rational& r = dp.omega2.rat();
        double sn = std::sqrt((double)r.num()), sd = std::sqrt((double)r.den());
        if (sn == std::floor(sn) && sd == std::floor(sd) && r.sign() >= 0)
            w = -Coeff(Rational((std::int64_t)sn, (std::int64_t)sd));
    }
    return apply_transform(named_transform(Tag::A, {w / dp.L}), base);
}

// the matching equations pin sign(w): the 4th gives F = -w M / L, so
// w = -F L / M; the paper's "w < 0 by agreement" is the F, M >= 0 case
static double oval_omega(const DarkParams& dp) {
    double L = dp.L.value(), M = dp.M.value(), F = dp.F.value();
    if (M != 0.0 && F != 0.0) return -F * L / M;
    return -std::sqrt(std::max(dp.omega2.value(), 0.0));
}

double oval_match_residual(const DarkParams& dp, const OvalParams& ov) {
    double L = dp.L.value(), M = dp.M.value(), F = dp.F.value(), c = dp.c.value();
    double w = oval_omega(dp);
    double a2 = ov.alpha2, C = ov.C, b2 = ov.b2, mu = ov.mu;
    double e1 = 2 * L - b2 * mu;
    double e2 = 2 * w + (1 - a2) * mu;
    double e3 = 2 * M - C * b2 * mu * mu;
    double e4 = 2 * F - (1 - a2) * C * mu * mu;
    double e5 = c + 2 * w * L + ((1 - a2) * C * C + b2) * mu * mu;
    double scale = std::max({1.0, std::abs(L), std::abs(M), std::abs(F), std::abs(c),
                             std::abs(b2 * mu), std::abs(C * b2 * mu * mu)});
    double worst = 0.0;
    for (double e : {e1, e2, e3, e4, e5}) worst = std::max(worst, std::abs(e) / scale);
    return worst;
}

std::vector<Coeff> dark_mu_quadratic(const DarkParams& dp) {
    // symbolic elimination over power sums in mu:
    //   b2 = 2L/mu, (1-a^2) = -2w/mu, C = M/(L mu)
    // substituted into c + 2wL + ((1-a^2) C^2 + b2) mu^2 = 0, cleared by mu
    Coeff L = dp.L, M = dp.M, c = dp.c;
    Coeff w = (!dp.M.is_zero() && !dp.F.is_zero()) ? -(dp.F * dp.L / dp.M)
                                                   : Coeff::inexact(oval_omega(dp));
    PowerSum b2 = rpow(Rational(-1), Coeff(2) * L);
    PowerSum one_minus_a2 = rpow(Rational(-1), Coeff(-2) * w);
    PowerSum C = rpow(Rational(-1), M / L);
    PowerSum mu2 = rpow(Rational(2));
    PowerSum e5 = PowerSum(c + Coeff(2) * w * L) + (one_minus_a2 * C * C + b2) * mu2;
    e5.normalize();
    Rational emin = e5.min_exponent();
    if (emin < Rational(0)) e5 = e5.shifted(-emin);
    std::vector<Coeff> quad(3, Coeff(0));
    for (const auto& [e, co] : e5.terms()) {
        if (!e.is_integer() || e.num() > 2) fail("DomainError", "unexpected mu-degree");
        quad[(std::size_t)e.num()] = co;
    }
    return quad;
}

OvalParams oval_match(const DarkParams& dp) {
    double L = dp.L.value(), M = dp.M.value(), F = dp.F.value(), c = dp.c.value();
    double w2 = std::max(dp.omega2.value(), 0.0);
    if (L == 0.0)
        fail("ZeroAngularMomentum", "oval matching needs L != 0");
    double w = oval_omega(dp);
    if (F == 0.0 && w == 0.0) {
        // the usual Kepler problem: singular solution alpha = +-1 (conic)
        if (!(c < 0.0)) fail("NoOvalSolution", "conic branch needs c < 0");
        OvalParams ov;
        ov.alpha2 = 1.0;
        ov.mu = -c / (2.0 * L);
        ov.b2 = 2.0 * L / ov.mu;
        ov.C = -2.0 * M / c;
        ov.conic_degenerate = true;
        return ov;
    }
    double constraint = F * F * L * L - w2 * M * M;
    double cscale = std::max({1.0, F * F * L * L, w2 * M * M});
    if (std::abs(constraint) > 1e-9 * cscale)
        fail("NoOvalSolution", "F^2 L^2 != w^2 M^2 (F L + w M = 0 is required)");

    std::vector<Coeff> quad = dark_mu_quadratic(dp);
    double qa = quad[2].value(), qb = quad[1].value(), qc = quad[0].value();
    double D = qb * qb - 4.0 * qa * qc;
    if (D < 0.0) fail("NoRealMu", "negative discriminant of the mu-quadratic");
    // the admissible root (the paper's explicit choice)
    double mu = (std::sqrt(D) - (c + 2.0 * w * L)) / (4.0 * L);
    OvalParams ov;
    ov.mu = mu;
    ov.b2 = 2.0 * L / mu;
    ov.alpha2 = 1.0 + 2.0 * w / mu; // from (1 - alpha^2) = -2 w / mu
    ov.C = M / (L * mu);
    double res = oval_match_residual(dp, ov);
    if (res > 1e-9) {
        // fall back to the other root before giving up
        double mu2 = (-std::sqrt(D) - (c + 2.0 * w * L)) / (4.0 * L);
        OvalParams alt = ov;
        alt.mu = mu2;
        alt.b2 = 2.0 * L / mu2;
        alt.alpha2 = 1.0 + 2.0 * w / mu2;
        alt.C = M / (L * mu2);
        if (oval_match_residual(dp, alt) < res) return alt;
        fail("NoRealMu", "no root of the mu-quadratic satisfies the matching equations");
    }
    return ov;
}

DarkParams dark_shift_params(const Coeff& al, const DarkParams& dp) {
    const Coeff &M = dp.M, &F = dp.F, &w2 = dp.omega2, &L = dp.L, &c = dp.c;
    Coeff L2 = L * L;
    DarkParams out;
    out.omega2 = w2 + Coeff(2) * F * al - al * al * c + Coeff(2) * al * al * al * M +
                 al * al * al * al * L2;
    out.F = F - al * c + Coeff(3) * al * al * M + Coeff(2) * al * al * al * L2;
    out.c = c - Coeff(6) * al * M - Coeff(6) * al * al * L2;
    out.M = M + Coeff(2) * al * L2;
    out.L = L;
    return out;
}

std::vector<Coeff> dark_reduce_polynomial(const DarkParams& dp) {
    // F~, M~, w~^2, L~^2 as power sums in alpha; expand F~^2 L~^2 - w~^2 M~^2
    const Coeff &M = dp.M, &F = dp.F, &w2 = dp.omega2, &L = dp.L, &c = dp.c;
    Coeff L2 = L * L;
    auto apow = [](const Rational& e, const Coeff& co) { return PowerSum::term(e, co); };
    PowerSum Ft = PowerSum(F) + apow(Rational(1), -c) + apow(Rational(2), Coeff(3) * M) +
                  apow(Rational(3), Coeff(2) * L2);
    PowerSum Mt = PowerSum(M) + apow(Rational(1), Coeff(2) * L2);
    PowerSum wt2 = PowerSum(w2) + apow(Rational(1), Coeff(2) * F) + apow(Rational(2), -c) +
                   apow(Rational(3), Coeff(2) * M) + apow(Rational(4), L2);
    PowerSum G = Ft * Ft * PowerSum(L2) - wt2 * Mt * Mt;
    G.normalize();
    std::vector<Coeff> out(7, Coeff(0));
    for (const auto& [e, co] : G.terms()) {
        if (!e.is_integer() || e.num() < 0 || e.num() > 6)
            fail("DomainError", "unexpected alpha-degree");
        out[(std::size_t)e.num()] = co;
    }
    return out;
}

double dark_reduce(const DarkParams& dp) {
    double M = dp.M.value(), F = dp.F.value(), L = dp.L.value(), c = dp.c.value();
    double L2 = L * L;
    double lead = 2.0 * F * L2 * L2 + c * M * L2 + M * M * M;
    double lscale = std::max({1.0, std::abs(F * L2 * L2), std::abs(c * M * L2),
                              std::abs(M * M * M)});
    auto residual_at = [&](double al) {
        DarkParams sh = dark_shift_params(Coeff::inexact(al), dp);
        double ft = sh.F.value(), mt = sh.M.value(), w2t = sh.omega2.value();
        double lhs = ft * ft * L2, rhs = w2t * mt * mt;
        return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    };
    if (std::abs(lead) <= 1e-12 * lscale) {
        // (2 alpha L^2 + M)^2 (F^2 L^2 - w^2 M^2) = 0
        double constraint = F * F * L2 - dp.omega2.value() * M * M;
        double al = std::abs(constraint) <= 1e-12 * std::max(1.0, std::abs(constraint))
                        ? 0.0
                        : -M / (2.0 * L2);
        if (constraint == 0.0) al = 0.0;
        return al;
    }
    std::vector<Coeff> poly = dark_reduce_polynomial(dp);
    std::vector<double> cubic;
    for (std::size_t i = 0; i <= 3; ++i) cubic.push_back(poly[i].value());
    std::vector<double> roots = real_roots(cubic);
    if (roots.empty()) fail("DomainError", "reduction cubic has no real root"); // cannot happen
    // smallest residual, ties by smallest magnitude (roots is magnitude-sorted)
    double best = roots[0], bestres = residual_at(roots[0]);
    for (double r : roots) {
        double res = residual_at(r);
        if (res < bestres * 0.5) { best = r; bestres = res; }
    }
    return best;
}

} // namespace pedal
