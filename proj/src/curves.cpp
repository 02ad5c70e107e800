#include "pedal/curves.hpp"

#include <algorithm>
#include <cmath>

namespace pedal {

namespace {

PowerSum rpow(const Rational& e, const Coeff& c = Coeff(1)) { return PowerSum::term(e, c); }

CurveSampler polar_sampler(std::function<double(double)> r_of_phi,
                           std::function<double(double)> drdphi, double t0, double t1) {
    CurveSampler s;
    s.t0 = t0;
    s.t1 = t1;
    s.position = [r_of_phi](double t) {
        double r = r_of_phi(t);
        return Vec2{r * std::cos(t), r * std::sin(t)};
    };
    if (drdphi) {
        s.derivative = [r_of_phi, drdphi](double t) {
            double r = r_of_phi(t), rp = drdphi(t);
            return Vec2{rp * std::cos(t) - r * std::sin(t), rp * std::sin(t) + r * std::cos(t)};
        };
    }
    return s;
}

} // namespace

namespace {

CatalogEntry catalog_impl(const std::string& name, const std::vector<Coeff>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            fail("InvalidParam", name + " takes " + std::to_string(n) + " parameter(s)");
    };
    auto positive = [&](const Coeff& c, const char* what) {
        if (!(c.value() > 0.0)) fail("InvalidParam", std::string(what) + " must be positive");
        return c;
    };
    CatalogEntry e;
    e.name = name;
    e.params = params;

    if (name == "line") { // p = a: a^2 q = 1
        need(1);
        Coeff a = positive(params[0], "a");
        e.equation = PedalEquation::linear(PowerSum(a * a), PowerSum(Coeff(-1)));
        double av = a.value();
        CurveSampler s;
        s.t0 = -3.0 * av;
        s.t1 = 3.0 * av;
        s.position = [av](double t) { return Vec2{av, t}; };
        s.derivative = [](double) { return Vec2{0.0, 1.0}; };
        e.sampler = s;
        return e;
    }
    if (name == "point") { // r = a (degree 0; does not constrain p)
        need(1);
        Coeff a = positive(params[0], "a");
        e.equation = PedalEquation({rpow(Rational(1)) - PowerSum(a)});
        double av = a.value();
        CurveSampler s;
        s.t0 = 0.0;
        s.t1 = 2.0 * M_PI;
        s.position = [av](double) { return Vec2{av, 0.0}; };
        s.derivative = [](double t) { return Vec2{std::cos(t), std::sin(t)}; };
        e.sampler = s;
        return e;
    }
    if (name == "circle_centered") { // p = R (and r = R)
        need(1);
        Coeff R = positive(params[0], "R");
        e.equation = PedalEquation::linear(PowerSum(R * R), PowerSum(Coeff(-1)));
        double Rv = R.value();
        e.sampler = polar_sampler([Rv](double) { return Rv; }, [](double) { return 0.0; },
                                  0.0, 2.0 * M_PI);
        return e;
    }
    if (name == "concentric") { // p = r: r^2 q = 1
        need(1);
        Coeff r0 = positive(params[0], "r0");
        e.equation = PedalEquation::linear(rpow(Rational(2)), PowerSum(Coeff(-1)));
        double rv = r0.value();
        e.sampler = polar_sampler([rv](double) { return rv; }, [](double) { return 0.0; },
                                  0.0, 2.0 * M_PI);
        return e;
    }
    if (name == "circle_on") { // 2Rp = r^2: r^4 q = 4R^2
        need(1);
        Coeff R = positive(params[0], "R");
        e.equation = PedalEquation::linear(rpow(Rational(4)),
                                           PowerSum(Coeff(-4) * R * R));
        double Rv = R.value();
        CurveSampler s;
        s.t0 = 0.05;
        s.t1 = 2.0 * M_PI - 0.05;
        s.position = [Rv](double t) { return Vec2{Rv + Rv * std::cos(t), Rv * std::sin(t)}; };
        s.derivative = [Rv](double t) { return Vec2{-Rv * std::sin(t), Rv * std::cos(t)}; };
        e.sampler = s;
        return e;
    }
    if (name == "circle_offset") { // 2Rp = r^2 + R^2 - a^2
        need(2);
        Coeff R = positive(params[0], "R");
        Coeff a = params[1];
        PowerSum inner = rpow(Rational(2)) + PowerSum(R * R - a * a);
        e.equation = PedalEquation::linear(inner * inner,
                                           PowerSum(Coeff(-4) * R * R));
        double Rv = R.value(), av = a.value();
        CurveSampler s;
        s.t0 = 0.0;
        s.t1 = 2.0 * M_PI;
        s.position = [Rv, av](double t) { return Vec2{av + Rv * std::cos(t), Rv * std::sin(t)}; };
        s.derivative = [Rv](double t) { return Vec2{-Rv * std::sin(t), Rv * std::cos(t)}; };
        e.sampler = s;
        return e;
    }
    if (name == "log_spiral") { // p = |sin alpha| r
        need(1);
        double al = params[0].value();
        double sa = std::abs(std::sin(al));
        if (sa == 0.0) fail("InvalidParam", "log_spiral needs sin(alpha) != 0");
        e.equation = PedalEquation::linear(rpow(Rational(2), Coeff::inexact(sa * sa)),
                                           PowerSum(Coeff(-1)));
        double cot = std::cos(al) / std::sin(al);
        e.sampler = polar_sampler([cot](double t) { return std::exp(cot * t); },
                                  [cot](double t) { return cot * std::exp(cot * t); },
                                  0.0, 4.0 * M_PI);
        return e;
    }
    if (name == "circle_involute") { // p_c = a: (r^2 - a^2) q = 1
        need(1);
        Coeff a = positive(params[0], "a");
        e.equation = PedalEquation::linear(rpow(Rational(2)) + PowerSum(-(a * a)),
                                           PowerSum(Coeff(-1)));
        ChainEquation ch;
        ch.add_term({0, 1}, Coeff(1));
        ch.add_term({}, -a);
        e.chain = ch;
        double av = a.value();
        CurveSampler s;
        s.t0 = 0.3;
        s.t1 = 4.0 * M_PI;
        s.position = [av](double t) {
            return Vec2{av * (std::cos(t) + t * std::sin(t)), av * (std::sin(t) - t * std::cos(t))};
        };
        s.derivative = [av](double t) { return Vec2{av * t * std::cos(t), av * t * std::sin(t)}; };
        e.sampler = s;
        return e;
    }
    if (name == "archimedes") { // 1/p^2 = 1/r^2 + a^2/r^4
        need(1);
        Coeff a = positive(params[0], "a");
        e.equation = PedalEquation::linear(rpow(Rational(4)),
                                           -(rpow(Rational(2)) + PowerSum(a * a)));
        double av = a.value();
        e.sampler = polar_sampler([av](double t) { return av * t; },
                                  [av](double) { return av; }, 0.5, 6.0 * M_PI);
        return e;
    }
    if (name == "spiral_family") { // r = c phi^alpha: 1/p^2 = 1/r^2 + alpha^2 c^{2/alpha} r^{-2-2/alpha}
        need(2);
        Coeff al = params[0];
        Coeff c = positive(params[1], "c");
        if (!al.exact() || al.rat().is_zero())
            fail("InvalidParam", "spiral_family exponent must be a nonzero rational");
        Rational a = al.rat();
        Rational two_over_a = Rational(2) / a;
        PowerSum n0 = rpow(Rational(2)) +
                      PowerSum::term(Rational(2) - two_over_a,
                                     (al * al) * c.pow_rational(two_over_a));
        e.equation = PedalEquation::linear(rpow(Rational(4)), -n0);
        double av = a.to_double(), cv = c.value();
        e.sampler = polar_sampler([cv, av](double t) { return cv * std::pow(t, av); },
                                  [cv, av](double t) { return cv * av * std::pow(t, av - 1.0); },
                                  0.5, 6.0 * M_PI);
        return e;
    }
    if (name == "conic_focus") { // L^2/p^2 = 2M/r + c
        need(3);
        Coeff L = params[0], M = positive(params[1], "M"), c = params[2];
        e.equation = PedalEquation::linear(PowerSum(L * L),
                                           -(rpow(Rational(-1), Coeff(2) * M) + PowerSum(c)));
        double l2 = (L * L).value();
        double ell = l2 / M.value();
        double e2 = 1.0 + c.value() * l2 / (M.value() * M.value());
        if (e2 < 0.0) fail("InvalidParam", "no conic with these (L, M, c)");
        double ecc = std::sqrt(e2);
        double span = ecc < 1.0 ? M_PI : std::acos(-1.0 / ecc) - 0.05;
        e.sampler = polar_sampler(
            [ell, ecc](double t) { return ell / (1.0 + ecc * std::cos(t)); },
            [ell, ecc](double t) {
                double d = 1.0 + ecc * std::cos(t);
                return ell * ecc * std::sin(t) / (d * d);
            },
            -span * 0.98, span * 0.98);
        return e;
    }
    if (name == "sinusoidal") { // a^n p = r^{n+1}: r^{2n+2} q = a^{2n}
        need(2);
        Coeff n = params[0];
        Coeff a = positive(params[1], "a");
        if (!n.exact()) fail("InvalidParam", "sinusoidal index must be rational");
        Rational nr = n.rat();
        e.equation = PedalEquation::linear(rpow(Rational(2) * nr + Rational(2)),
                                           PowerSum(-a.pow_rational(Rational(2) * nr)));
        double nv = nr.to_double(), av = a.value();
        double lo = 0.03, hi = (nv > 0 ? M_PI / nv : M_PI / -nv) - 0.03;
        e.sampler = polar_sampler(
            [nv, av](double t) { return av * std::pow(std::sin(nv * t), 1.0 / nv); },
            [nv, av](double t) {
                double s = std::sin(nv * t);
                return av * std::pow(s, 1.0 / nv - 1.0) * std::cos(nv * t);
            },
            lo, hi);
        return e;
    }
    if (name == "cassini_focus") {
        // |x||x-a| = C: (3C^2 + r^4 - a^2 r^2)^2 q r^2 = 4C^2 (2C^2 + 2r^4 - a^2 r^2)
        need(2);
        Coeff a = positive(params[0], "a");
        Coeff C = positive(params[1], "C");
        Coeff C2 = C * C;
        PowerSum inner = PowerSum(Coeff(3) * C2) + rpow(Rational(4)) +
                         rpow(Rational(2), -(a * a));
        PowerSum n1 = (inner * inner).shifted(Rational(2));
        PowerSum n0 = PowerSum(Coeff(2) * C2) + rpow(Rational(4), Coeff(2)) +
                      rpow(Rational(2), -(a * a));
        e.equation = PedalEquation::linear(n1, n0.scaled(Coeff(-4) * C2));
        return e;
    }
    if (name == "cassini_center") {
        // |x^2 - a^2| = C (complex square of a circle): (r^4 + C^2 - a^4)^2 q = 4C^2 r^2
        need(2);
        Coeff a = positive(params[0], "a");
        Coeff C = positive(params[1], "C");
        PowerSum inner = rpow(Rational(4)) + PowerSum(C * C - (a * a) * (a * a));
        e.equation = PedalEquation::linear(inner * inner,
                                           rpow(Rational(2), Coeff(-4) * C * C));
        return e;
    }
    if (name == "cartesian_oval") {
        // |x| + alpha |x - a| = C, b^2 = C^2 - alpha^2 a^2:
        // (b^2 - (1-alpha^2) r^2)^2 q / 4 = C b^2 / r + (1-alpha^2) C r - ((1-alpha^2) C^2 + b^2)
        need(3);
        Coeff al = params[0];
        Coeff a = positive(params[1], "a");
        Coeff C = positive(params[2], "C");
        Coeff one_m = Coeff(1) - al * al;
        Coeff b2 = C * C - (al * al) * (a * a);
        if (!(b2.value() > 0.0)) fail("InvalidParam", "pedal point outside the oval (b^2 <= 0)");
        PowerSum inner = PowerSum(b2) + rpow(Rational(2), -one_m);
        PowerSum rhs = rpow(Rational(-1), C * b2) + rpow(Rational(1), one_m * C) +
                       PowerSum(-(one_m * C * C + b2));
        e.equation = PedalEquation::linear((inner * inner).scaled(rational(1, 4)), -rhs);
        return e;
    }
    fail("UnknownCurve", "no catalog entry named '" + name + "'");
}

} // namespace

CatalogEntry catalog(const std::string& name, const std::vector<Coeff>& params) {
    CatalogEntry e = catalog_impl(name, params);
    // construction-time soundness: the sampler satisfies the stored equation
    if (e.sampler) {
        for (const RP& s : curve_to_pedal_samples(*e.sampler, 64)) {
            double res = e.equation.residual(s.r, 1.0 / (s.p * s.p));
            if (!(res < 1e-9))
                fail("InvalidParam", "catalog entry '" + name +
                     "' fails its own pedal equation (residual " + std::to_string(res) + ")");
        }
    }
    return e;
}

std::vector<RP> curve_to_pedal_samples(const CurveSampler& s, int n, Vec2 O) {
    if (n < 2) fail("InvalidParam", "need at least two samples");
    std::vector<RP> out;
    out.reserve((std::size_t)n);
    double span = s.t1 - s.t0;
    double h = span * 1e-6;
    for (int i = 0; i < n; ++i) {
        double t = s.t0 + span * (i + 0.5) / n;
        Vec2 x = s.position(t) - O;
        Vec2 tan;
        if (s.derivative) {
            tan = s.derivative(t);
        } else {
            Vec2 t1 = s.position(t + h) - s.position(t - h);
            Vec2 t2 = s.position(t + h / 2) - s.position(t - h / 2);
            double n1 = t1.norm(), n2 = t2.norm();
            if (n1 == 0.0 || n2 == 0.0)
                fail("CuspDetected", "tangent vanishes at t = " + std::to_string(t));
            double align = std::abs(dot(t1, t2)) / (n1 * n2);
            if (align < 1.0 - 1e-6)
                fail("CuspDetected", "tangent direction unstable at t = " + std::to_string(t));
            tan = t1;
        }
        double tn = tan.norm();
        if (tn == 0.0) fail("CuspDetected", "zero tangent at t = " + std::to_string(t));
        out.push_back({x.norm(), std::abs(dot(x, tan.perp())) / tn});
    }
    return out;
}

namespace {

std::vector<double> ray_roots(const ImplicitCurve& c, double theta, int scan) {
    std::vector<double> roots;
    Vec2 dir{std::cos(theta), std::sin(theta)};
    double prev_rho = c.rmax * 1e-4;
    double prev_f = c.f(prev_rho * dir);
    for (int i = 1; i <= scan; ++i) {
        double rho = c.rmax * (double)i / scan;
        double f = c.f(rho * dir);
        if ((prev_f <= 0.0) != (f <= 0.0)) {
            double lo = prev_rho, hi = rho, flo = prev_f;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = c.f(mid * dir);
                if ((flo <= 0.0) == (fm <= 0.0)) { lo = mid; flo = fm; }
                else hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_rho = rho;
        prev_f = f;
    }
    return roots;
}

} // namespace

std::vector<RP> implicit_pedal_samples(const ImplicitCurve& c, int rays) {
    std::vector<RP> out;
    for (int i = 0; i < rays; ++i) {
        double theta = 2.0 * M_PI * (i + 0.5) / rays;
        Vec2 dir{std::cos(theta), std::sin(theta)};
        for (double rho : ray_roots(c, theta, 400)) {
            Vec2 x = rho * dir;
            Vec2 g = c.grad(x);
            double gn = g.norm();
            if (gn == 0.0) continue;
            out.push_back({x.norm(), std::abs(dot(x, g)) / gn});
        }
    }
    return out;
}

std::vector<Vec2> implicit_points(const ImplicitCurve& c, int rays) {
    std::vector<Vec2> out;
    for (int i = 0; i < rays; ++i) {
        double theta = 2.0 * M_PI * (i + 0.5) / rays;
        Vec2 dir{std::cos(theta), std::sin(theta)};
        for (double rho : ray_roots(c, theta, 400)) out.push_back(rho * dir);
    }
    return out;
}

namespace {

struct QFun {
    const PedalEquation& e;
    int root;

    double operator()(double r) const {
        if (e.degree() == 1) return e.solve_q_linear(r);
        auto qs = e.solve_q_all(r);
        if (root < 0) {
            if (qs.size() == 1) return qs[0];
            fail("MultiBranchAmbiguity", "degree " + std::to_string(e.degree()) +
                 " in q: pass a root selector");
        }
        if ((std::size_t)root >= qs.size())
            fail("MultiBranchAmbiguity", "root index out of range at r = " + std::to_string(r));
        return qs[(std::size_t)root];
    }
};

} // namespace

PolarPath pedal_to_polar(const PedalEquation& e, double r_start, double revolutions,
                         int branch, const ReconstructOptions& opt) {
    if (e.degree() < 1) fail("StartOutsideRegion", "equation does not constrain p");
    QFun qf{e, opt.q_root};
    auto g = [&](double r) { return r * r * qf(r) - 1.0; };

    double g0;
    try {
        g0 = g(r_start);
    } catch (const Error& err) {
        if (err.kind() == "MultiBranchAmbiguity") throw;
        fail("StartOutsideRegion", "q(r) undefined at r_start");
    }
    if (g0 < -1e-12) fail("StartOutsideRegion", "r^2 q - 1 < 0 at r_start");

    PolarPath path;
    // degenerate apsis everywhere: p = r family, pure rotation
    double probe = 1e-7 * r_start;
    if (std::abs(g0) < 1e-12 && std::abs(g(r_start * (1 + 1e-6))) < 1e-10 &&
        std::abs(g(r_start * (1 - 1e-6))) < 1e-10) {
        int n = opt.points_per_branch;
        for (int i = 0; i <= n; ++i) {
            double phi = 2.0 * M_PI * revolutions * i / n;
            path.points.push_back({r_start, phi});
            path.drdphi.push_back(0.0);
        }
        path.closed = revolutions >= 1.0 - 1e-12;
        return path;
    }
    (void)probe;

    // march outward/inward from r to the next apsis (root of g) or domain end
    auto find_apsis = [&](double r, int dir) -> std::optional<double> {
        double step = 1e-3;
        double prev = r, fprev = g(r);
        for (int i = 0; i < 4000; ++i) {
            double next = dir > 0 ? prev * (1.0 + step) : prev / (1.0 + step);
            double fnext;
            try {
                fnext = g(next);
            } catch (const Error&) {
                return std::nullopt; // left the computable domain
            }
            if (!(fnext == fnext)) return std::nullopt;
            if (fnext <= 0.0) {
                // bisect the crossing
                double lo = prev, hi = next;
                for (int it = 0; it < 200; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (g(mid) > 0.0) lo = mid;
                    else hi = mid;
                }
                return 0.5 * (lo + hi);
            }
            prev = next;
            fprev = fnext;
            if (next > 1e9 * r_start || next < 1e-9 * r_start) return std::nullopt;
            step = std::min(step * 1.25, 0.05);
        }
        (void)fprev;
        return std::nullopt;
    };

    double phi_goal = 2.0 * M_PI * revolutions;
    double phi = 0.0;
    double r_cur = r_start;
    int dir = branch >= 0 ? 1 : -1;
    // nudge off an apsis start
    if (std::abs(g0) < 1e-12) {
        double up = g(r_start * (1 + 1e-9));
        dir = up > g0 ? 1 : -1;
        if (branch < 0) dir = -dir;
        // pick the direction where g grows
        if (g(r_start * (1 + 1e-7)) > 0) dir = 1;
        else dir = -1;
    }

    path.points.push_back({r_cur, phi});
    path.drdphi.push_back(std::abs(g0) < 1e-12 ? 0.0 : dir * r_cur * std::sqrt(std::max(g0, 0.0)));

    int n = opt.points_per_branch;
    int guard = 0;
    while (phi < phi_goal && guard++ < 64) {
        auto aps = find_apsis(r_cur, dir);
        double r_end;
        bool to_apsis = aps.has_value();
        if (to_apsis) {
            r_end = *aps;
        } else {
            // unbounded branch: march until the angle goal is met
            r_end = dir > 0 ? r_cur * 64.0 : r_cur / 64.0;
        }
        // integrate dphi = dr/(r sqrt(g)); substitute r = r_cur + (r_end-r_cur) sin^2(theta)
        // (regularizes the apsis endpoint; harmless elsewhere)
        double delta = r_end - r_cur;
        auto r_of = [&](double th) { return r_cur + delta * std::sin(th) * std::sin(th); };
        auto integrand = [&](double th) {
            double r = r_of(th);
            double gg = g(r);
            if (gg <= 0.0) return 0.0;
            return std::abs(delta) * std::sin(2.0 * th) / (r * std::sqrt(gg));
        };
        // cumulative 5-point Gauss per panel
        static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                     0.5384693101056831, 0.9061798459386640};
        static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                     0.4786286704993665, 0.2369268850561891};
        double th_hi = M_PI / 2.0;
        double acc = 0.0;
        bool done = false;
        auto panel = [&](double a, double b) {
            double val = 0.0;
            for (int k = 0; k < 5; ++k)
                val += gw[k] * integrand(0.5 * (b - a) * gx[k] + 0.5 * (a + b));
            return val * 0.5 * (b - a);
        };
        for (int i = 0; i < n && !done; ++i) {
            double a = th_hi * i / n, b = th_hi * (i + 1) / n;
            double val = panel(a, b);
            double r_here, phi_here;
            if (phi + acc + val >= phi_goal) {
                // land exactly on the requested span: bisect theta inside the panel
                done = true;
                double lo = a, hi = b;
                for (int it = 0; it < 60; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (phi + acc + panel(a, mid) < phi_goal) lo = mid;
                    else hi = mid;
                }
                double thstar = 0.5 * (lo + hi);
                r_here = r_of(thstar);
                phi_here = phi_goal;
            } else {
                acc += val;
                r_here = r_of(b);
                phi_here = phi + acc;
            }
            double gg = std::max(g(r_here), 0.0);
            path.points.push_back({r_here, phi_here});
            path.drdphi.push_back((double)dir * r_here * std::sqrt(gg));
        }
        phi = path.points.back().phi;
        r_cur = path.points.back().r;
        if (to_apsis && phi < phi_goal) {
            dir = -dir; // reflect at the apsis
            if (!std::isfinite(r_cur) || r_cur <= 0.0) break;
        }
        if (!to_apsis) break; // unbounded: one sweep is all the curve has
    }

    // branch marks at sign flips of dr/dphi
    int prev = 0;
    for (std::size_t i = 0; i < path.drdphi.size(); ++i) {
        int s = path.drdphi[i] > 0 ? 1 : path.drdphi[i] < 0 ? -1 : 0;
        if (s != 0 && prev != 0 && s != prev) path.branch_marks.push_back(i);
        if (s != 0) prev = s;
    }
    double dphi_total = path.points.back().phi - path.points.front().phi;
    path.closed = std::abs(path.points.back().r - r_start) < 1e-8 * std::max(1.0, r_start) &&
                  std::abs(std::remainder(dphi_total, 2.0 * M_PI)) < 1e-6 &&
                  dphi_total > 1.0;
    return path;
}

std::vector<RP> path_pedal_samples(const PolarPath& path) {
    if (path.drdphi.size() == path.points.size() && !path.points.empty()) {
        std::vector<RP> out;
        out.reserve(path.points.size());
        for (std::size_t i = 0; i < path.points.size(); ++i) {
            double r = path.points[i].r, rp = path.drdphi[i];
            out.push_back({r, r * r / std::sqrt(r * r + rp * rp)});
        }
        return out;
    }
    return path.rp_samples();
}

std::vector<Vec2> path_points(const PolarPath& path) {
    std::vector<Vec2> out;
    out.reserve(path.points.size());
    for (const auto& pt : path.points)
        out.push_back({pt.r * std::cos(pt.phi), pt.r * std::sin(pt.phi)});
    return out;
}

} // namespace pedal
