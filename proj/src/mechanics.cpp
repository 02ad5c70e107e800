#include "pedal/mechanics.hpp"

#include <algorithm>
#include <cmath>

namespace pedal {

double Vec2::norm() const { return std::sqrt(norm2()); }

Vec2 ForceSpec::accel(Vec2 x, Vec2 v) const {
    double s = x.norm2();
    double fp = F.derivative().eval(s);
    Vec2 a = fp * x;
    if (!G.is_zero()) {
        double gp = G.derivative().eval(s);
        a = a + (2.0 * gp) * v.perp();
    }
    return a;
}

double Trajectory::p(std::size_t i) const {
    const auto& s = samples[i];
    double vn = s.v.norm();
    if (vn == 0.0) fail("DomainError", "zero velocity sample");
    return std::abs(dot(s.x, s.v.perp())) / vn;
}

PedalEquation force_to_pedal(const ForceSpec& fs, double L, double c) {
    // s = r^2 doubles every exponent
    PowerSum Gr = fs.G.substitute_power(Coeff(1), Rational(2));
    PowerSum Fr = fs.F.substitute_power(Coeff(1), Rational(2));
    PowerSum LG = PowerSum(Coeff(L)) - Gr;
    PowerSum n1 = LG * LG;
    if (n1.is_zero())
        fail("DegenerateAngularTerm", "(L - G(r^2))^2 vanishes identically");
    PowerSum n0 = -(Fr + PowerSum(Coeff(c)));
    return PedalEquation::linear(std::move(n1), std::move(n0));
}

OrbitConstants conserved_quantities(Vec2 x, Vec2 v, const ForceSpec& fs) {
    double s = x.norm2();
    if (s == 0.0) fail("DomainError", "conserved quantities undefined at x = 0");
    OrbitConstants oc;
    oc.L = dot(x, v.perp()) + (fs.G.is_zero() ? 0.0 : fs.G.eval(s));
    oc.c = v.norm2() - (fs.F.is_zero() ? 0.0 : fs.F.eval(s));
    return oc;
}

namespace {

struct State {
    Vec2 x, v;
    friend State operator+(State a, State b) { return {a.x + b.x, a.v + b.v}; }
    friend State operator*(double s, State a) { return {s * a.x, s * a.v}; }
};

State deriv(const ForceSpec& fs, const State& y) { return {y.v, fs.accel(y.x, y.v)}; }

} // namespace

Trajectory integrate_orbit(const ForceSpec& fs, Vec2 x0, Vec2 v0, double t_end,
                           double tol, const IntegrateOptions& opt) {
    if (x0.norm() == 0.0) fail("DomainError", "initial position at the origin");
    if (!(tol >= 1e-13 && tol <= 1e-3)) fail("DomainError", "tol outside [1e-13, 1e-3]");

    // Dormand-Prince 5(4)
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    Trajectory tr;
    tr.tol = tol;
    double r0 = x0.norm();
    double t = 0.0;
    State y{x0, v0};
    State k1 = deriv(fs, y);
    tr.samples.push_back({t, y.x, y.v});

    double vmag = std::max(v0.norm(), 1e-8);
    double h = 0.01 * std::min(r0 / vmag, 1.0) * std::pow(tol / 1e-10, 0.2);
    h = std::min(h, t_end);
    const double ang_cap = 2.0 * M_PI / opt.samples_per_rev;

    auto err_norm = [&](const State& e, const State& ya, const State& yb) {
        auto sc = [&](double v, double wa, double wb) {
            double s = tol + tol * std::max(std::abs(wa), std::abs(wb));
            return (v / s) * (v / s);
        };
        double s = sc(e.x.x, ya.x.x, yb.x.x) + sc(e.x.y, ya.x.y, yb.x.y) +
                   sc(e.v.x, ya.v.x, yb.v.x) + sc(e.v.y, ya.v.y, yb.v.y);
        return std::sqrt(s / 4.0);
    };

    while (t < t_end) {
        // geometric caps: angle advance and relative radial change
        double r = y.x.norm();
        double phidot = std::abs(dot(y.x, y.v.perp())) / (r * r);
        double rdot = std::abs(dot(y.x, y.v)) / r;
        double hcap = t_end - t;
        if (phidot > 1e-14) hcap = std::min(hcap, ang_cap / phidot);
        if (rdot > 1e-14) hcap = std::min(hcap, 0.05 * r / rdot);
        h = std::min(h, hcap);
        if (h < 1e-15 * std::max(1.0, std::abs(t)))
            fail("StepFailure", "step size collapsed at t = " + std::to_string(t));

        State k2 = deriv(fs, y + (h * a21) * k1);
        State k3 = deriv(fs, y + h * (a31 * k1 + a32 * k2));
        State k4 = deriv(fs, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        State k5 = deriv(fs, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        State k6 = deriv(fs, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        State ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = deriv(fs, ynew);
        State errv = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double err = err_norm(errv, y, ynew);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7; // FSAL
            ++tr.steps_accepted;
            tr.samples.push_back({t, y.x, y.v});
            double rn = y.x.norm();
            if (rn < 1e-9 * r0)
                fail("SingularityReached", "orbit reached r = " + std::to_string(rn) +
                     " at t = " + std::to_string(t));
        } else {
            ++tr.steps_rejected;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
        (void)c2; (void)c3; (void)c4; (void)c5;
    }
    return tr;
}

ResidualStats pedal_residual(const Trajectory& tr, const PedalEquation& e) {
    ResidualStats st;
    double sum2 = 0.0;
    for (std::size_t i = 0; i < tr.samples.size(); ++i) {
        double r = tr.r(i);
        double p = tr.p(i);
        if (p < 1e-12 * r)
            fail("TangentThroughOrigin", "sample tangent passes through the pedal point");
        double res = e.residual(r, 1.0 / (p * p));
        st.max_rel = std::max(st.max_rel, res);
        sum2 += res * res;
    }
    st.rms = std::sqrt(sum2 / std::max<std::size_t>(1, tr.samples.size()));
    return st;
}

bool RegionReport::contains(double r, double slack) const {
    for (const auto& [lo, hi] : admissible)
        if (r >= lo - slack && (std::isinf(hi) || r <= hi + slack)) return true;
    return false;
}

RegionReport allowed_region(const PedalEquation& e) {
    if (e.degree() != 1)
        fail("NotPolynomializable", "region analysis needs a degree-1 equation in q");
    // (L-G)^2/r^2 <= F + c  <=>  h = -N0 r^2 - N1 >= 0
    PowerSum h = (-e.coeff(0)).shifted(Rational(2)) - e.coeff(1);
    h.normalize();
    RegionReport rep;
    Rational emin = h.min_exponent();
    if (!emin.is_zero()) h = h.shifted(-emin); // r > 0: factoring r^k is sign-safe
    rep.h = h;

    std::int64_t m = h.exponent_denominator_lcm();
    rep.m = m;
    long dmax = 0;
    for (const auto& [ex, c] : h.terms()) {
        Rational ue = ex * Rational(m);
        if (!ue.is_integer() || ue.num() < 0)
            fail("NotPolynomializable", "exponents not clearable to a polynomial");
        dmax = std::max(dmax, ue.num());
    }
    if (dmax > 60) fail("NotPolynomializable", "degree too large after substitution");
    rep.poly.assign((std::size_t)dmax + 1, Coeff(0));
    for (const auto& [ex, c] : h.terms()) rep.poly[(std::size_t)(ex * Rational(m)).num()] = c;
    rep.nu = sign_variation(rep.poly);

    std::vector<double> dp;
    for (const auto& c : rep.poly) dp.push_back(c.value());
    auto uroots = isolate_positive_roots(dp);
    for (const auto& ur : uroots) {
        IsolatedRoot rr = ur;
        rr.value = std::pow(ur.value, (double)m);
        rr.lo = std::pow(ur.lo, (double)m);
        rr.hi = std::pow(ur.hi, (double)m);
        rep.roots.push_back(rr);
        rep.N += ur.multiplicity;
    }

    // sign of h between consecutive roots decides admissibility
    std::vector<double> cuts{0.0};
    for (const auto& rr : rep.roots) cuts.push_back(rr.value);
    double rmax = cuts.back() * 2.0 + 1.0;
    cuts.push_back(rmax);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        bool last = i + 2 == cuts.size();
        if (h.eval(std::max(mid, 1e-30)) >= 0.0)
            rep.admissible.push_back({cuts[i], last ? INFINITY : cuts[i + 1]});
    }
    return rep;
}

std::vector<double> unwrap_angles(const Trajectory& tr) {
    std::vector<double> phi(tr.samples.size());
    if (tr.samples.empty()) return phi;
    phi[0] = std::atan2(tr.samples[0].x.y, tr.samples[0].x.x);
    for (std::size_t i = 1; i < tr.samples.size(); ++i) {
        Vec2 a = tr.samples[i - 1].x, b = tr.samples[i].x;
        phi[i] = phi[i - 1] + std::atan2(cross(a, b), dot(a, b));
    }
    return phi;
}

std::vector<double> cumulative_quadrature(const std::vector<double>& xs,
                                          const std::vector<double>& ys) {
    std::size_t n = xs.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    auto parabola_piece = [&](std::size_t i0, std::size_t i1, std::size_t i2,
                              double a, double b) {
        // integral over [a, b] of the parabola through the three points
        double x0 = xs[i0], x1 = xs[i1], x2 = xs[i2];
        double y0 = ys[i0], y1 = ys[i1], y2 = ys[i2];
        double d0 = (x0 - x1) * (x0 - x2), d1 = (x1 - x0) * (x1 - x2), d2 = (x2 - x0) * (x2 - x1);
        auto I = [&](double x) {
            double l0 = (x * x * x / 3 - (x1 + x2) * x * x / 2 + x1 * x2 * x) / d0;
            double l1 = (x * x * x / 3 - (x0 + x2) * x * x / 2 + x0 * x2 * x) / d1;
            double l2 = (x * x * x / 3 - (x0 + x1) * x * x / 2 + x0 * x1 * x) / d2;
            return y0 * l0 + y1 * l1 + y2 * l2;
        };
        return I(b) - I(a);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double piece;
        if (n == 2) {
            piece = 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
        } else if (i == 0) {
            piece = parabola_piece(0, 1, 2, xs[0], xs[1]);
        } else if (i + 2 == n) {
            piece = parabola_piece(n - 3, n - 2, n - 1, xs[n - 2], xs[n - 1]);
        } else {
            double left = parabola_piece(i - 1, i, i + 1, xs[i], xs[i + 1]);
            double right = parabola_piece(i, i + 1, i + 2, xs[i], xs[i + 1]);
            piece = 0.5 * (left + right);
        }
        out[i + 1] = out[i] + piece;
    }
    return out;
}

namespace {

void mark_branches(PolarPath& path) {
    path.branch_marks.clear();
    int prev = 0;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        double d = path.points[i].r - path.points[i - 1].r;
        int s = d > 0 ? 1 : d < 0 ? -1 : 0;
        if (s != 0 && prev != 0 && s != prev) path.branch_marks.push_back(i - 1);
        if (s != 0) prev = s;
    }
}

} // namespace

std::vector<RP> PolarPath::rp_samples() const {
    // p from |r'| via the polar relation: p = r^2 / sqrt(r^2 + r'^2)
    std::vector<RP> out;
    std::size_t n = points.size();
    if (n < 3) return out;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double dphi = points[i + 1].phi - points[i - 1].phi;
        if (dphi == 0.0) continue;
        double dr = points[i + 1].r - points[i - 1].r;
        double rp = dr / dphi;
        double r = points[i].r;
        out.push_back({r, r * r / std::sqrt(r * r + rp * rp)});
    }
    return out;
}

PolarPath transform_trajectory(const Trajectory& tr, const RMap& f, double k) {
    if (tr.samples.size() < 3) fail("DomainError", "trajectory too short");
    std::vector<double> phi = unwrap_angles(tr);
    int dir = phi.back() > phi.front() ? 1 : -1;
    for (std::size_t i = 1; i < phi.size(); ++i)
        if ((phi[i] - phi[i - 1]) * dir < 0.0)
            fail("NonMonotonePhase", "polar angle is not monotone along the trajectory");

    RMap finv = f.inverse();
    std::vector<double> integrand(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        integrand[i] = k * finv.tf_integrand(tr.r(i));
    std::vector<double> phit = cumulative_quadrature(phi, integrand);

    PolarPath path;
    path.points.reserve(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i)
        path.points.push_back({finv.eval(tr.r(i)), phit[i]});
    mark_branches(path);
    double r_first = path.points.front().r, r_last = path.points.back().r;
    path.closed = std::abs(r_last - r_first) < 1e-6 * std::max(1.0, r_first);
    return path;
}

PolarPath rotate_frame(const Trajectory& tr, double w, bool invert) {
    std::vector<double> phi = unwrap_angles(tr);
    std::vector<double> r2(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) r2[i] = tr.r(i) * tr.r(i);
    std::vector<double> area = cumulative_quadrature(phi, r2);
    PolarPath path;
    double sgn = invert ? 1.0 : -1.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        path.points.push_back({tr.r(i), phi[i] + sgn * w * area[i]});
    mark_branches(path);
    return path;
}

PolarPath rotate_frame(const PolarPath& in, double w, bool invert) {
    std::vector<double> phi, r2;
    for (const auto& pt : in.points) {
        phi.push_back(pt.phi);
        r2.push_back(pt.r * pt.r);
    }
    std::vector<double> area = cumulative_quadrature(phi, r2);
    PolarPath path;
    double sgn = invert ? 1.0 : -1.0;
    for (std::size_t i = 0; i < in.points.size(); ++i)
        path.points.push_back({in.points[i].r, phi[i] + sgn * w * area[i]});
    mark_branches(path);
    return path;
}

double curvature_radius(const PedalEquation& e, double r) {
    double q;
    if (e.degree() == 1) {
        q = e.solve_q_linear(r);
    } else {
        auto roots = e.solve_q_all(r);
        if (roots.size() != 1)
            fail("MultiBranchAmbiguity", "equation does not determine q uniquely at r");
        q = roots[0];
    }
    if (!(q > 0.0)) fail("DomainError", "no real pedal distance at r");
    double p = 1.0 / std::sqrt(q);

    bool r_free = true;
    double phi_r = 0.0, phi_p = 0.0;
    double qj = 1.0;
    for (std::size_t j = 0; j <= e.degree(); ++j) {
        PowerSum d = e.coeff(j).derivative();
        if (!d.is_zero()) r_free = false;
        phi_r += d.is_zero() ? 0.0 : d.eval(r) * qj;
        if (j > 0) phi_p += e.coeff(j).eval(r) * (-2.0 * (double)j) * std::pow(p, -2.0 * j - 1.0);
        qj *= q;
    }
    if (r_free) return INFINITY;
    if (phi_r == 0.0)
        fail("VerticalTangentInPR", "dp/dr = 0 at the query point");
    return std::abs(r * phi_p / phi_r);
}

} // namespace pedal
