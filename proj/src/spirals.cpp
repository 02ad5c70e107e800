#include "pedal/spirals.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace pedal {

JacobiValues jacobi(double z, double k) {
    k = std::abs(k); // only k^2 enters
    if (!(k < 1.0)) fail("ModulusOutOfRange", "jacobi requires |k| < 1");
    if (k < 1e-8) {
        // A&S 16.13 series
        double s = std::sin(z), c = std::cos(z), m = k * k;
        double corr = 0.25 * m * (z - s * c);
        JacobiValues out;
        out.sn = s - corr * c;
        out.cn = c + corr * s;
        out.dn = 1.0 - 0.5 * m * s * s;
        return out;
    }
    double kp = std::sqrt((1.0 - k) * (1.0 + k));
    std::vector<double> av{1.0}, cv{k};
    double a = 1.0, b = kp;
    for (int i = 0; i < 40; ++i) {
        double an = 0.5 * (a + b);
        double cn = 0.5 * (a - b);
        double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        av.push_back(a);
        cv.push_back(cn);
        if (cn < 1e-16) break;
    }
    std::size_t N = av.size() - 1;
    double phi = std::ldexp(av[N] * z, (int)N);
    for (std::size_t n = N; n >= 1; --n) {
        double arg = std::clamp(cv[n] / av[n] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(arg));
    }
    JacobiValues out;
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    out.dn = std::sqrt(1.0 - k * k * out.sn * out.sn); // dn >= k' > 0
    return out;
}

double elliptic_K(double k) {
    k = std::abs(k);
    if (!(k < 1.0)) fail("ModulusOutOfRange", "K(k) requires |k| < 1");
    double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k));
    for (int i = 0; i < 60 && std::abs(a - b) > 1e-17 * a; ++i) {
        double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return M_PI / (2.0 * a);
}

std::pair<double, double> sn_star_pair(double z, double lambda) {
    // integrate w'' = 2 w^3 - 2 cos(lambda) w from (0, 0, 1); classic RK4
    double cl = std::cos(lambda);
    double w = 0.0, wp = 1.0, t = 0.0;
    double target = z;
    double dir = target >= 0.0 ? 1.0 : -1.0;
    double h = 5e-4 * dir;
    auto acc = [&](double wv) { return 2.0 * wv * wv * wv - 2.0 * cl * wv; };
    while (std::abs(target - t) > 1e-15) {
        double step = h;
        if (std::abs(target - t) < std::abs(h)) step = target - t;
        double k1w = wp, k1v = acc(w);
        double k2w = wp + 0.5 * step * k1v, k2v = acc(w + 0.5 * step * k1w);
        double k3w = wp + 0.5 * step * k2v, k3v = acc(w + 0.5 * step * k2w);
        double k4w = wp + step * k3v, k4v = acc(w + step * k3w);
        w += step / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
        wp += step / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        t += step;
    }
    return {w, wp};
}

double sn_star(double z, double lambda) { return sn_star_pair(z, lambda).first; }

std::string family_name(SpiralFamily f) {
    switch (f) {
    case SpiralFamily::Exp: return "exp";
    case SpiralFamily::Id: return "id";
    case SpiralFamily::Sin: return "sin";
    case SpiralFamily::Sinh: return "sinh";
    case SpiralFamily::Cosh: return "cosh";
    case SpiralFamily::Sn: return "sn";
    case SpiralFamily::Cn: return "cn";
    case SpiralFamily::SnStar: return "sn_star";
    case SpiralFamily::Sc: return "sc";
    case SpiralFamily::Dn: return "dn";
    case SpiralFamily::Ds: return "ds";
    }
    return "?";
}

SpiralFamily family_from_name(const std::string& name) {
    for (SpiralFamily f : {SpiralFamily::Exp, SpiralFamily::Id, SpiralFamily::Sin,
                           SpiralFamily::Sinh, SpiralFamily::Cosh, SpiralFamily::Sn,
                           SpiralFamily::Cn, SpiralFamily::SnStar, SpiralFamily::Sc,
                           SpiralFamily::Dn, SpiralFamily::Ds})
        if (family_name(f) == name) return f;
    fail("InvalidFamilyParams", "unknown spiral family '" + name + "'");
}

PedalEquation triple_equation(const EllipticTriple& t) {
    PowerSum n0 = PowerSum::term(Rational(-2), t.a);
    Rational two_a = Rational(2) * t.alpha;
    n0 = n0 + PowerSum::term(two_a - Rational(2), t.beta);
    n0 = n0 + PowerSum::term(-two_a - Rational(2), t.gamma);
    return PedalEquation::linear(PowerSum(Coeff(1)), -n0);
}

EllipticTriple f_spiral_triple(const SpiralParams& sp) {
    if (sp.l.is_zero()) fail("InvalidFamilyParams", "l must be nonzero");
    if (sp.alpha.is_zero()) fail("InvalidFamilyParams", "alpha must be nonzero");
    EllipticTriple t;
    t.alpha = sp.alpha;
    const Coeff& l = sp.l;
    const Coeff& c = sp.c;
    Coeff l2 = l * l, c2 = c * c;
    switch (sp.family) {
    case SpiralFamily::Exp: // p = r / sqrt(1 + l^2): a-only
        t.a = Coeff(1) + l2;
        t.beta = t.gamma = Coeff(0);
        return t;
    case SpiralFamily::Id:
        t.a = Coeff(1);
        t.beta = Coeff(0);
        t.gamma = c2;
        return t;
    case SpiralFamily::Sin:
        t.a = Coeff(1) - l2;
        t.beta = Coeff(0);
        t.gamma = c2;
        return t;
    case SpiralFamily::Sinh:
        t.a = Coeff(1) + l2;
        t.beta = Coeff(0);
        t.gamma = c2;
        return t;
    case SpiralFamily::Cosh:
        t.a = Coeff(1) + l2;
        t.beta = Coeff(0);
        t.gamma = -c2;
        return t;
    case SpiralFamily::Sn: { // exact path: a = 1 - l^2(k^2+1), beta = l^4 k^2/c^2, gamma = c^2
        Coeff k2 = sp.k * sp.k;
        if (!(k2.value() < 1.0)) fail("InvalidFamilyParams", "sn requires |k| < 1");
        t.a = Coeff(1) - l2 * (k2 + Coeff(1));
        t.beta = l2 * l2 * k2 / c2;
        t.gamma = c2;
        return t;
    }
    default: break;
    }
    // remaining families via the complex substitution (A, B, m) into the sn form:
    // l~ = l B, c~ = c A B, modulus m; coefficients must come out real
    using C = std::complex<double>;
    double kv = sp.k.value();
    C A, Bc, m;
    const C i(0.0, 1.0);
    if (sp.family == SpiralFamily::SnStar) {
        A = std::exp(i * (kv / 2.0)); // k holds lambda here
        Bc = std::exp(-i * (kv / 2.0));
        m = std::exp(i * kv);
    } else {
        if (!(std::abs(kv) < 1.0)) fail("InvalidFamilyParams", "modulus requires |k| < 1");
        double kp = std::sqrt(1.0 - kv * kv);
        switch (sp.family) {
        case SpiralFamily::Cn: A = 1.0; Bc = kp; m = i * kv / kp; break;
        case SpiralFamily::Dn: A = kp; Bc = i; m = kp; break;
        case SpiralFamily::Sc: A = -i; Bc = i; m = kp; break;
        case SpiralFamily::Ds: A = i * kv; Bc = kp; m = i * kv / kp; break;
        default: fail("InvalidFamilyParams", "unhandled family");
        }
    }
    C lt = C(l.value()) * Bc;
    C ct = C(c.value()) * A * Bc;
    C a = 1.0 - lt * lt * (m * m + 1.0);
    C beta = lt * lt * lt * lt * m * m / (ct * ct);
    C gamma = ct * ct;
    for (C v : {a, beta, gamma})
        if (std::abs(v.imag()) > 1e-10)
            fail("InvalidFamilyParams", "complex substitution produced a non-real coefficient");
    t.a = Coeff::inexact(a.real());
    t.beta = Coeff::inexact(beta.real());
    t.gamma = Coeff::inexact(gamma.real());
    return t;
}

PedalEquation f_spiral_equation(const SpiralParams& sp) {
    return triple_equation(f_spiral_triple(sp));
}

SpiralFamily classify_spiral(const EllipticTriple& t) {
    double a = t.a.value(), b = t.beta.value(), g = t.gamma.value();
    if (b == 0.0 && g == 0.0) return SpiralFamily::Exp; // log spiral
    if (b == 0.0 || g == 0.0) {
        // sin family and its complex extensions; beta-only mirrors under alpha -> -alpha
        double gg = g == 0.0 ? b : g;
        if (gg > 0.0) {
            if (a < 1.0) return SpiralFamily::Sin;
            if (a == 1.0) return SpiralFamily::Id;
            return SpiralFamily::Sinh;
        }
        if (a > 1.0) return SpiralFamily::Cosh;
        fail("NoCurve", "p > r everywhere (a <= 1 with a negative spiral term)");
    }
    double disc = (1.0 - a) * (1.0 - a) - 4.0 * b * g;
    if (b > 0.0 && g > 0.0) {
        if (disc < 0.0) return SpiralFamily::SnStar;
        return a < 1.0 ? SpiralFamily::Sn : SpiralFamily::Sc;
    }
    if (b < 0.0 && g > 0.0) return SpiralFamily::Cn;
    if (b > 0.0 && g < 0.0) return SpiralFamily::Ds;
    // b < 0, g < 0
    if (disc >= 0.0 && a > 1.0) return SpiralFamily::Dn;
    fail("NoCurve", "p > r everywhere ((a-1)^2 < 4 beta gamma with beta, gamma < 0)");
}

SnRecovery recover_sn_params(const EllipticTriple& t) {
    if (classify_spiral(t) != SpiralFamily::Sn)
        fail("InvalidFamilyParams", "recover_sn_params needs an sn-classified triple");
    double a = t.a.value(), b = t.beta.value(), g = t.gamma.value();
    double s = 1.0 - a;
    double disc = s * s - 4.0 * b * g;
    double sq = std::sqrt(disc);
    double u_plus = 0.5 * (s + sq);  // l^2 candidate (larger root)
    double u_minus = 0.5 * (s - sq); // l^2 k^2
    auto validates = [&](double u, double v) {
        if (!(u > 0.0) || v < 0.0 || v > u) return false;
        double a_back = 1.0 - (u + v);
        double beta_back = u * v / g;
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a_back - a) <= 1e-10 * scale && std::abs(beta_back - b) <= 1e-10 * scale;
    };
    SnRecovery out;
    out.c = std::sqrt(g);
    out.paper_l2 = sq + s;
    if (validates(u_plus, u_minus)) {
        out.l2 = u_plus;
        out.k = u_plus > 0.0 ? std::sqrt(std::max(u_minus, 0.0) / u_plus) : 0.0;
        out.halved_form_validates = true;
        return out;
    }
    if (validates(u_minus, u_plus)) { // k > 1 would be out of range; defensive
        out.l2 = u_minus;
        out.k = std::sqrt(u_plus / u_minus);
        out.halved_form_validates = true;
        return out;
    }
    fail("BackSubstitutionMismatch",
         "neither root validates: l^2 candidates " + std::to_string(u_plus) + " and " +
         std::to_string(u_minus));
}

PolarPath sample_f_spiral(const SpiralParams& sp, double phi_lo, double phi_hi, int n) {
    if (sp.l.is_zero() || sp.alpha.is_zero())
        fail("InvalidFamilyParams", "l and alpha must be nonzero");
    double l = sp.l.value(), c = sp.c.value(), kv = sp.k.value();
    double al = sp.alpha.to_double();
    auto f_and_deriv = [&](double z) -> std::pair<double, double> {
        switch (sp.family) {
        case SpiralFamily::Exp: { double e = std::exp(z); return {e, e}; }
        case SpiralFamily::Id: return {z, 1.0};
        case SpiralFamily::Sin: return {std::sin(z), std::cos(z)};
        case SpiralFamily::Sinh: return {std::sinh(z), std::cosh(z)};
        case SpiralFamily::Cosh: return {std::cosh(z), std::sinh(z)};
        case SpiralFamily::Sn: {
            auto j = jacobi(z, kv);
            return {j.sn, j.cn * j.dn};
        }
        case SpiralFamily::Cn: {
            auto j = jacobi(z, kv);
            return {j.cn, -j.sn * j.dn};
        }
        case SpiralFamily::Dn: {
            auto j = jacobi(z, kv);
            return {j.dn, -kv * kv * j.sn * j.cn};
        }
        case SpiralFamily::Sc: {
            auto j = jacobi(z, kv);
            double d = j.cn * j.cn;
            return {j.sn / j.cn, j.dn / d};
        }
        case SpiralFamily::Ds: {
            auto j = jacobi(z, kv);
            return {j.dn / j.sn, -j.cn / (j.sn * j.sn)}; // ds' = -cs ns
        }
        case SpiralFamily::SnStar:
            return sn_star_pair(z, kv);
        }
        fail("InvalidFamilyParams", "unhandled family");
    };
    PolarPath path;
    for (int i = 0; i <= n; ++i) {
        double phi = phi_lo + (phi_hi - phi_lo) * i / n;
        double z = l * al * phi + sp.phi0;
        auto [fv, fd] = f_and_deriv(z);
        double base = (c / l) * fv;
        if (!(base > 1e-12)) continue; // r^alpha must be positive
        double r = std::pow(base, 1.0 / al);
        // alpha r^{alpha-1} r' = (c/l) l alpha f' = c alpha f'
        double rp = c * fd * std::pow(r, 1.0 - al);
        path.points.push_back({r, phi});
        path.drdphi.push_back(rp);
    }
    if (path.points.empty())
        fail("DomainError", "f <= 0 on the whole requested range");
    return path;
}

} // namespace pedal
