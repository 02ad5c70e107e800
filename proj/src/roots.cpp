#include "pedal/roots.hpp"

#include <algorithm>
#include <cmath>

#include "pedal/equation.hpp"

namespace pedal {

int sign_variation(const std::vector<Coeff>& ascending) {
    int v = 0, prev = 0;
    for (const auto& c : ascending) {
        int s = c.exact() ? c.rat().sign() : (c.value() > 0 ? 1 : c.value() < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

double eval_poly(const std::vector<double>& a, double x) {
    double s = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) s = s * x + a[i];
    return s;
}

double positive_root_bound(const std::vector<double>& a) {
    std::size_t d = a.size();
    while (d > 0 && a[d - 1] == 0.0) --d;
    if (d <= 1) return 1.0;
    double lead = std::abs(a[d - 1]);
    double maxratio = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) maxratio = std::max(maxratio, std::abs(a[i]) / lead);
    return 1.0 + maxratio;
}

namespace {

std::vector<double> derivative(const std::vector<double>& a) {
    std::vector<double> d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (double)i);
    if (d.empty()) d.push_back(0.0);
    return d;
}

double bisect(const std::vector<double>& a, double lo, double hi, double tol) {
    double flo = eval_poly(a, lo);
    for (int i = 0; i < 200 && hi - lo > tol * std::max(1.0, std::abs(hi)); ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = eval_poly(a, mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// magnitude scale of the polynomial near x, for tangency detection
double poly_scale(const std::vector<double>& a, double x) {
    double s = 0.0, xp = 1.0;
    for (double c : a) {
        s = std::max(s, std::abs(c) * std::abs(xp));
        xp *= x;
    }
    return s;
}

} // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const std::vector<double>& a0, double tol) {
    std::vector<double> a = a0;
    while (a.size() > 1 && a.back() == 0.0) a.pop_back();
    std::vector<IsolatedRoot> out;
    if (a.size() <= 1) return out;

    // critical points by recursion on the derivative; between consecutive
    // critical points the polynomial is monotone
    std::vector<double> crit;
    if (a.size() > 2) {
        for (const auto& r : isolate_positive_roots(derivative(a), tol)) crit.push_back(r.value);
    }
    double hi = positive_root_bound(a) * (1.0 + 1e-12);
    std::vector<double> knots{0.0};
    for (double c : crit)
        if (c > 0.0 && c < hi) knots.push_back(c);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());

    // roots sitting exactly on a critical knot (tangencies, saddle crossings)
    auto knot_root = [&](double x) {
        double scale = poly_scale(a, x);
        return scale > 0.0 && std::abs(eval_poly(a, x)) <= 1e-11 * scale;
    };
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
        double k = knots[i];
        if (!knot_root(k)) continue;
        double w = std::min(k - knots[i - 1], knots[i + 1] - k);
        double sl = eval_poly(a, k - 1e-7 * w), sr = eval_poly(a, k + 1e-7 * w);
        int mult = ((sl <= 0.0) == (sr <= 0.0)) ? 2 : 1;
        out.push_back({k, k - 1e-7 * w, k + 1e-7 * w, mult});
    }

    // monotone bisection on each open interval, endpoints nudged off knot roots
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        double lo = knots[i], up = knots[i + 1];
        double w = up - lo;
        double lo2 = lo + 1e-7 * w, up2 = up - 1e-7 * w;
        double flo = eval_poly(a, lo2), fup = eval_poly(a, up2);
        if ((flo <= 0.0) != (fup <= 0.0)) {
            double root = bisect(a, lo2, up2, tol);
            if (root > 0.0) out.push_back({root, lo2, up2, 1});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.value < y.value; });
    return out;
}

std::vector<double> scan_positive_roots(const std::vector<double>& a, double hi, int n) {
    std::vector<double> out;
    double prev_x = hi / n * 1e-3;
    double prev_f = eval_poly(a, prev_x);
    for (int i = 1; i <= n; ++i) {
        double x = hi * (double)i / n;
        double f = eval_poly(a, x);
        if ((prev_f <= 0.0) != (f <= 0.0)) out.push_back(bisect(a, prev_x, x, 1e-13));
        prev_x = x;
        prev_f = f;
    }
    return out;
}

std::vector<double> PedalEquation::solve_q_all(double r) const {
    std::vector<double> poly;
    for (const auto& ps : coeffs()) poly.push_back(ps.eval(r));
    std::vector<double> roots;
    for (const auto& root : isolate_positive_roots(poly)) roots.push_back(root.value);
    return roots;
}

} // namespace pedal
