#pragma once

#include <optional>
#include <vector>

#include "pedal/power_sum.hpp"

namespace pedal {

// Polynomial identity  sum_j N_j(r) q^j = 0  with q = 1/p^2. Canonical form:
// zero leading coefficients trimmed and the greatest common r-power factored
// out so the minimum exponent across all N_j is 0.
class PedalEquation {
public:
    PedalEquation() = default;
    explicit PedalEquation(std::vector<PowerSum> coeffs) : n_(std::move(coeffs)) {
        canonicalize();
    }

    static PedalEquation linear(PowerSum n1, PowerSum n0) {
        return PedalEquation({std::move(n0), std::move(n1)});
    }

    std::size_t degree() const { return n_.empty() ? 0 : n_.size() - 1; }
    const std::vector<PowerSum>& coeffs() const { return n_; }
    const PowerSum& coeff(std::size_t j) const { return n_[j]; }
    bool is_zero() const { return n_.size() == 1 && n_[0].is_zero(); }

    void canonicalize() {
        if (n_.empty()) n_.push_back(PowerSum());
        for (auto& ps : n_) ps.normalize();
        while (n_.size() > 1 && n_.back().is_zero()) n_.pop_back();
        std::optional<Rational> emin;
        for (const auto& ps : n_) {
            if (ps.is_zero()) continue;
            Rational m = ps.min_exponent();
            if (!emin || m < *emin) emin = m;
        }
        if (emin && !emin->is_zero())
            for (auto& ps : n_) ps = ps.shifted(-*emin);
        normalize_content();
    }

    // divide out the rational content (gcd of exact coefficients), signed so
    // the leading coefficient of N_d comes out positive; transforms that clear
    // denominators then compose to exact identities (I_R I_R = Id and friends)
    void normalize_content() {
        bool all_exact = true;
        for (const auto& ps : n_)
            for (const auto& [e, c] : ps.terms())
                if (!c.exact()) all_exact = false;
        int lead_sign = 0;
        if (!n_.back().is_zero()) {
            const Coeff& lead = n_.back().terms().rbegin()->second;
            lead_sign = lead.value() > 0 ? 1 : lead.value() < 0 ? -1 : 0;
        }
        if (!all_exact) {
            if (lead_sign < 0)
                for (auto& ps : n_) ps = ps.scaled(Coeff(-1));
            return;
        }
        std::int64_t gnum = 0, lden = 1;
        for (const auto& ps : n_)
            for (const auto& [e, c] : ps.terms()) {
                gnum = std::gcd(gnum, c.rat().num() < 0 ? -c.rat().num() : c.rat().num());
                lden = lcm_i64(lden, c.rat().den());
            }
        if (gnum == 0) return;
        Rational content(gnum, lden);
        if (lead_sign < 0) content = -content;
        if (content != Rational(1)) {
            Coeff inv = Coeff(Rational(1) / content);
            for (auto& ps : n_) ps = ps.scaled(inv);
        }
    }

    bool integer_exponents() const {
        for (const auto& ps : n_)
            if (!ps.integer_exponents()) return false;
        return true;
    }

    // exact coefficient equality of canonical forms
    friend bool operator==(const PedalEquation& a, const PedalEquation& b) {
        return a.n_ == b.n_;
    }

    // same equation up to an overall function multiple: cross-multiplied
    // coefficient proportionality N_i^a N_j^b == N_j^a N_i^b. Exact when the
    // products stay rational, else within tol relative.
    static bool equivalent(const PedalEquation& a, const PedalEquation& b, double tol = 1e-9) {
        if (a.n_.size() != b.n_.size()) return false;
        std::size_t n = a.n_.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                PowerSum lhs = a.n_[i] * b.n_[j];
                PowerSum rhs = a.n_[j] * b.n_[i];
                if (!PowerSum::close(lhs, rhs, tol)) return false;
            }
        return true;
    }

    // residual of a sample (r, q), normalized by the largest term magnitude
    double residual(double r, double q) const {
        double sum = 0.0, scale = 0.0, qj = 1.0;
        for (std::size_t j = 0; j < n_.size(); ++j) {
            double t = n_[j].eval(r) * qj;
            sum += t;
            scale = std::max(scale, std::abs(t));
            qj *= q;
        }
        if (scale == 0.0) return 0.0;
        return std::abs(sum) / scale;
    }

    // q(r) for degree-1 equations
    double solve_q_linear(double r) const {
        if (degree() != 1) fail("MultiBranchAmbiguity", "equation has degree " +
                                std::to_string(degree()) + " in q and no root selector");
        double n1 = n_[1].eval(r);
        if (n1 == 0.0) fail("DomainError", "leading q coefficient vanishes at r");
        return -n_[0].eval(r) / n1;
    }

    // positive real roots of sum N_j(r) q^j in q, ascending (declared in roots.cpp)
    std::vector<double> solve_q_all(double r) const;

    std::string str() const;

private:
    std::vector<PowerSum> n_;
};

// Polynomial in p with PowerSum coefficients: the pre-squared (p, r) form used
// by the pedal transform and by equation ingestion.
class PrPoly {
public:
    using Terms = std::map<int, PowerSum>; // p-exponent -> N(r)

    PrPoly() = default;
    explicit PrPoly(const PowerSum& ps) {
        if (!ps.is_zero()) terms_[0] = ps;
    }
    static PrPoly p_power(int k) {
        PrPoly out;
        out.terms_[k] = PowerSum(Coeff(1));
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int pexp, const PowerSum& ps) {
        if (ps.is_zero()) return;
        auto it = terms_.find(pexp);
        if (it == terms_.end()) {
            terms_[pexp] = ps;
        } else {
            it->second = it->second + ps;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PrPoly operator-(const PrPoly& a) {
        PrPoly out;
        for (const auto& [k, ps] : a.terms_) out.terms_[k] = -ps;
        return out;
    }
    friend PrPoly operator+(const PrPoly& a, const PrPoly& b) {
        PrPoly out = a;
        for (const auto& [k, ps] : b.terms_) out.add_term(k, ps);
        return out;
    }
    friend PrPoly operator-(const PrPoly& a, const PrPoly& b) { return a + (-b); }
    friend PrPoly operator*(const PrPoly& a, const PrPoly& b) {
        PrPoly out;
        for (const auto& [ka, pa] : a.terms_)
            for (const auto& [kb, pb] : b.terms_) out.add_term(ka + kb, pa * pb);
        return out;
    }
    PrPoly pow_int(unsigned n) const {
        PrPoly out(PowerSum(Coeff(1)));
        PrPoly base = *this;
        while (n > 0) {
            if (n & 1) out = out * base;
            if (n > 1) base = base * base;
            n >>= 1;
        }
        return out;
    }

    // reduce f(p, r) = 0 to q-form; odd powers of p are squared away
    PedalEquation to_pedal() const;

    // the pedal-transform substitution p <- r, r <- r^2/p (integer r-exponents only)
    PrPoly pedal_substitution() const;
    // the inverse-pedal substitution p <- p^2/r, r <- p
    PrPoly antipedal_substitution() const;

    double eval(double p, double r) const {
        double s = 0.0;
        for (const auto& [k, ps] : terms_) s += ps.eval(r) * std::pow(p, k);
        return s;
    }

private:
    Terms terms_;
};

} // namespace pedal
