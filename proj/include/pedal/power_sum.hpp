#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "pedal/coeff.hpp"

namespace pedal {

// Finite sum  sum_i c_i r^{e_i}  with exact rational exponents. The coefficient
// ring of everything symbolic in this project. Normal form: one term per
// exponent, no exact zeros, float coefficients below 1e-12 of the largest
// magnitude dropped as cancellation dust.
class PowerSum {
public:
    using Terms = std::map<Rational, Coeff>;

    PowerSum() = default;
    explicit PowerSum(const Coeff& constant) {
        if (!constant.is_zero()) terms_[Rational(0)] = constant;
    }
    static PowerSum term(const Rational& exponent, const Coeff& c) {
        PowerSum p;
        if (!c.is_zero()) p.terms_[exponent] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Rational(0));
    }
    Coeff constant_value() const {
        auto it = terms_.find(Rational(0));
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    std::size_t size() const { return terms_.size(); }

    Rational min_exponent() const { return terms_.empty() ? Rational(0) : terms_.begin()->first; }
    Rational max_exponent() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->first; }

    Coeff coeff(const Rational& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Rational& e, const Coeff& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void normalize() {
        double maxmag = 0.0;
        for (const auto& [e, c] : terms_) maxmag = std::max(maxmag, std::abs(c.value()));
        for (auto it = terms_.begin(); it != terms_.end();) {
            const Coeff& c = it->second;
            bool drop = c.is_zero();
            if (!drop && !c.exact() && std::abs(c.value()) <= 1e-12 * maxmag) drop = true;
            it = drop ? terms_.erase(it) : std::next(it);
        }
    }

    friend PowerSum operator-(const PowerSum& a) {
        PowerSum out;
        for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
        return out;
    }

    friend PowerSum operator+(const PowerSum& a, const PowerSum& b) {
        PowerSum out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        out.normalize();
        return out;
    }
    friend PowerSum operator-(const PowerSum& a, const PowerSum& b) { return a + (-b); }

    friend PowerSum operator*(const PowerSum& a, const PowerSum& b) {
        PowerSum out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        out.normalize();
        return out;
    }

    PowerSum scaled(const Coeff& k) const {
        PowerSum out;
        if (k.is_zero()) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * k;
        out.normalize();
        return out;
    }

    // multiply by k * r^e
    PowerSum shifted(const Rational& e, const Coeff& k = Coeff(1)) const {
        PowerSum out;
        if (k.is_zero()) return out;
        for (const auto& [ei, c] : terms_) out.terms_[ei + e] = c * k;
        out.normalize();
        return out;
    }

    PowerSum pow_int(unsigned n) const {
        PowerSum out(Coeff(1));
        PowerSum base = *this;
        while (n > 0) {
            if (n & 1) out = out * base;
            if (n > 1) base = base * base;
            n >>= 1;
        }
        return out;
    }

    double eval(double r) const {
        if (r <= 0.0) fail("DomainError", "PowerSum evaluated at r <= 0");
        double s = 0.0;
        for (const auto& [e, c] : terms_) s += c.value() * std::pow(r, e.to_double());
        return s;
    }

    // d/dr, term-wise exact
    PowerSum derivative() const {
        PowerSum out;
        for (const auto& [e, c] : terms_) {
            if (e.is_zero()) continue;
            out.add_term(e - Rational(1), c * Coeff(e));
        }
        out.normalize();
        return out;
    }

    // r -> k * r^gamma:  (e -> c) becomes (gamma*e -> c * k^e)
    PowerSum substitute_power(const Coeff& k, const Rational& gamma) const {
        PowerSum out;
        for (const auto& [e, c] : terms_) out.add_term(gamma * e, c * k.pow_rational(e));
        out.normalize();
        return out;
    }

    bool integer_exponents() const {
        for (const auto& [e, c] : terms_)
            if (!e.is_integer()) return false;
        return true;
    }

    // lcm of exponent denominators (for r = u^m substitutions)
    std::int64_t exponent_denominator_lcm() const {
        std::int64_t m = 1;
        for (const auto& [e, c] : terms_) m = lcm_i64(m, e.den());
        return m;
    }

    // exact equality (term-by-term); float coefficients compare bit-equal
    friend bool operator==(const PowerSum& a, const PowerSum& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }

    // numeric closeness of two power sums, relative to largest coefficient
    static bool close(const PowerSum& a, const PowerSum& b, double tol) {
        PowerSum d = a - b;
        double scale = 0.0;
        for (const auto& [e, c] : a.terms_) scale = std::max(scale, std::abs(c.value()));
        for (const auto& [e, c] : b.terms_) scale = std::max(scale, std::abs(c.value()));
        if (scale == 0.0) return d.is_zero();
        for (const auto& [e, c] : d.terms_)
            if (std::abs(c.value()) > tol * scale) return false;
        return true;
    }

    std::string str(const std::string& var = "r") const;

private:
    Terms terms_;
};

// render with ascending exponents: "2/r - 1" , "3/r^2 + 2/r - 1", "r^2 + 4"
inline std::string PowerSum::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        double v = c.value();
        bool neg = c.exact() ? c.rat().sign() < 0 : v < 0.0;
        Coeff mag = neg ? -c : c;
        std::string cs = mag.str();
        std::string piece;
        if (e.is_zero()) {
            piece = cs;
        } else {
            std::string pw;
            if (e == Rational(1)) pw = var;
            else if (e == Rational(-1)) pw = var;   // handled by "/" below
            else if ((e > Rational(0) ? e : -e).is_integer())
                pw = var + "^" + (e > Rational(0) ? e : -e).str();
            else
                pw = var + "^(" + (e > Rational(0) ? e : -e).str() + ")";
            if (e > Rational(0))
                piece = (cs == "1") ? pw : cs + "*" + pw;
            else
                piece = cs + "/" + pw;
        }
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

} // namespace pedal
