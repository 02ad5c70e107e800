#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "pedal/rational.hpp"

namespace pedal {

// Coefficient with an exact-rational fast path. Arithmetic stays exact while
// both operands are exact and fit int64; otherwise it degrades to double.
class Coeff {
public:
    Coeff() : exact_(true), rat_(0), val_(0.0) {}
    Coeff(int n) : exact_(true), rat_(n), val_(double(n)) {}
    Coeff(std::int64_t n) : exact_(true), rat_(n), val_(double(n)) {}
    Coeff(const Rational& r) : exact_(true), rat_(r), val_(r.to_double()) {}
    Coeff(double v) : exact_(false), rat_(0), val_(v) {
        // integral doubles re-enter the exact track (CLI flags arrive as doubles)
        if (std::floor(v) == v && std::abs(v) < 1e15) {
            exact_ = true;
            rat_ = Rational((std::int64_t)v);
        }
    }

    static Coeff inexact(double v) {
        Coeff c;
        c.exact_ = false;
        c.rat_ = Rational(0);
        c.val_ = v;
        return c;
    }

    bool exact() const { return exact_; }
    const Rational& rat() const { return rat_; }
    double value() const { return val_; }
    bool is_zero() const { return exact_ ? rat_.is_zero() : val_ == 0.0; }

    friend Coeff operator-(const Coeff& a) {
        if (a.exact_) return Coeff(-a.rat_);
        return inexact(-a.val_);
    }

#define PEDAL_COEFF_BINOP(op)                                          \
    friend Coeff operator op(const Coeff& a, const Coeff& b) {         \
        if (a.exact_ && b.exact_) {                                    \
            try {                                                      \
                return Coeff(a.rat_ op b.rat_);                        \
            } catch (const Error&) { /* overflow: degrade */ }         \
        }                                                              \
        return inexact(a.val_ op b.val_);                              \
    }
    PEDAL_COEFF_BINOP(+)
    PEDAL_COEFF_BINOP(-)
    PEDAL_COEFF_BINOP(*)
#undef PEDAL_COEFF_BINOP

    friend Coeff operator/(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_ && !b.rat_.is_zero()) {
            try {
                return Coeff(a.rat_ / b.rat_);
            } catch (const Error&) {}
        }
        return inexact(a.val_ / b.val_);
    }

    Coeff pow_int(long n) const {
        if (exact_) {
            try {
                return Coeff(rat_.pow_int(n));
            } catch (const Error&) {}
        }
        return inexact(std::pow(val_, (double)n));
    }

    // c^e for rational e; exact for integer e and for perfect rational roots
    Coeff pow_rational(const Rational& e) const {
        if (e.is_integer()) return pow_int(e.num());
        if (exact_) {
            if (auto root = rational_root(rat_, e.den())) return root->pow_int(e.num());
        }
        double v = std::pow(val_, e.to_double());
        if (std::isnan(v) && val_ < 0.0) {
            // negative base with odd-denominator exponent has a real value
            if (e.den() % 2 == 1) {
                double mag = std::pow(-val_, e.to_double());
                v = (e.num() % 2 == 0) ? mag : -mag;
            }
        }
        return inexact(v);
    }

    // exact equality when both exact; otherwise bit equality of doubles
    friend bool operator==(const Coeff& a, const Coeff& b) {
        if (a.exact_ && b.exact_) return a.rat_ == b.rat_;
        return a.val_ == b.val_;
    }

    std::string str() const {
        if (exact_) return rat_.str();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", val_);
        return buf;
    }

private:
    // exact d-th root of a rational, when one exists
    static std::optional<Coeff> rational_root(const Rational& r, std::int64_t d) {
        auto iroot = [](std::int64_t v, std::int64_t k) -> std::optional<std::int64_t> {
            if (v < 0 && k % 2 == 0) return std::nullopt;
            double guess = std::copysign(std::pow(std::abs((double)v), 1.0 / k), (double)v);
            for (std::int64_t cand = (std::int64_t)std::llround(guess) - 1;
                 cand <= (std::int64_t)std::llround(guess) + 1; ++cand) {
                __int128 acc = 1;
                for (std::int64_t i = 0; i < k; ++i) {
                    acc *= cand;
                    if (acc > INT64_MAX || acc < INT64_MIN) { acc = INT64_MAX; break; }
                }
                if ((std::int64_t)acc == v) return cand;
            }
            return std::nullopt;
        };
        auto n = iroot(r.num(), d);
        auto den = iroot(r.den(), d);
        if (n && den) return Coeff(Rational(*n, *den));
        return std::nullopt;
    }

    bool exact_;
    Rational rat_;
    double val_;
};

inline Coeff rational(std::int64_t n, std::int64_t d) { return Coeff(Rational(n, d)); }

} // namespace pedal
