#include "pedal/equation.hpp"

namespace pedal {

PedalEquation PrPoly::to_pedal() const {
    if (terms_.empty()) return PedalEquation({PowerSum()});
    // shift so all p-exponents are >= 0
    int pmin = terms_.begin()->first;
    PrPoly shifted;
    for (const auto& [k, ps] : terms_) shifted.add_term(k - std::min(pmin, 0), ps);

    // split into even part A(p^2, r) and odd part p * B(p^2, r)
    PrPoly even, odd;
    for (const auto& [k, ps] : shifted.terms()) {
        if (k % 2 == 0) even.add_term(k, ps);
        else odd.add_term(k - 1, ps);
    }
    PrPoly squared;
    if (odd.is_zero()) {
        squared = even;
    } else {
        // A + pB = 0  ->  A^2 - p^2 B^2 = 0 (merges the +-branch pair exactly)
        PrPoly b2 = odd * odd;
        PrPoly pb2;
        for (const auto& [k, ps] : b2.terms()) pb2.add_term(k + 2, ps);
        squared = even * even - pb2;
    }
    // p^{2m} -> q^{M-m} after multiplying the equation through by q^M
    int mmax = 0;
    for (const auto& [k, ps] : squared.terms()) mmax = std::max(mmax, k / 2);
    std::vector<PowerSum> coeffs(mmax + 1);
    for (const auto& [k, ps] : squared.terms()) coeffs[mmax - k / 2] = coeffs[mmax - k / 2] + ps;
    return PedalEquation(std::move(coeffs));
}

PrPoly PrPoly::pedal_substitution() const {
    // c * p^a * r^e  ->  c * r^a * (r^2/p)^e = c * r^{a+2e} * p^{-e}
    PrPoly out;
    for (const auto& [a, ps] : terms_) {
        for (const auto& [e, c] : ps.terms()) {
            if (!e.is_integer())
                fail("NotReducibleToQ", "pedal substitution requires integer r-exponents, got r^" + e.str());
            int ei = (int)e.num();
            out.add_term(-ei, PowerSum::term(Rational(a + 2 * ei), c));
        }
    }
    return out;
}

PrPoly PrPoly::antipedal_substitution() const {
    // c * p^a * r^e  ->  c * (p^2/r)^a * p^e = c * p^{2a+e} * r^{-a}
    PrPoly out;
    for (const auto& [a, ps] : terms_) {
        for (const auto& [e, c] : ps.terms()) {
            if (!e.is_integer())
                fail("NotReducibleToQ", "antipedal substitution requires integer r-exponents, got r^" + e.str());
            int ei = (int)e.num();
            out.add_term(2 * a + ei, PowerSum::term(Rational(-a), c));
        }
    }
    return out;
}

std::string PedalEquation::str() const {
    if (n_.size() == 1) return n_[0].str() + " = 0";
    // display form: factor the r-power of the leading coefficient out of the
    // whole equation so the top term reads like "1/p^2" or "4/p^2" or "r^4/p^2"
    Rational shift = n_.back().is_zero() ? Rational(0) : n_.back().min_exponent();
    std::vector<PowerSum> disp;
    disp.reserve(n_.size());
    for (const auto& ps : n_) disp.push_back(ps.shifted(-shift));

    std::string lhs;
    for (std::size_t j = n_.size() - 1; j >= 1; --j) {
        const PowerSum& ps = disp[j];
        if (ps.is_zero()) continue;
        std::string pw = "p^" + std::to_string(2 * j);
        std::string piece;
        if (ps.size() == 1) {
            std::string s = ps.str();
            piece = (s == "1") ? "1/" + pw : s + "/" + pw;
            // single negative term: keep the sign in front
        } else {
            piece = "(" + ps.str() + ")/" + pw;
        }
        if (lhs.empty()) {
            lhs = piece;
        } else {
            if (!piece.empty() && piece[0] == '-')
                lhs += " - " + piece.substr(1);
            else
                lhs += " + " + piece;
        }
    }
    if (lhs.empty()) lhs = "0";
    return lhs + " = " + (-disp[0]).str();
}

} // namespace pedal
