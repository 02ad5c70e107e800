#include "pedal/chain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "pedal/transforms.hpp"

namespace pedal {

namespace {

ChainEquation::Mono trim(ChainEquation::Mono m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

} // namespace

void ChainEquation::add_term(Mono m, const Coeff& c) {
    if (c.is_zero()) return;
    m = trim(std::move(m));
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[std::move(m)] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChainEquation operator-(const ChainEquation& a) {
    ChainEquation out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

ChainEquation operator+(const ChainEquation& a, const ChainEquation& b) {
    ChainEquation out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

ChainEquation operator-(const ChainEquation& a, const ChainEquation& b) { return a + (-b); }

ChainEquation operator*(const ChainEquation& a, const ChainEquation& b) {
    ChainEquation out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ChainEquation::Mono m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

ChainEquation ChainEquation::pow_int(unsigned n) const {
    ChainEquation out;
    out.add_term({}, Coeff(1));
    ChainEquation base = *this;
    while (n > 0) {
        if (n & 1) out = out * base;
        if (n > 1) base = base * base;
        n >>= 1;
    }
    return out;
}

int ChainEquation::max_index() const {
    int n = -1;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) n = std::max(n, (int)m.size() - 1);
    return n;
}

bool ChainEquation::uses(int k) const {
    for (const auto& [m, c] : terms_)
        if ((int)m.size() > k && m[k] != 0) return true;
    return false;
}

ChainEquation ChainEquation::evolute() const {
    if (uses(0))
        fail("NotShiftable", "evolute requires an equation in D_1..D_n with no bare D_0 = p");
    ChainEquation out;
    for (const auto& [m, c] : terms_) {
        Mono shifted(m.begin() + std::min<std::size_t>(1, m.size()), m.end());
        out.add_term(std::move(shifted), c);
    }
    return out;
}

ChainEquation ChainEquation::inverse_evolute() const {
    ChainEquation out;
    for (const auto& [m, c] : terms_) {
        Mono shifted(m.size() + 1, 0);
        for (std::size_t i = 0; i < m.size(); ++i) shifted[i + 1] = m[i];
        out.add_term(std::move(shifted), c);
    }
    return out;
}

ChainEquation ChainEquation::first_integral(const Coeff& c0) const {
    // the two worked patterns, both second order (D_2 = p_c p_c' = (p_c^2)'/2)
    if (max_index() != 2)
        fail("NotShiftable", "closed-form first integrals cover second-order chains only");
    // pattern 1: D_2 linear with a constant coefficient plus a polynomial in D_0:
    //   k D_2 + g(D_0) = 0  ->  D_1^2 + 2 G(D_0) = c0 with G' = g/k
    {
        Coeff top;
        ChainEquation g;
        bool ok = true;
        for (const auto& [m, c] : terms_) {
            if ((int)m.size() == 3 && m[2] == 1 && m[0] == 0 && m[1] == 0) top = c;
            else if (m.size() <= 1) g.add_term(m, c);
            else { ok = false; break; }
        }
        if (ok && !top.is_zero()) {
            ChainEquation out;
            out.add_term({0, 2}, Coeff(1)); // D_1^2
            for (const auto& [m, c] : g.terms_) {
                int deg = m.empty() ? 0 : m[0];
                Mono up{deg + 1};
                out.add_term(std::move(up), Coeff(2) * c / (top * Coeff(deg + 1)));
            }
            out.add_term({}, -c0);
            return out;
        }
    }
    // pattern 2: D_2^2 + D_1^2 = s  ->  D_1^2 + (D_0 - c0)^2 = s
    {
        Coeff ctop, cprev, constant;
        bool ok = true;
        for (const auto& [m, c] : terms_) {
            if (m.empty()) constant = c;
            else if (m == Mono{0, 0, 2}) ctop = c;
            else if (m == Mono{0, 2}) cprev = c;
            else { ok = false; break; }
        }
        if (ok && ctop == cprev && !ctop.is_zero()) {
            Coeff s = -(constant / ctop);
            ChainEquation out;
            out.add_term({0, 2}, Coeff(1));
            out.add_term({2}, Coeff(1));
            out.add_term({1}, Coeff(-2) * c0);
            out.add_term({}, c0 * c0 - s);
            return out;
        }
    }
    fail("NotShiftable", "no closed-form first integral for this chain equation");
}

ChainEquation ChainEquation::scaled_curve(const Coeff& alpha) const {
    ChainEquation out;
    for (const auto& [m, c] : terms_) {
        int total = 0;
        for (int e : m) total += e;
        out.add_term(m, c * alpha.pow_int(total));
    }
    return out;
}

PrPoly ChainEquation::to_pr() const {
    if (max_index() > 1)
        fail("NotReducibleToQ", "chain equation involves D_" + std::to_string(max_index()) +
             "; only D_0, D_1 reduce to (p, r)");
    // split by parity of the D_1 exponent: A(p, pc^2) + pc B(p, pc^2)
    PrPoly even, odd;
    for (const auto& [m, c] : terms_) {
        int e0 = m.size() > 0 ? m[0] : 0;
        int e1 = m.size() > 1 ? m[1] : 0;
        // pc^2 = r^2 - p^2: expand (r^2 - p^2)^{e1/2} as a PrPoly
        PrPoly piece;
        piece.add_term(e0, PowerSum(c));
        int half = e1 / 2;
        if (half > 0) {
            PrPoly r2p2;
            r2p2.add_term(0, PowerSum::term(Rational(2), Coeff(1)));
            r2p2.add_term(2, PowerSum(Coeff(-1)));
            piece = piece * r2p2.pow_int((unsigned)half);
        }
        if (e1 % 2 == 0) even = even + piece;
        else odd = odd + piece;
    }
    if (odd.is_zero()) return even;
    // A + pc B = 0 -> A^2 = (r^2 - p^2) B^2
    PrPoly r2p2;
    r2p2.add_term(0, PowerSum::term(Rational(2), Coeff(1)));
    r2p2.add_term(2, PowerSum(Coeff(-1)));
    return even * even - r2p2 * odd * odd;
}

double ChainEquation::eval(const std::vector<double>& values) const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.value();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= values.at(i);
        s += t;
    }
    return s;
}

std::string ChainEquation::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.value() < 0.0;
        Coeff mag = neg ? -c : c;
        std::string piece = mag.str();
        bool unit = piece == "1";
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "D" + std::to_string(i);
            if (m[i] != 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            // constant term keeps its magnitude
        } else {
            piece = unit ? vars : piece + "*" + vars;
        }
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out + " = 0";
}

namespace {

// evaluate the ODE AST over chain polynomials
ChainEquation eval_chain(const AstPtr& a, const ConstTable& constants) {
    switch (a->kind) {
    case Ast::Number: {
        ChainEquation out;
        out.add_term({}, Coeff(a->value));
        return out;
    }
    case Ast::Ident: {
        const std::string& n = a->name;
        auto symbol = [](int k) {
            ChainEquation out;
            ChainEquation::Mono m(k + 1, 0);
            m[k] = 1;
            out.add_term(std::move(m), Coeff(1));
            return out;
        };
        if (n == "r") return symbol(0);
        if ((n.size() == 2 && n[0] == 'r' && std::isdigit((unsigned char)n[1])) ||
            (n.size() == 3 && n[0] == 'a' && n[1] == 'r' && std::isdigit((unsigned char)n[2]))) {
            int k = n[0] == 'a' ? n[2] - '0' : n[1] - '0';
            if (k >= 1) return symbol(k);
        }
        auto it = constants.find(n);
        if (it == constants.end())
            fail("SyntaxError", "unknown identifier '" + n + "' in polar ODE");
        ChainEquation out;
        out.add_term({}, it->second);
        return out;
    }
    case Ast::Add: return eval_chain(a->lhs, constants) + eval_chain(a->rhs, constants);
    case Ast::Sub: return eval_chain(a->lhs, constants) - eval_chain(a->rhs, constants);
    case Ast::Mul: return eval_chain(a->lhs, constants) * eval_chain(a->rhs, constants);
    case Ast::Div: {
        ChainEquation d = eval_chain(a->rhs, constants);
        if (d.terms().size() != 1 || !d.terms().begin()->first.empty())
            fail("SyntaxError", "polar ODEs may divide by constants only");
        ChainEquation n = eval_chain(a->lhs, constants);
        ChainEquation out;
        for (const auto& [m, c] : n.terms()) out.add_term(m, c / d.terms().begin()->second);
        return out;
    }
    case Ast::Neg: return -eval_chain(a->lhs, constants);
    case Ast::Pow: {
        if (!a->value.is_integer() || a->value.sign() < 0)
            fail("SyntaxError", "polar ODE powers must be nonnegative integers");
        return eval_chain(a->lhs, constants).pow_int((unsigned)a->value.num());
    }
    }
    fail("SyntaxError", "corrupt expression tree");
}

// collect which plain-derivative symbols rk appear and their powers' parity
void check_odd_parity(const AstPtr& a, std::map<int, bool>& odd_seen, int outer_pow = 1) {
    // parity tracking through products is subtle; instead expand at the
    // polynomial level below. This pass only records plain odd symbols.
    (void)outer_pow;
    if (!a) return;
    if (a->kind == Ast::Ident && a->name.size() == 2 && a->name[0] == 'r' &&
        std::isdigit((unsigned char)a->name[1])) {
        int k = a->name[1] - '0';
        if (k >= 1 && k % 2 == 1) odd_seen[k] = true;
    }
    check_odd_parity(a->lhs, odd_seen);
    check_odd_parity(a->rhs, odd_seen);
}

} // namespace

ChainEquation chain_from_polar_ode(const std::string& ode_text, const ConstTable& constants) {
    AstPtr ast = ode_text.find('=') != std::string::npos ? parse_equation_ast(ode_text)
                                                         : parse_expression(ode_text);
    std::map<int, bool> plain_odd;
    check_odd_parity(ast, plain_odd);
    ChainEquation chain = eval_chain(ast, constants);
    // the proposition requires odd-order plain derivatives to even powers only
    if (!plain_odd.empty()) {
        for (const auto& [m, c] : chain.terms())
            for (const auto& [k, seen] : plain_odd)
                if ((int)m.size() > k && m[k] % 2 == 1)
                    fail("OddFirstDerivative",
                         "r" + std::to_string(k) + " appears to an odd power; " +
                         "use ar" + std::to_string(k) + " for |d^" + std::to_string(k) +
                         "r/dphi^" + std::to_string(k) + "|");
    }
    return chain;
}

PedalEquation polar_ode_to_pedal(const std::string& ode_text, const ConstTable& constants) {
    return pedal_transform(chain_from_polar_ode(ode_text, constants).to_pr());
}

PedalEquation contrapedal(const ChainEquation& c) {
    return pedal_transform(c.evolute().to_pr());
}

ChainEquation chain_from_pedal(const PedalEquation& e) {
    // q^j -> p^{2(d-j)}, then r^2 -> D_0^2 + D_1^2
    ChainEquation out;
    std::size_t d = e.degree();
    ChainEquation r2;
    r2.add_term({2}, Coeff(1));
    r2.add_term({0, 2}, Coeff(1));
    for (std::size_t j = 0; j <= d; ++j) {
        for (const auto& [ex, c] : e.coeff(j).terms()) {
            if (!ex.is_integer() || ex.num() % 2 != 0)
                fail("NotReducibleToQ", "chain rewrite requires even powers of r");
            int pexp = 2 * (int)(d - j);
            ChainEquation piece;
            ChainEquation::Mono m = pexp ? ChainEquation::Mono{pexp} : ChainEquation::Mono{};
            piece.add_term(std::move(m), c);
            out = out + piece * r2.pow_int((unsigned)(ex.num() / 2));
        }
    }
    return out;
}

ChainEquation catacaustic(const PedalEquation& e) {
    PrPoly pr;
    std::size_t d = e.degree();
    for (std::size_t j = 0; j <= d; ++j)
        if (!e.coeff(j).is_zero()) pr.add_term(2 * (int)(d - j), e.coeff(j));
    PedalEquation pedal = pedal_transform(pr);
    TransformSpec s_half = named_transform(Tag::S, {rational(1, 2)});
    PedalEquation scaled = apply_transform(s_half, pedal);
    return chain_from_pedal(scaled).evolute();
}

PedalEquation anticatacaustic(const ChainEquation& chain, const Coeff& c) {
    ChainEquation ode = chain.inverse_evolute();
    ChainEquation integrated = ode.first_integral(c);
    ChainEquation scaled = integrated.scaled_curve(Coeff(2)); // S_2 textually
    return antipedal_transform(scaled.to_pr());
}

} // namespace pedal
