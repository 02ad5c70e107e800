#include "pedal/transforms.hpp"

#include <cctype>
#include <cmath>

#include "pedal/parse.hpp"

namespace pedal {

bool RMap::is_identity() const {
    return kind == Identity ||
           (kind == Power && c == Coeff(1) && gamma == Rational(1)) ||
           (kind == Moebius && alpha == Coeff(1) && beta.is_zero()) ||
           (kind == Shift && c.is_zero());
}

RMap RMap::inverse() const {
    switch (kind) {
    case Identity: return identity();
    case Power: {
        // r = c s^g  ->  s = (r/c)^{1/g} = c^{-1/g} r^{1/g}
        Rational ig = Rational(1) / gamma;
        return power(c.pow_rational(-ig), ig);
    }
    case Moebius: // r = a s/(1-b s) -> s = r/(a + b r) = (1/a) r / (1 - (-b/a) r)
        return moebius(Coeff(1) / alpha, -(beta / alpha));
    case Shift: return shift(-c);
    }
    return identity();
}

double RMap::eval(double r) const {
    switch (kind) {
    case Identity: return r;
    case Power: return c.value() * std::pow(r, gamma.to_double());
    case Moebius: return alpha.value() * r / (1.0 - beta.value() * r);
    case Shift: return r - c.value();
    }
    return r;
}

PowerSum RMap::den_base() const {
    switch (kind) {
    case Moebius: { // 1 - b r
        PowerSum b(Coeff(1));
        b.add_term(Rational(1), -beta);
        return b;
    }
    case Shift: { // r - c
        PowerSum b = PowerSum::term(Rational(1), Coeff(1));
        b.add_term(Rational(0), -c);
        return b;
    }
    default: return PowerSum(Coeff(1));
    }
}

std::pair<PowerSum, int> RMap::substitute(const PowerSum& ps) const {
    switch (kind) {
    case Identity:
        return {ps, 0};
    case Power:
        return {ps.substitute_power(c, gamma), 0};
    case Moebius:
    case Shift: {
        if (!ps.integer_exponents())
            fail("NonIntegerExponent", "substitution r -> " +
                 std::string(kind == Moebius ? "a*r/(1-b*r)" : "r-c") +
                 " requires integer exponents");
        PowerSum base = den_base();
        long emax = 0, emin = 0;
        for (const auto& [e, co] : ps.terms()) {
            emax = std::max(emax, e.num());
            emin = std::min(emin, e.num());
        }
        int dpow = (int)std::max<long>(kind == Moebius ? emax : -emin, 0);
        PowerSum out;
        for (const auto& [e, co] : ps.terms()) {
            long ei = e.num();
            if (kind == Moebius) {
                // c r^e -> c a^e r^e (1-br)^{-e}; times (1-br)^{dpow}
                PowerSum t = base.pow_int((unsigned)(dpow - ei));
                out = out + t.shifted(Rational(ei), co * alpha.pow_int(ei));
            } else {
                // c r^e -> c (r-cc)^e; times (r-cc)^{dpow}
                PowerSum t = base.pow_int((unsigned)(ei + dpow));
                out = out + t.scaled(co);
            }
        }
        out.normalize();
        return {out, dpow};
    }
    }
    return {ps, 0};
}

PowerSum RMap::inverse_square() const {
    switch (kind) {
    case Identity:
        return PowerSum::term(Rational(-2), Coeff(1));
    case Power: // 1/(c r^g)^2
        return PowerSum::term(Rational(-2) * gamma, (c * c).pow_int(-1));
    case Moebius: { // (1-br)^2 / (a^2 r^2)
        PowerSum num = den_base().pow_int(2);
        return num.shifted(Rational(-2), (alpha * alpha).pow_int(-1));
    }
    case Shift:
        fail("NonIntegerExponent", "T_f with a shift map is not in the representable class");
    }
    return PowerSum();
}

double RMap::tf_integrand(double r) const {
    switch (kind) {
    case Identity: return 1.0;
    case Power: // f' r^2 / f^2 = g/(c r^{g}) * r
        return gamma.to_double() * r / (c.value() * std::pow(r, gamma.to_double()));
    case Moebius: // f' = a/(1-br)^2, f^2 = a^2 r^2/(1-br)^2 -> 1/a
        return 1.0 / alpha.value();
    case Shift: return r * r / ((r - c.value()) * (r - c.value()));
    }
    return 1.0;
}

std::string tag_name(Tag t) {
    switch (t) {
    case Tag::S: return "S";
    case Tag::I: return "I";
    case Tag::M: return "M";
    case Tag::H: return "H";
    case Tag::Estar: return "Estar";
    case Tag::A: return "A";
    case Tag::B: return "B";
    case Tag::F: return "F";
    case Tag::Epar: return "Epar";
    case Tag::P: return "P";
    case Tag::Pinv: return "Pinv";
    case Tag::Dual: return "Dual";
    case Tag::Tf: return "Tf";
    case Tag::Pipeline: return "pipeline";
    }
    return "?";
}

std::string TransformSpec::str() const {
    if (tag == Tag::Pipeline) {
        std::string out;
        for (std::size_t i = 0; i < pipeline.size(); ++i) {
            if (i) out += " * ";
            out += pipeline[i].str();
        }
        return out;
    }
    std::string out = tag_name(tag);
    if (!params.empty()) {
        out += "(";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) out += ", ";
            out += params[i].str();
        }
        out += ")";
    }
    return out;
}

namespace {

PowerSum ps_const(const Coeff& c) { return PowerSum(c); }
PowerSum ps_rpow(const Rational& e, const Coeff& c = Coeff(1)) { return PowerSum::term(e, c); }

} // namespace

TransformSpec named_transform(Tag tag, const std::vector<Coeff>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            fail("InvalidParam", tag_name(tag) + " takes " + std::to_string(n) + " parameter(s)");
    };
    TransformSpec t;
    t.tag = tag;
    t.params = params;
    switch (tag) {
    case Tag::S: { // (p, r) -> (a p, a r): q -> q/a^2, r -> a r
        need(1);
        const Coeff& a = params[0];
        if (a.is_zero()) fail("InvalidParam", "S requires alpha != 0");
        t.r_map = RMap::power(a, Rational(1));
        t.q_map.A = ps_const(Coeff(1) / (a * a));
        break;
    }
    case Tag::I: { // (p, r) -> (R p/r^2, R/r): q -> r^4 q / R^2
        need(1);
        const Coeff& R = params[0];
        if (!(R.value() > 0.0)) fail("InvalidParam", "I requires R > 0");
        t.r_map = RMap::power(R, Rational(-1));
        t.q_map.A = ps_rpow(Rational(4), Coeff(1) / (R * R));
        break;
    }
    case Tag::M: { // (p, r) -> (r^{a-1} p, r^a): q -> r^{2-2a} q
        need(1);
        const Coeff& a = params[0];
        if (!a.exact() || a.rat().is_zero())
            fail("InvalidParam", "M requires a nonzero rational exponent");
        t.r_map = RMap::power(Coeff(1), a.rat());
        t.q_map.A = ps_rpow(Rational(2) - Rational(2) * a.rat());
        break;
    }
    case Tag::H: { // q -> k^2 q - (k^2 - 1)/r^2
        need(1);
        const Coeff& k = params[0];
        if (k.is_zero()) fail("InvalidParam", "H requires k != 0");
        Coeff k2 = k * k;
        t.q_map.A = ps_const(k2);
        t.q_map.B = ps_rpow(Rational(-2), -(k2 - Coeff(1)));
        break;
    }
    case Tag::Estar: { // q -> q - 2c/r + c^2, r -> r/(1-cr)
        need(1);
        const Coeff& c = params[0];
        t.r_map = RMap::moebius(Coeff(1), c);
        t.q_map.B = ps_rpow(Rational(-1), Coeff(-2) * c) + ps_const(c * c);
        break;
    }
    case Tag::A: { // curve level q -> (q + 2w + w^2 r^2)/(1+w r^2)^2;
                   // equation level is the inverse: q -> (1+w r^2)^2 q - 2w - w^2 r^2
        need(1);
        const Coeff& w = params[0];
        PowerSum one_wr2 = ps_const(Coeff(1)) + ps_rpow(Rational(2), w);
        t.q_map.A = one_wr2 * one_wr2;
        t.q_map.B = -(ps_const(Coeff(2) * w) + ps_rpow(Rational(2), w * w));
        break;
    }
    case Tag::B: { // equation level: q -> (1+a r)^2 q - 2a/r - a^2  (= M_{1/2} A_a M_2)
        need(1);
        const Coeff& a = params[0];
        PowerSum one_ar = ps_const(Coeff(1)) + ps_rpow(Rational(1), a);
        t.q_map.A = one_ar * one_ar;
        t.q_map.B = -(ps_rpow(Rational(-1), Coeff(2) * a) + ps_const(a * a));
        break;
    }
    case Tag::F: { // q -> (r^4 q - 2cr + c^2)/(r-c)^4, r -> r - c
        need(1);
        const Coeff& c = params[0];
        t.r_map = RMap::shift(c);
        t.q_map.A = ps_rpow(Rational(4));
        t.q_map.B = ps_rpow(Rational(1), Coeff(-2) * c) + ps_const(c * c);
        t.q_map.D = RMap::shift(c).den_base().pow_int(4);
        break;
    }
    case Tag::Epar:
        need(1);
        break; // numeric only; apply_transform rejects
    case Tag::P:
    case Tag::Pinv:
        need(0);
        break; // handled through the PrPoly route
    case Tag::Dual: { // D_R = I_R P: f(p, r) -> f(R/r, R/p)
        need(1);
        if (!(params[0].value() > 0.0)) fail("InvalidParam", "Dual requires R > 0");
        break;
    }
    case Tag::Tf:
    case Tag::Pipeline:
        fail("InvalidParam", "use tf_transform_spec / compose for this tag");
    }
    return t;
}

TransformSpec tf_transform_spec(const RMap& f, const Coeff& k) {
    if (k.is_zero()) fail("InvalidParam", "T_f requires k != 0");
    TransformSpec t;
    t.tag = Tag::Tf;
    t.params = {k};
    t.tf_f = f;
    t.r_map = f;
    Coeff k2 = k * k;
    t.q_map.A = ps_const(k2);
    t.q_map.B = ps_rpow(Rational(-2), -k2) + f.inverse_square();
    return t;
}

TransformSpec compose(std::vector<TransformSpec> list) {
    if (list.empty()) fail("InvalidParam", "compose requires a nonempty list");
    if (list.size() == 1) return list[0];
    TransformSpec t;
    t.tag = Tag::Pipeline;
    for (auto& it : list) {
        if (it.tag == Tag::Pipeline)
            for (auto& inner : it.pipeline) t.pipeline.push_back(std::move(inner));
        else
            t.pipeline.push_back(std::move(it));
    }
    return t;
}

namespace {

unsigned long long binomial(unsigned n, unsigned m) {
    unsigned long long out = 1;
    for (unsigned i = 0; i < m; ++i) out = out * (n - i) / (i + 1);
    return out;
}

PedalEquation apply_affine(const TransformSpec& t, const PedalEquation& e) {
    std::size_t d = e.degree();
    // r-substitution with common denominator base^K
    PowerSum base = t.r_map.den_base();
    std::vector<PowerSum> nums(d + 1);
    std::vector<int> dpow(d + 1, 0);
    int K = 0;
    for (std::size_t j = 0; j <= d; ++j) {
        auto [num, k] = t.r_map.substitute(e.coeff(j));
        nums[j] = std::move(num);
        dpow[j] = k;
        K = std::max(K, k);
    }
    for (std::size_t j = 0; j <= d; ++j)
        if (dpow[j] < K) nums[j] = nums[j] * base.pow_int((unsigned)(K - dpow[j]));

    // q-substitution: sum_j N~_j (A q + B)^j D^{d-j}
    std::vector<PowerSum> apow(d + 1), bpow(d + 1), Dpow(d + 1);
    apow[0] = bpow[0] = Dpow[0] = PowerSum(Coeff(1));
    for (std::size_t j = 1; j <= d; ++j) {
        apow[j] = apow[j - 1] * t.q_map.A;
        bpow[j] = bpow[j - 1] * t.q_map.B;
        Dpow[j] = Dpow[j - 1] * t.q_map.D;
    }
    std::vector<PowerSum> out(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        if (nums[j].is_zero()) continue;
        PowerSum lead = nums[j] * Dpow[d - j];
        for (std::size_t m = 0; m <= j; ++m) {
            PowerSum term = lead * apow[m] * bpow[j - m];
            out[m] = out[m] + term.scaled(Coeff((std::int64_t)binomial((unsigned)j, (unsigned)m)));
        }
    }
    return PedalEquation(std::move(out));
}

PrPoly equation_to_pr(const PedalEquation& e) {
    // q^j -> p^{2(d-j)} after multiplying through by p^{2d}
    PrPoly out;
    std::size_t d = e.degree();
    for (std::size_t j = 0; j <= d; ++j)
        if (!e.coeff(j).is_zero()) out.add_term(2 * (int)(d - j), e.coeff(j));
    return out;
}

} // namespace

PedalEquation pedal_transform(const PrPoly& e) {
    return e.pedal_substitution().to_pedal();
}

PedalEquation antipedal_transform(const PrPoly& e) {
    return e.antipedal_substitution().to_pedal();
}

PedalEquation apply_transform(const TransformSpec& t, const PedalEquation& e) {
    switch (t.tag) {
    case Tag::Pipeline: {
        PedalEquation out = e;
        for (auto it = t.pipeline.rbegin(); it != t.pipeline.rend(); ++it)
            out = apply_transform(*it, out);
        return out;
    }
    case Tag::Epar:
        fail("NumericOnlyTransform",
             "E_c (parallel) leaves the q-polynomial class; use the pointwise form");
    case Tag::P:
        return pedal_transform(equation_to_pr(e));
    case Tag::Pinv:
        return antipedal_transform(equation_to_pr(e));
    case Tag::Dual: { // f(p,r) -> f(R/r, R/p): p^a r^e -> R^{a+e} p^{-e} r^{-a}
        const Coeff& R = t.params[0];
        PrPoly pr = equation_to_pr(e);
        PrPoly out;
        for (const auto& [a, ps] : pr.terms()) {
            for (const auto& [ex, c] : ps.terms()) {
                if (!ex.is_integer())
                    fail("NonIntegerExponent", "Dual requires integer exponents");
                int ei = (int)ex.num();
                out.add_term(-ei, PowerSum::term(Rational(-a), c * R.pow_int(a + ei)));
            }
        }
        return out.to_pedal();
    }
    default:
        return apply_affine(t, e);
    }
}

PedalEquation t_f_transform(const PedalEquation& e, const RMap& f, const Coeff& k) {
    return apply_transform(tf_transform_spec(f, k), e);
}

namespace {

RP pointwise_one(const TransformSpec& t, RP s) {
    double r = s.r, p = s.p;
    double q = 1.0 / (p * p);
    auto from_q = [&](double rn, double qn) {
        if (!(qn > 0.0))
            fail("DomainError", "pointwise transform leaves the pedal domain (q <= 0)");
        return RP{rn, 1.0 / std::sqrt(qn)};
    };
    switch (t.tag) {
    case Tag::S: { // inverse of (p,r) <- (a p, a r): scale by 1/a
        double a = t.params[0].value();
        return {r / a, p / a};
    }
    case Tag::I: {
        double R = t.params[0].value();
        return {R / r, R * p / (r * r)};
    }
    case Tag::M: { // (r^{1/a}, r^{1/a - 1} p)
        double a = t.params[0].value();
        return {std::pow(r, 1.0 / a), std::pow(r, 1.0 / a - 1.0) * p};
    }
    case Tag::H: { // q~ = (q + (k^2-1)/r^2)/k^2  (multiply the angle by k)
        double k = t.params[0].value();
        return from_q(r, (q + (k * k - 1.0) / (r * r)) / (k * k));
    }
    case Tag::Estar: { // r~ = r/(1+cr), q~ = q + 2c/r + c^2
        double c = t.params[0].value();
        return from_q(r / (1.0 + c * r), q + 2.0 * c / r + c * c);
    }
    case Tag::A: { // the listed rule is the curve-level one
        double w = t.params[0].value();
        double den = 1.0 + w * r * r;
        return from_q(r, (q + 2.0 * w + w * w * r * r) / (den * den));
    }
    case Tag::B: {
        double a = t.params[0].value();
        double den = 1.0 + a * r;
        return from_q(r, (q + 2.0 * a / r + a * a) / (den * den));
    }
    case Tag::F: { // r~ = r + c, q~ = (q r^4 + 2cr + c^2)/(r+c)^4
        double c = t.params[0].value();
        double rn = r + c;
        return from_q(rn, (q * r * r * r * r + 2.0 * c * r + c * c) / std::pow(rn, 4));
    }
    case Tag::Epar: { // p~ = p + c, r~^2 = r^2 + 2pc + c^2
        double c = t.params[0].value();
        double r2 = r * r + 2.0 * p * c + c * c;
        if (!(r2 > 0.0)) fail("DomainError", "parallel curve passes through the pedal point");
        return {std::sqrt(r2), p + c};
    }
    case Tag::P:
        return {p, p * p / r};
    case Tag::Pinv:
        return {r * r / p, r};
    case Tag::Dual: {
        double R = t.params[0].value();
        return {R / p, R / r};
    }
    case Tag::Tf: { // inverse of the equation substitution: printed map with (f^{-1}, 1/k)
        double k = t.params[0].value();
        RMap finv = t.tf_f.inverse();
        (void)k;
        return {finv.eval(r), 0.0}; // p handled by caller via the q relation below
    }
    case Tag::Pipeline:
        break;
    }
    fail("InvalidParam", "no pointwise action for " + tag_name(t.tag));
}

} // namespace

std::vector<RP> apply_pointwise(const TransformSpec& t, const std::vector<RP>& samples) {
    if (t.tag == Tag::Pipeline) {
        std::vector<RP> out = samples;
        for (auto it = t.pipeline.rbegin(); it != t.pipeline.rend(); ++it)
            out = apply_pointwise(*it, out);
        return out;
    }
    if (t.tag == Tag::Tf) {
        // q~ = (q + k^2/r~^2 - 1/f(r~)^2)/k^2 with r~ = f^{-1}(r), f(r~) = r
        double k = t.params[0].value();
        RMap finv = t.tf_f.inverse();
        std::vector<RP> out;
        out.reserve(samples.size());
        for (const RP& s : samples) {
            double q = 1.0 / (s.p * s.p);
            double rn = finv.eval(s.r);
            double qn = (q + k * k / (rn * rn) - 1.0 / (s.r * s.r)) / (k * k);
            if (!(qn > 0.0))
                fail("DomainError", "pointwise T_f leaves the pedal domain");
            out.push_back({rn, 1.0 / std::sqrt(qn)});
        }
        return out;
    }
    std::vector<RP> out;
    out.reserve(samples.size());
    for (const RP& s : samples) out.push_back(pointwise_one(t, s));
    return out;
}

namespace {

// "H(2) * Estar(-1/2) * S(3)" / "Tf(power c gamma k)" / "Tf(moebius a b k)"
struct PipeLexer {
    const std::string& s;
    std::size_t at = 0;
    void skip() { while (at < s.size() && std::isspace((unsigned char)s[at])) ++at; }
    char peek() { skip(); return at < s.size() ? s[at] : '\0'; }
};

Coeff parse_coeff_text(const std::string& text) {
    PowerSum ps = parse_power_sum(text);
    if (!ps.is_constant())
        fail("SyntaxError", "transform parameter must be a number: '" + text + "'");
    return ps.constant_value();
}

TransformSpec parse_one(PipeLexer& lx) {
    lx.skip();
    std::size_t start = lx.at;
    while (lx.at < lx.s.size() && std::isalpha((unsigned char)lx.s[lx.at])) ++lx.at;
    std::string name = lx.s.substr(start, lx.at - start);
    std::vector<std::string> args;
    if (lx.peek() == '(') {
        ++lx.at;
        std::string cur;
        int depth = 1;
        while (lx.at < lx.s.size() && depth > 0) {
            char c = lx.s[lx.at++];
            if (c == '(') { ++depth; cur += c; }
            else if (c == ')') { if (--depth > 0) cur += c; }
            else if (c == ',' && depth == 1) { args.push_back(cur); cur.clear(); }
            else cur += c;
        }
        if (depth != 0) fail("SyntaxError", "unbalanced parentheses in pipeline");
        if (!cur.empty() || !args.empty()) args.push_back(cur);
    }
    auto coeffs = [&]() {
        std::vector<Coeff> out;
        for (const auto& a : args) out.push_back(parse_coeff_text(a));
        return out;
    };
    if (name == "S") return named_transform(Tag::S, coeffs());
    if (name == "I") return named_transform(Tag::I, coeffs());
    if (name == "M") return named_transform(Tag::M, coeffs());
    if (name == "H") return named_transform(Tag::H, coeffs());
    if (name == "Estar") return named_transform(Tag::Estar, coeffs());
    if (name == "A") return named_transform(Tag::A, coeffs());
    if (name == "B") return named_transform(Tag::B, coeffs());
    if (name == "F") return named_transform(Tag::F, coeffs());
    if (name == "Epar") return named_transform(Tag::Epar, coeffs());
    if (name == "P") return named_transform(Tag::P, {});
    if (name == "Pinv") return named_transform(Tag::Pinv, {});
    if (name == "Dual") return named_transform(Tag::Dual, coeffs());
    if (name == "Tf") {
        // Tf(power c gamma k) | Tf(moebius a b k): space-separated inside one arg
        if (args.size() != 1) fail("SyntaxError", "Tf(power c gamma k | moebius a b k)");
        std::vector<std::string> words;
        std::string cur;
        for (char c : args[0]) {
            if (std::isspace((unsigned char)c)) {
                if (!cur.empty()) { words.push_back(cur); cur.clear(); }
            } else cur += c;
        }
        if (!cur.empty()) words.push_back(cur);
        if (words.size() != 4) fail("SyntaxError", "Tf takes a kind and three numbers");
        Coeff a = parse_coeff_text(words[1]);
        Coeff b = parse_coeff_text(words[2]);
        Coeff k = parse_coeff_text(words[3]);
        if (words[0] == "power") {
            if (!b.exact()) fail("InvalidParam", "power-map exponent must be rational");
            return tf_transform_spec(RMap::power(a, b.rat()), k);
        }
        if (words[0] == "moebius")
            return tf_transform_spec(RMap::moebius(a, b), k);
        fail("SyntaxError", "Tf kind must be 'power' or 'moebius'");
    }
    fail("SyntaxError", "unknown transform '" + name + "'");
}

} // namespace

TransformSpec parse_pipeline(const std::string& text) {
    PipeLexer lx{text};
    std::vector<TransformSpec> list;
    for (;;) {
        list.push_back(parse_one(lx));
        if (lx.peek() != '*') break;
        ++lx.at;
    }
    lx.skip();
    if (lx.at != lx.s.size()) fail("SyntaxError", "trailing input in pipeline");
    return compose(std::move(list));
}

} // namespace pedal
