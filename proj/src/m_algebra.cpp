#include "skewtab/m_algebra.hpp"

#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skewtab {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
    LaurentPoly p;
    p.set(exponent, coeff);
    return p;
}

void LaurentPoly::set(int exponent, const Rational& c) {
    Rational v = c;
    v.canonicalize();
    if (v == 0) coeffs_.erase(exponent);
    else coeffs_[exponent] = v;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) throw InternalError("min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) throw InternalError("max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.coeffs_) set(d, coeff(d) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.coeffs_) set(d, coeff(d) - c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [d1, c1] : coeffs_)
        for (const auto& [d2, c2] : o.coeffs_) out.set(d1 + d2, out.coeff(d1 + d2) + c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d] = -c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int d) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + d] = c;
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [d, v] : coeffs_) out.set(d, v * c);
    return out;
}

namespace {

std::string monomial_string(const Rational& c, int d, const std::string& extra, bool first) {
    Rational a = c;
    a.canonicalize();
    bool negative = a < 0;
    if (negative) a = -a;
    std::string mag;
    std::string var = d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    std::string body = var;
    if (!extra.empty()) body += (body.empty() ? "" : "*") + extra;
    if (a != 1 || body.empty()) {
        mag = to_decimal(a);
        if (!body.empty()) mag += "*";
    }
    std::string term = mag + body;
    if (first) return negative ? "-" + term : term;
    return (negative ? " - " : " + ") + term;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out += monomial_string(it->second, it->first, "", first);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// MExpression

MExpression MExpression::from_poly(const LaurentPoly& p) { return term(p, 0); }

MExpression MExpression::m_power(int k) { return term(LaurentPoly::one(), k); }

MExpression MExpression::term(const LaurentPoly& p, int m_power) {
    if (m_power < 0) throw ValidationError("negative M-power");
    MExpression e;
    e.set(m_power, p);
    return e;
}

void MExpression::set(int m_power, const LaurentPoly& p) {
    if (p.is_zero()) terms_.erase(m_power);
    else terms_[m_power] = p;
}

int MExpression::max_m_power() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

const LaurentPoly& MExpression::coeff_of_m_power(int k) const {
    static const LaurentPoly kZero;
    auto it = terms_.find(k);
    return it == terms_.end() ? kZero : it->second;
}

MExpression& MExpression::operator+=(const MExpression& o) {
    for (const auto& [k, p] : o.terms_) set(k, coeff_of_m_power(k) + p);
    return *this;
}

MExpression& MExpression::operator-=(const MExpression& o) {
    for (const auto& [k, p] : o.terms_) set(k, coeff_of_m_power(k) - p);
    return *this;
}

MExpression MExpression::operator*(const MExpression& o) const {
    MExpression out;
    for (const auto& [k1, p1] : terms_)
        for (const auto& [k2, p2] : o.terms_)
            out.set(k1 + k2, out.coeff_of_m_power(k1 + k2) + p1 * p2);
    return out;
}

std::string MExpression::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string m = it->first == 0 ? "" : (it->first == 1 ? "M" : "M^" + std::to_string(it->first));
        std::string p = it->second.to_string();
        std::string piece;
        if (m.empty()) piece = p;
        else if (it->second == LaurentPoly::one()) piece = m;
        else if (it->second.coeffs().size() == 1) {
            auto [d, c] = *it->second.coeffs().begin();
            piece = monomial_string(c, d, m, true);
        } else piece = "(" + p + ")*" + m;
        if (!first) {
            if (!piece.empty() && piece[0] == '-') piece = " - " + piece.substr(1);
            else piece = " + " + piece;
        }
        out += piece;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reduction and extraction

MExpression reduce(const MExpression& e) {
    MExpression cur = e;
    while (cur.max_m_power() >= 2) {
        int k = cur.max_m_power();
        LaurentPoly p = cur.coeff_of_m_power(k);
        // p*M^k = p*x^-2*(1-x)*M^{k-1} - p*x^-2*M^{k-2}
        MExpression rest = cur - MExpression::term(p, k);
        LaurentPoly lead = p.shifted(-2);
        LaurentPoly one_minus_x = LaurentPoly::one() - LaurentPoly::monomial(1, 1);
        rest += MExpression::term(lead * one_minus_x, k - 1);
        rest -= MExpression::term(lead, k - 2);
        cur = rest;
    }
    return cur;
}

MExpression x_gf(int j) {
    if (j < 0) throw ValidationError("negative descent count");
    return MExpression::term(LaurentPoly::monomial(j, 1), j + 1);
}

MotzkinCombo extract_combo(const MExpression& reduced, int i) {
    if (reduced.max_m_power() > 1)
        throw ValidationError("extract_combo needs a reduced expression (M-power <= 1)");
    MotzkinCombo combo;
    for (const auto& [d, c] : reduced.coeff_of_m_power(1).coeffs()) combo.shifts[-i - d] = c;
    for (const auto& [d, c] : reduced.coeff_of_m_power(0).coeffs()) combo.corrections[i + d] = c;
    combo.recompute_n_min();
    return combo;
}

MotzkinCombo x_formula(int i, int j) { return extract_combo(reduce(x_gf(j)), i); }

BigInt eval_combo(const MotzkinCombo& c, int n) {
    Rational total = 0;
    for (const auto& [s, a] : c.shifts) {
        if (n + s < 0) continue;  // m of negative index is 0
        total += a * Rational(motzkin(n + s));
    }
    if (auto it = c.corrections.find(n); it != c.corrections.end()) total += it->second;
    total.canonicalize();
    if (!is_integer(total))
        throw InternalError("combo evaluated to the non-integer " + to_decimal(total) +
                            " at n = " + std::to_string(n));
    return total.get_num();
}

MotzkinCombo& MotzkinCombo::add_scaled(const MotzkinCombo& o, const Rational& factor) {
    for (const auto& [s, a] : o.shifts) {
        Rational v = shifts.count(s) ? shifts[s] : Rational(0);
        v += a * factor;
        v.canonicalize();
        if (v == 0) shifts.erase(s);
        else shifts[s] = v;
    }
    for (const auto& [n, cv] : o.corrections) {
        Rational v = corrections.count(n) ? corrections[n] : Rational(0);
        v += cv * factor;
        v.canonicalize();
        if (v == 0) corrections.erase(n);
        else corrections[n] = v;
    }
    recompute_n_min();
    return *this;
}

void MotzkinCombo::recompute_n_min() {
    int bound = 0;
    for (const auto& [s, a] : shifts) bound = std::max(bound, -s);
    for (const auto& [n, c] : corrections) bound = std::max(bound, n + 1);
    n_min = bound;
}

std::map<int, BigInt> MotzkinCombo::integer_shifts() const {
    std::map<int, BigInt> out;
    for (const auto& [s, a] : shifts) {
        if (!is_integer(a))
            throw InternalError("shift coefficient at s = " + std::to_string(s) +
                                " is not an integer: " + to_decimal(a));
        Rational v = a;
        v.canonicalize();
        out[s] = v.get_num();
    }
    return out;
}

std::string MotzkinCombo::render() const {
    if (shifts.empty() && corrections.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = shifts.rbegin(); it != shifts.rend(); ++it) {
        Rational a = it->second;
        bool neg = a < 0;
        if (neg) a = -a;
        std::string arg = "n";
        if (it->first > 0) arg += "+" + std::to_string(it->first);
        if (it->first < 0) arg += std::to_string(it->first);
        std::string term = (a == 1 ? "" : to_decimal(a) + "*") + "m(" + arg + ")";
        if (first) out += (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
        first = false;
    }
    if (shifts.empty()) out += "0";
    out += ", n >= " + std::to_string(n_min);
    return out;
}

// ---------------------------------------------------------------------------
// Series expansion

Rational LaurentSeries::at(int exponent) const {
    if (exponent < min_exponent) return 0;
    std::size_t idx = static_cast<std::size_t>(exponent - min_exponent);
    return idx < coeffs.size() ? coeffs[idx] : Rational(0);
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    int lo = std::min(min_exponent, o.min_exponent);
    int hi = std::max(max_exponent(), o.max_exponent());
    for (int e = lo; e <= hi; ++e)
        if (at(e) != o.at(e)) return false;
    return true;
}

LaurentSeries series_expand(const MExpression& e, int order, int order_cap) {
    if (order < 0) throw ValidationError("series order must be nonnegative");
    if (order > order_cap)
        throw ResourceLimitError("series order " + std::to_string(order) +
                                 " exceeds the cap of " + std::to_string(order_cap));

    int min_exp = 0;
    for (const auto& [k, p] : e.terms()) min_exp = std::min(min_exp, p.min_exponent());

    LaurentSeries out;
    out.min_exponent = min_exp;
    out.coeffs.assign(static_cast<std::size_t>(order - min_exp) + 1, Rational(0));

    // Series of M^k through x^(order - min_exp), built by iterated convolution.
    const int width = order - min_exp;
    std::vector<Rational> m_series(width + 1);
    for (int t = 0; t <= width; ++t) m_series[t] = Rational(motzkin(t));

    std::vector<Rational> power(width + 1, Rational(0));
    power[0] = 1;  // M^0
    int current_power = 0;

    for (const auto& [k, poly] : e.terms()) {
        while (current_power < k) {
            std::vector<Rational> next(width + 1, Rational(0));
            for (int a = 0; a <= width; ++a) {
                if (power[a] == 0) continue;
                for (int b = 0; a + b <= width; ++b) next[a + b] += power[a] * m_series[b];
            }
            power.swap(next);
            ++current_power;
        }
        for (const auto& [d, c] : poly.coeffs()) {
            for (int t = 0; t <= width; ++t) {
                int exp = d + t;
                if (exp < min_exp || exp > order) continue;
                out.coeffs[static_cast<std::size_t>(exp - min_exp)] += c * power[t];
            }
        }
    }
    for (auto& c : out.coeffs) c.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Expression parser: +, -, *, ^, parentheses, atoms x, M, integer literals.

namespace {

struct Parser {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ValidationError("expression parse error at position " + std::to_string(pos + 1) +
                              ": " + what);
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) fail("integer literal too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    MExpression atom() {
        skip_ws();
        if (eat('(')) {
            MExpression e = expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_power(e, true);
        }
        char c = peek();
        if (c == 'x' || c == 'X') {
            ++pos;
            int d = 1;
            if (eat('^')) d = static_cast<int>(integer());
            return MExpression::from_poly(LaurentPoly::monomial(d, 1));
        }
        if (c == 'M' || c == 'm') {
            ++pos;
            int k = 1;
            if (eat('^')) {
                k = static_cast<int>(integer());
                if (k < 0) fail("M cannot take a negative exponent");
            }
            return MExpression::m_power(k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer();
            return maybe_power(MExpression::from_poly(LaurentPoly::constant(Rational(v))), false);
        }
        fail("expected x, M, an integer, or '('");
    }

    MExpression maybe_power(MExpression base, bool allow) {
        if (!allow) return base;
        if (!eat('^')) return base;
        long k = integer();
        if (k < 0) fail("negative exponents apply to x only");
        MExpression out = MExpression::from_poly(LaurentPoly::one());
        for (long t = 0; t < k; ++t) out = out * base;
        return out;
    }

    MExpression factor() {
        skip_ws();
        if (eat('-')) {
            MExpression e = factor();
            return MExpression() - e;
        }
        return atom();
    }

    MExpression product() {
        MExpression out = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                out = out * factor();
            } else if (c == '(' || c == 'x' || c == 'X' || c == 'M' || c == 'm' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                out = out * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return out;
    }

    MExpression expr() {
        MExpression out = product();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                out += product();
            } else if (c == '-') {
                ++pos;
                out -= product();
            } else {
                break;
            }
        }
        return out;
    }
};

}  // namespace

MExpression parse_mexpression(const std::string& text) {
    Parser p{text};
    MExpression e = p.expr();
    p.skip_ws();
    if (p.pos != p.text.size()) p.fail("trailing input");
    return e;
}

}  // namespace skewtab
