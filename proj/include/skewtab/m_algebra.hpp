#pragma once

#include "skewtab/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewtab {

/// Laurent polynomial in x with exact rational coefficients. Exponents may
/// be negative; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(int exponent, const Rational& coeff);
    static LaurentPoly constant(const Rational& c) { return monomial(0, c); }
    static LaurentPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int exponent) const;
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    int min_exponent() const;  // requires non-zero
    int max_exponent() const;  // requires non-zero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    /// Multiply by x^d.
    LaurentPoly shifted(int d) const;
    LaurentPoly scaled(const Rational& c) const;

    bool operator==(const LaurentPoly&) const = default;

    std::string to_string() const;

private:
    void set(int exponent, const Rational& c);
    std::map<int, Rational> coeffs_;
};

/// Polynomial in M (the Motzkin generating function) with LaurentPoly
/// coefficients: sum_k poly_k(x) * M^k. The k=0 term is the M-free part.
class MExpression {
public:
    MExpression() = default;

    static MExpression from_poly(const LaurentPoly& p);           // p * M^0
    static MExpression m_power(int k);                            // M^k
    static MExpression term(const LaurentPoly& p, int m_power);   // p * M^k

    bool is_zero() const { return terms_.empty(); }
    int max_m_power() const;  // -1 when zero
    const LaurentPoly& coeff_of_m_power(int k) const;
    const std::map<int, LaurentPoly>& terms() const { return terms_; }

    MExpression& operator+=(const MExpression& o);
    MExpression& operator-=(const MExpression& o);
    friend MExpression operator+(MExpression a, const MExpression& b) { return a += b; }
    friend MExpression operator-(MExpression a, const MExpression& b) { return a -= b; }
    MExpression operator*(const MExpression& o) const;

    bool operator==(const MExpression&) const = default;

    std::string to_string() const;

private:
    void set(int m_power, const LaurentPoly& p);
    std::map<int, LaurentPoly> terms_;  // M-power -> coefficient; no zero entries
};

/// A formula sum_s a_s * m_{n+s} (+ finitely many fixed-n corrections).
/// Evaluation treats m_t as 0 for t < 0. For n >= n_min the shift part alone
/// is exact: every index n+s is nonnegative and no correction is active.
struct MotzkinCombo {
    std::map<int, Rational> shifts;       // s -> a_s, no zero entries
    std::map<int, Rational> corrections;  // n -> additive constant, no zeros
    int n_min = 0;

    MotzkinCombo& add_scaled(const MotzkinCombo& o, const Rational& factor);
    void recompute_n_min();

    /// Shift coefficients as exact integers; throws if any is fractional.
    std::map<int, BigInt> integer_shifts() const;

    /// e.g. "m(n-1) - m(n-3), n >= 3"; empty combo renders as "0".
    std::string render() const;

    bool operator==(const MotzkinCombo&) const = default;
};

/// Rewrites every M-power >= 2 through M^2 = (M - 1 - x*M) / x^2 until only
/// M^0 and M^1 remain. The result equals the input as a Laurent series.
MExpression reduce(const MExpression& e);

/// Generating function x^j * M^{j+1} for the paths counted by x_count(i,j,n)
/// (one factor M per strictly-descending first passage, one final M).
MExpression x_gf(int j);

/// Coefficient extraction at x^{n-i} from a reduced expression:
/// c*x^d*M contributes c*m_{n-i-d} (shift s = -i-d); an M-free c*x^d
/// contributes the correction c at n = i+d. n_min is computed, not assumed.
MotzkinCombo extract_combo(const MExpression& reduced, int i);

/// extract_combo(reduce(x_gf(j)), i): closed Motzkin-combination form of
/// x_count(i, j, n).
MotzkinCombo x_formula(int i, int j);

/// Evaluates the combo at n. The result must be an integer (every combo this
/// library produces is a count); a fractional value raises InternalError.
BigInt eval_combo(const MotzkinCombo& c, int n);

/// Laurent series of e through x^order, with M expanded by Motzkin numbers.
/// Coefficients are indexed from min_exponent (never above 0). Equality is
/// semantic: exponents stored by one side only must carry zeros there.
struct LaurentSeries {
    int min_exponent = 0;
    std::vector<Rational> coeffs;  // exponent min_exponent + k

    Rational at(int exponent) const;
    int max_exponent() const { return min_exponent + static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const LaurentSeries& o) const;
};

LaurentSeries series_expand(const MExpression& e, int order, int order_cap = 512);

/// Parses the small expression grammar used by the CLI: terms over x, M,
/// integer literals, '+', '-', '*', '^' (integer exponents, unary minus and
/// parentheses allowed). Example: "x^2*M^3 - (1+x)*M".
MExpression parse_mexpression(const std::string& text);

}  // namespace skewtab
