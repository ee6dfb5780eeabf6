#pragma once

#include <gmpxx.h>

#include <string>

namespace skewtab {

// All counts in this library are exact. Intermediate algebra uses exact
// rationals; integrality is asserted wherever a value is a count.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str(10);
    return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

inline bool is_integer(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c.get_den() == 1;
}

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt catalan(unsigned long n);

// C(n, floor(n/2))
BigInt central_binomial(unsigned long n);

}  // namespace skewtab
