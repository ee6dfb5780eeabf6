#include "skewtab/numeric.hpp"

namespace skewtab {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt catalan(unsigned long n) {
    return binomial(2 * n, n) / BigInt(n + 1);  // exact
}

BigInt central_binomial(unsigned long n) {
    return binomial(n, n / 2);
}

}  // namespace skewtab
