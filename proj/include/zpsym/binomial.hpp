#pragma once

#include <gmpxx.h>

namespace zpsym {

/// Binomial coefficient C(n, k); zero whenever k > n.
inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace zpsym
