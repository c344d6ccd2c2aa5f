#pragma once

/**
 * Power sums S_k(n) = 0^k + 1^k + ... + n^k and alternating power sums
 * T_k(n) = sum_{l=0}^{n} (-1)^l l^k, with the 0^0 = 1 convention, plus their
 * Bernoulli/Euler closed forms.
 */

#include <gmpxx.h>

#include "zpsym/bernoulli_euler.hpp"
#include "zpsym/errors.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

/// S_k(n), exact (integer-valued).
inline rational power_sum_direct(unsigned long k, unsigned long n) {
    mpz_class acc(0), term;
    for (unsigned long l = 0; l <= n; ++l) {
        mpz_ui_pow_ui(term.get_mpz_t(), l, k); // GMP: 0^0 = 1
        acc += term;
    }
    return rational(acc);
}

/// T_k(n), exact (integer-valued).
inline rational alt_power_sum_direct(unsigned long k, unsigned long n) {
    mpz_class acc(0), term;
    for (unsigned long l = 0; l <= n; ++l) {
        mpz_ui_pow_ui(term.get_mpz_t(), l, k);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return rational(acc);
}

/// (B_k(n) - B_k) / k, which equals S_{k-1}(n-1). Requires k, n >= 1.
inline rational power_sum_closed(unsigned long k, unsigned long n) {
    if (k == 0)
        throw degenerate_divisor_error("power_sum_closed: k = 0 divides by zero");
    if (n == 0)
        throw precondition_error("power_sum_closed: n must be positive");
    const rational bn = bernoulli_polynomial(k)(rational(n));
    return (bn - bernoulli_number(k)) / rational(mpz_class(k));
}

/// (E_k(n) + E_k(0)) / 2, which equals T_k(n-1) for odd n. Requires n odd.
inline rational alt_power_sum_closed(unsigned long k, unsigned long n) {
    if (n % 2 == 0)
        throw precondition_error("alt_power_sum_closed: n must be odd");
    const rational en = euler_polynomial(k)(rational(n));
    return (en + euler_number(k)) / rational(2);
}

} // namespace zpsym
