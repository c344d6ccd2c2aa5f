#pragma once

/**
 * Riemann-sum approximants for the bosonic (Volkenborn), fermionic and
 * q-deformed p-adic integrals on Z_p, the Carlitz q-Bernoulli recursion,
 * and p-adic convergence measurement against the exact limits B_n / E_n.
 *
 * The Volkenborn and fermionic approximants are exact rationals so their
 * error valuations are exact; p-adic modular arithmetic is reserved for the
 * q-deformed path where rationals are unavailable.
 */

#include <cstddef>
#include <mutex>
#include <utility>
#include <vector>

#include "zpsym/bernoulli_euler.hpp"
#include "zpsym/errors.hpp"
#include "zpsym/padic.hpp"
#include "zpsym/power_sums.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

namespace detail {

inline unsigned long prime_power_count(unsigned long p, unsigned N) {
    if (!is_prime(p))
        throw precondition_error("prime_power_count: p must be prime");
    if (N == 0)
        throw precondition_error("prime_power_count: N must be >= 1");
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), p, N);
    if (!c.fits_ulong_p() || c > 100000000)
        throw precondition_error("prime_power_count: p^N too large to sum");
    return c.get_ui();
}

} // namespace detail

/// [x]_q = (1 - q^x)/(1 - q) = 1 + q + ... + q^(x-1), evaluated as the
/// geometric sum (exact in Z_p, no division).
inline padic_scalar q_bracket(unsigned long x, const q_parameter& q) {
    const unsigned long p = q.prime();
    padic_scalar acc = padic_scalar::zero(p);
    padic_scalar qpow = padic_scalar::one(p, q.precision());
    for (unsigned long i = 0; i < x; ++i) {
        acc = acc + qpow;
        qpow = qpow * q.value();
    }
    return acc;
}

/// (1/p^N) sum_{x=0}^{p^N - 1} x^n, the level-N Volkenborn Riemann sum for
/// x^n, as an exact rational.
inline rational volkenborn_approx(unsigned long n, unsigned long p, unsigned N) {
    const unsigned long count = detail::prime_power_count(p, N);
    return power_sum_direct(n, count - 1) / rational(count);
}

/// sum_{x=0}^{p^N - 1} (-1)^x x^n, the level-N fermionic Riemann sum for x^n
/// (the q -> 1 normalization is exactly 1 for odd p).
inline rational fermionic_approx(unsigned long n, unsigned long p, unsigned N) {
    if (p % 2 == 0)
        throw precondition_error("fermionic_approx: p must be odd");
    const unsigned long count = detail::prime_power_count(p, N);
    return alt_power_sum_direct(n, count - 1);
}

/// (1/[p^N]_q) sum_{x=0}^{p^N - 1} [x]_q^m q^x in p-adic arithmetic at the
/// given working precision.
inline padic_scalar q_integral_approx(unsigned long m, const q_parameter& q, unsigned N,
                                      long working_precision) {
    if (working_precision < 1)
        throw precondition_error("q_integral_approx: working precision must be >= 1");
    const unsigned long p = q.prime();
    const unsigned long count = detail::prime_power_count(p, N);
    padic_scalar qv = q.value();
    if (qv.precision() > working_precision)
        qv = qv.truncated(working_precision);

    padic_scalar acc = padic_scalar::zero(p);
    padic_scalar bracket = padic_scalar::zero(p);            // [x]_q
    padic_scalar qpow = padic_scalar::one(p, qv.precision()); // q^x
    for (unsigned long x = 0; x < count; ++x) {
        const padic_scalar term = (m == 0) ? qpow : bracket.pow(m) * qpow;
        acc = acc + term;
        bracket = bracket + qpow;
        qpow = qpow * qv;
    }
    // bracket is now [p^N]_q, the normalizer.
    if (bracket.is_zero())
        throw precision_exhausted_error(
            "q_integral_approx: [p^N]_q vanishes at the working precision");
    return acc / bracket;
}

namespace detail {

// Extends beta[0..] to index m via
//   beta_k = (delta_{k,1} - q sum_{i<k} C(k,i) q^i beta_i) / (q^(k+1) - 1).
inline void carlitz_extend(std::vector<padic_scalar>& beta, const q_parameter& q,
                           std::size_t m) {
    const unsigned long p = q.prime();
    const padic_scalar& qv = q.value();
    const padic_scalar unit_one = padic_scalar::one(p, qv.precision());
    if (beta.empty())
        beta.push_back(unit_one);
    while (beta.size() <= m) {
        const std::size_t k = beta.size();
        padic_scalar sum = padic_scalar::zero(p);
        padic_scalar qpow = unit_one;
        for (std::size_t i = 0; i < k; ++i) {
            sum = sum + padic_scalar::from_integer(binomial(k, i), p, qv.precision()) *
                            qpow * beta[i];
            qpow = qpow * qv;
        }
        padic_scalar num = -(qv * sum);
        if (k == 1)
            num = num + unit_one;
        const padic_scalar den = qv.pow(k + 1) - unit_one;
        if (den.is_zero())
            throw degenerate_divisor_error(
                "carlitz_beta: q^(k+1) - 1 vanishes (q = 1 at working precision)");
        beta.push_back(num / den);
    }
}

} // namespace detail

/// Carlitz q-Bernoulli number beta_{m,q} from the umbral recursion
/// beta_0 = 1, q (q beta + 1)^k - beta_k = delta_{k,1}.
inline padic_scalar carlitz_beta(std::size_t m, const q_parameter& q) {
    std::vector<padic_scalar> beta;
    detail::carlitz_extend(beta, q, m);
    return beta[m];
}

/// Write-once memo table of beta_{m,q} for a fixed q.
class carlitz_cache {
public:
    explicit carlitz_cache(q_parameter q) : q_(std::move(q)) {}

    padic_scalar operator()(std::size_t m) const {
        std::lock_guard<std::mutex> lock(mu_);
        detail::carlitz_extend(values_, q_, m);
        return values_[m];
    }

    const q_parameter& q() const { return q_; }

private:
    q_parameter q_;
    mutable std::mutex mu_;
    mutable std::vector<padic_scalar> values_;
};

enum class integral_kind { volkenborn, fermionic };

/// Error valuations v_p(approx_N - limit) for N = 1..N_max, where the limit
/// is B_n (volkenborn) or E_n (fermionic). Exact-zero errors report the
/// +infinity sentinel.
inline std::vector<std::pair<unsigned, long>> convergence_report(integral_kind kind,
                                                                 unsigned long n,
                                                                 unsigned long p,
                                                                 unsigned N_max) {
    if (kind == integral_kind::fermionic && p % 2 == 0)
        throw precondition_error("convergence_report: fermionic kind requires odd p");
    const rational limit =
        kind == integral_kind::volkenborn ? bernoulli_number(n) : euler_number(n);
    std::vector<std::pair<unsigned, long>> out;
    out.reserve(N_max);
    for (unsigned N = 1; N <= N_max; ++N) {
        const rational approx = kind == integral_kind::volkenborn
                                    ? volkenborn_approx(n, p, N)
                                    : fermionic_approx(n, p, N);
        out.emplace_back(N, valuation_of_rational(approx - limit, p));
    }
    return out;
}

} // namespace zpsym
