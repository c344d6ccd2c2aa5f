#pragma once

/**
 * Evaluation-based verifiers for the symmetry theorems, multiplication
 * theorems, derived closed forms, and generating-function identities tying
 * Bernoulli/Euler polynomials to (alternating) power sums.
 *
 * Every verifier computes its two sides through disjoint code paths and
 * reports exact equality, so a pass is evidence rather than tautology.
 * Swapping (w1, w2) swaps lhs and rhs exactly.
 */

#include <cstddef>
#include <string>

#include "zpsym/bernoulli_euler.hpp"
#include "zpsym/errors.hpp"
#include "zpsym/power_sums.hpp"
#include "zpsym/rational.hpp"
#include "zpsym/report.hpp"
#include "zpsym/series.hpp"

namespace zpsym {

struct symmetry_params {
    unsigned n = 0; // coefficient index (or truncation order, for series identities)
    unsigned w1 = 1;
    unsigned w2 = 1;
    rational x;

    nlohmann::ordered_json to_json(const char* n_key = "n") const {
        return {{n_key, n}, {"w1", w1}, {"w2", w2}, {"x", x.to_string()}};
    }
};

namespace detail {

inline void require_positive_w(unsigned w1, unsigned w2, const char* who) {
    if (w1 == 0 || w2 == 0)
        throw precondition_error(std::string(who) + ": w must be >= 1");
}

inline void require_odd_w(unsigned w1, unsigned w2, const char* who) {
    require_positive_w(w1, w2, who);
    if (w1 % 2 == 0 || w2 % 2 == 0)
        throw precondition_error(std::string(who) + ": w must be odd");
}

// sum_i C(n,i) B_i(wb x) S_{n-i}(wa - 1) wa^(i-1) wb^(n-i)
inline rational bernoulli_symmetry_side(unsigned n, unsigned wa, unsigned wb,
                                        const rational& x) {
    const rational arg = rational(static_cast<unsigned long>(wb)) * x;
    rational acc(0);
    for (unsigned i = 0; i <= n; ++i) {
        acc += rational(binomial(n, i)) * bernoulli_polynomial(i)(arg) *
               power_sum_direct(n - i, wa - 1) *
               pow(rational(static_cast<unsigned long>(wa)), static_cast<long>(i) - 1) *
               pow(rational(static_cast<unsigned long>(wb)), static_cast<long>(n - i));
    }
    return acc;
}

// sum_{i=0}^{wa-1} B_n(wb x + (wb/wa) i) wa^(n-1)
inline rational bernoulli_shift_sum_side(unsigned n, unsigned wa, unsigned wb,
                                         const rational& x) {
    const polynomial bn = bernoulli_polynomial(n);
    const rational step(static_cast<long>(wb), static_cast<long>(wa));
    rational arg = rational(static_cast<unsigned long>(wb)) * x;
    rational acc(0);
    for (unsigned i = 0; i < wa; ++i) {
        acc += bn(arg);
        arg += step;
    }
    return acc * pow(rational(static_cast<unsigned long>(wa)), static_cast<long>(n) - 1);
}

// sum_i C(n,i) E_i(wb x) T_{n-i}(wa - 1) wa^i wb^(n-i)
inline rational euler_symmetry_side(unsigned n, unsigned wa, unsigned wb, const rational& x) {
    const rational arg = rational(static_cast<unsigned long>(wb)) * x;
    rational acc(0);
    for (unsigned i = 0; i <= n; ++i) {
        acc += rational(binomial(n, i)) * euler_polynomial(i)(arg) *
               alt_power_sum_direct(n - i, wa - 1) *
               pow(rational(static_cast<unsigned long>(wa)), i) *
               pow(rational(static_cast<unsigned long>(wb)), n - i);
    }
    return acc;
}

// wa^n sum_{l=0}^{wa-1} (-1)^l E_n(wb x + (wb/wa) l)
inline rational euler_alternating_sum_side(unsigned n, unsigned wa, unsigned wb,
                                           const rational& x) {
    const polynomial en = euler_polynomial(n);
    const rational step(static_cast<long>(wb), static_cast<long>(wa));
    rational arg = rational(static_cast<unsigned long>(wb)) * x;
    rational acc(0);
    for (unsigned l = 0; l < wa; ++l) {
        acc += (l % 2 == 0) ? en(arg) : -en(arg);
        arg += step;
    }
    return acc * pow(rational(static_cast<unsigned long>(wa)), n);
}

// sum_k B_k (s t)^k / k!, the Bernoulli EGF st/(e^(st) - 1) as stored values.
inline truncated_series bernoulli_egf(unsigned long s, std::size_t order) {
    truncated_series out(order);
    std::vector<rational> c(order + 1);
    rational scale(1); // s^k / k!
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0)
            scale = scale * rational(s) / rational(mpz_class(k));
        c[k] = bernoulli_number(k) * scale;
    }
    return truncated_series(order, std::move(c));
}

// Coefficient-wise expansion of Eq-16 shape: t^n coefficient is
// (1/n!) sum_i C(n,i) B_i(wb x) S_{n-i}(wa-1) wa^(i-1) wb^(n-i).
inline truncated_series bernoulli_symmetry_expansion(unsigned wa, unsigned wb,
                                                     const rational& x, std::size_t order) {
    std::vector<rational> c(order + 1);
    rational inv_fact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0)
            inv_fact = inv_fact / rational(mpz_class(n));
        c[n] = bernoulli_symmetry_side(static_cast<unsigned>(n), wa, wb, x) * inv_fact;
    }
    return truncated_series(order, std::move(c));
}

// Closed form t e^(w1 w2 x t) (e^(w1 w2 t) - 1) / ((e^(w1 t) - 1)(e^(w2 t) - 1)),
// computed two orders high so the valuation-2 division lands on `order`.
inline truncated_series bernoulli_symmetry_closed(unsigned w1, unsigned w2,
                                                  const rational& x, std::size_t order) {
    const std::size_t k = order + 2;
    const unsigned long ww = static_cast<unsigned long>(w1) * w2;
    const truncated_series num =
        truncated_series::monomial(1, k) *
        truncated_series::exponential(rational(ww) * x, k) *
        (truncated_series::exponential(rational(ww), k) - truncated_series::one(k));
    const truncated_series den =
        (truncated_series::exponential(rational(static_cast<unsigned long>(w1)), k) -
         truncated_series::one(k)) *
        (truncated_series::exponential(rational(static_cast<unsigned long>(w2)), k) -
         truncated_series::one(k));
    return div_exact(num, den, 2);
}

// t^n coefficient (1/n!) sum_i C(n,i) E_i(wb x) T_{n-i}(wa-1) wa^i wb^(n-i).
inline truncated_series euler_symmetry_expansion(unsigned wa, unsigned wb, const rational& x,
                                                 std::size_t order) {
    std::vector<rational> c(order + 1);
    rational inv_fact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0)
            inv_fact = inv_fact / rational(mpz_class(n));
        c[n] = euler_symmetry_side(static_cast<unsigned>(n), wa, wb, x) * inv_fact;
    }
    return truncated_series(order, std::move(c));
}

// t^n coefficient (1/n!) wa^n sum_l (-1)^l E_n(wb x + (wb/wa) l).
inline truncated_series euler_alternating_expansion(unsigned wa, unsigned wb,
                                                    const rational& x, std::size_t order) {
    std::vector<rational> c(order + 1);
    rational inv_fact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0)
            inv_fact = inv_fact / rational(mpz_class(n));
        c[n] = euler_alternating_sum_side(static_cast<unsigned>(n), wa, wb, x) * inv_fact;
    }
    return truncated_series(order, std::move(c));
}

// Closed form 2 e^(w1 w2 x t) (e^(w1 w2 t) + 1) / ((e^(w1 t) + 1)(e^(w2 t) + 1)).
inline truncated_series euler_symmetry_closed(unsigned w1, unsigned w2, const rational& x,
                                              std::size_t order) {
    const unsigned long ww = static_cast<unsigned long>(w1) * w2;
    const truncated_series num =
        rational(2) *
        (truncated_series::exponential(rational(ww) * x, order) *
         (truncated_series::exponential(rational(ww), order) + truncated_series::one(order)));
    const truncated_series den =
        (truncated_series::exponential(rational(static_cast<unsigned long>(w1)), order) +
         truncated_series::one(order)) *
        (truncated_series::exponential(rational(static_cast<unsigned long>(w2)), order) +
         truncated_series::one(order));
    return div_exact(num, den, 0);
}

} // namespace detail

/// Corollary-2 symmetry: the Bernoulli/power-sum double expansion is
/// invariant under swapping (w1, w2).
inline verification_report corollary2_sides(const symmetry_params& p) {
    detail::require_positive_w(p.w1, p.w2, "corollary2_sides");
    return make_report("corollary2", p.to_json(),
                       detail::bernoulli_symmetry_side(p.n, p.w1, p.w2, p.x),
                       detail::bernoulli_symmetry_side(p.n, p.w2, p.w1, p.x));
}

/// Corollary-4 symmetry: shifted-argument Bernoulli sums agree under swap.
inline verification_report corollary4_sides(const symmetry_params& p) {
    detail::require_positive_w(p.w1, p.w2, "corollary4_sides");
    return make_report("corollary4", p.to_json(),
                       detail::bernoulli_shift_sum_side(p.n, p.w1, p.w2, p.x),
                       detail::bernoulli_shift_sum_side(p.n, p.w2, p.w1, p.x));
}

/// Multiplication theorem B_n(w1 x) = w1^(n-1) sum_{i<w1} B_n(x + i/w1).
inline verification_report bernoulli_multiplication(unsigned n, unsigned w1,
                                                    const rational& x) {
    detail::require_positive_w(w1, 1, "bernoulli_multiplication");
    const rational lhs = bernoulli_polynomial(n)(rational(static_cast<unsigned long>(w1)) * x);
    const rational rhs = detail::bernoulli_shift_sum_side(n, w1, 1, x);
    symmetry_params p{n, w1, 1, x};
    return make_report("bernoulli_multiplication", p.to_json(), lhs, rhs);
}

/// B_n recovered from power sums: B_n = 1/(w1 (1 - w1^n)) sum_{k<n} w1^k C(n,k) B_k S_{n-k}(w1-1).
inline rational deeba_rodriguez(unsigned n, unsigned w1) {
    if (n == 0)
        throw precondition_error("deeba_rodriguez: n must be positive");
    if (w1 <= 1)
        throw degenerate_divisor_error("deeba_rodriguez: w1 must be >= 2");
    rational acc(0);
    for (unsigned k = 0; k < n; ++k) {
        acc += pow(rational(static_cast<unsigned long>(w1)), k) * rational(binomial(n, k)) *
               bernoulli_number(k) * power_sum_direct(n - k, w1 - 1);
    }
    const rational w(static_cast<unsigned long>(w1));
    return acc / (w * (rational(1) - pow(w, n)));
}

/// Theorem-5 symmetry (odd w1, w2): Euler/alternating-sum double expansion.
inline verification_report theorem5_sides(const symmetry_params& p) {
    detail::require_odd_w(p.w1, p.w2, "theorem5_sides");
    return make_report("theorem5", p.to_json(),
                       detail::euler_symmetry_side(p.n, p.w1, p.w2, p.x),
                       detail::euler_symmetry_side(p.n, p.w2, p.w1, p.x));
}

/// E_n(w1 x) = sum_i C(n,i) E_i(x) T_{n-i}(w1-1) w1^i (odd w1).
inline verification_report eq30_identity(unsigned n, unsigned w1, const rational& x) {
    detail::require_odd_w(w1, 1, "eq30_identity");
    const rational lhs = euler_polynomial(n)(rational(static_cast<unsigned long>(w1)) * x);
    rational rhs(0);
    for (unsigned i = 0; i <= n; ++i) {
        rhs += rational(binomial(n, i)) * euler_polynomial(i)(x) *
               alt_power_sum_direct(n - i, w1 - 1) *
               pow(rational(static_cast<unsigned long>(w1)), i);
    }
    symmetry_params p{n, w1, 1, x};
    return make_report("eq30", p.to_json(), lhs, rhs);
}

/// E_n recovered from alternating sums (odd w1 >= 3):
/// E_n = 1/(1 - w1^n) sum_{i<n} C(n,i) E_i T_{n-i}(w1-1) w1^i.
inline rational euler_from_corollary6(unsigned n, unsigned w1) {
    if (n == 0)
        throw precondition_error("euler_from_corollary6: n must be positive");
    if (w1 == 1)
        throw degenerate_divisor_error("euler_from_corollary6: w1 = 1 degenerates");
    if (w1 % 2 == 0)
        throw precondition_error("euler_from_corollary6: w1 must be odd");
    rational acc(0);
    for (unsigned i = 0; i < n; ++i) {
        acc += rational(binomial(n, i)) * euler_number(i) *
               alt_power_sum_direct(n - i, w1 - 1) *
               pow(rational(static_cast<unsigned long>(w1)), i);
    }
    return acc / (rational(1) - pow(rational(static_cast<unsigned long>(w1)), n));
}

/// Theorem-7 symmetry (odd w1, w2): alternating shifted Euler sums.
inline verification_report theorem7_sides(const symmetry_params& p) {
    detail::require_odd_w(p.w1, p.w2, "theorem7_sides");
    return make_report("theorem7", p.to_json(),
                       detail::euler_alternating_sum_side(p.n, p.w1, p.w2, p.x),
                       detail::euler_alternating_sum_side(p.n, p.w2, p.w1, p.x));
}

/// Multiplication theorem E_n(w1 x) = w1^n sum_{l<w1} (-1)^l E_n(x + l/w1) (odd w1).
inline verification_report euler_multiplication(unsigned n, unsigned w1, const rational& x) {
    detail::require_odd_w(w1, 1, "euler_multiplication");
    const rational lhs = euler_polynomial(n)(rational(static_cast<unsigned long>(w1)) * x);
    const rational rhs = detail::euler_alternating_sum_side(n, w1, 1, x);
    symmetry_params p{n, w1, 1, x};
    return make_report("euler_multiplication", p.to_json(), lhs, rhs);
}

/// Theorem-1 as series: the Eq-16 coefficient expansion against the closed
/// ratio of exponentials, with the swapped (Eq-17) expansion checked too.
/// rhs in the report is the first pipeline that disagrees, if any.
inline verification_report theorem1_series(unsigned w1, unsigned w2, const rational& x,
                                           std::size_t order) {
    detail::require_positive_w(w1, w2, "theorem1_series");
    const truncated_series expansion = detail::bernoulli_symmetry_expansion(w1, w2, x, order);
    const truncated_series closed = detail::bernoulli_symmetry_closed(w1, w2, x, order);
    const truncated_series swapped = detail::bernoulli_symmetry_expansion(w2, w1, x, order);
    symmetry_params p{static_cast<unsigned>(order), w1, w2, x};
    return make_report("theorem1_series", p.to_json("order"), expansion,
                       closed == expansion ? swapped : closed);
}

/// Eq-12 ratio: product of two Bernoulli EGFs over a third against the
/// closed form t (e^(w1 w2 t) - 1) / ((e^(w1 t) - 1)(e^(w2 t) - 1)).
inline verification_report series_identity_bosonic_ratio(unsigned w1, unsigned w2,
                                                         std::size_t order) {
    detail::require_positive_w(w1, w2, "series_identity_bosonic_ratio");
    const unsigned long ww = static_cast<unsigned long>(w1) * w2;
    const truncated_series egf_route =
        div_exact(detail::bernoulli_egf(w1, order) * detail::bernoulli_egf(w2, order),
                  detail::bernoulli_egf(ww, order), 0);

    const std::size_t k = order + 2;
    const truncated_series num =
        truncated_series::monomial(1, k) *
        (truncated_series::exponential(rational(ww), k) - truncated_series::one(k));
    const truncated_series den =
        (truncated_series::exponential(rational(static_cast<unsigned long>(w1)), k) -
         truncated_series::one(k)) *
        (truncated_series::exponential(rational(static_cast<unsigned long>(w2)), k) -
         truncated_series::one(k));
    const truncated_series closed = div_exact(num, den, 2);

    symmetry_params p{static_cast<unsigned>(order), w1, w2, rational(0)};
    return make_report("bosonic_ratio", p.to_json("order"), egf_route, closed);
}

/// Eq-26 closed form against both fermionic expansions (the Eq-28 double sum
/// and the Eq-31 alternating shift sum); all three must agree.
/// rhs in the report is the first expansion that disagrees, if any.
inline verification_report series_identity_fermionic_ratio(unsigned w1, unsigned w2,
                                                           const rational& x,
                                                           std::size_t order) {
    detail::require_odd_w(w1, w2, "series_identity_fermionic_ratio");
    const truncated_series closed = detail::euler_symmetry_closed(w1, w2, x, order);
    const truncated_series sum_route = detail::euler_symmetry_expansion(w1, w2, x, order);
    const truncated_series shift_route = detail::euler_alternating_expansion(w1, w2, x, order);
    symmetry_params p{static_cast<unsigned>(order), w1, w2, x};
    return make_report("fermionic_ratio", p.to_json("order"), closed,
                       sum_route == closed ? shift_route : sum_route);
}

} // namespace zpsym
