#pragma once

/**
 * Truncated formal power series over the rationals, exact modulo t^(K+1).
 *
 * A series of order K stores exactly K+1 coefficients. All operations on
 * equal-order inputs commute with truncation, so results are the exact
 * first K+1 coefficients of the untruncated computation.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zpsym/errors.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

class truncated_series {
public:
    /// Zero series of the given order.
    explicit truncated_series(std::size_t order) : c_(order + 1) {}

    /// Series from coefficients (padded with zeros up to order).
    truncated_series(std::size_t order, std::vector<rational> coefficients) {
        if (coefficients.size() > order + 1)
            throw precondition_error("truncated_series: more coefficients than order allows");
        c_ = std::move(coefficients);
        c_.resize(order + 1);
    }

    /// Expansion of e^(c t): coefficient k is c^k / k!.
    static truncated_series exponential(const rational& c, std::size_t order) {
        truncated_series s(order);
        s.c_[0] = rational(1);
        for (std::size_t k = 1; k <= order; ++k)
            s.c_[k] = s.c_[k - 1] * c / rational(mpz_class(k));
        return s;
    }

    static truncated_series one(std::size_t order) {
        truncated_series s(order);
        s.c_[0] = rational(1);
        return s;
    }

    /// t^k as a series (zero series when k exceeds the order).
    static truncated_series monomial(std::size_t k, std::size_t order) {
        truncated_series s(order);
        if (k <= order)
            s.c_[k] = rational(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const rational& coefficient(std::size_t k) const { return c_.at(k); }
    const std::vector<rational>& coefficients() const { return c_; }

    /// Index of the first nonzero coefficient; disengaged for the zero series.
    std::optional<std::size_t> valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero())
                return k;
        return std::nullopt;
    }

    /// Drops coefficients above new_order (new_order <= order()).
    truncated_series truncated(std::size_t new_order) const {
        if (new_order > order())
            throw precondition_error("truncated_series: cannot truncate upward");
        std::vector<rational> v(c_.begin(), c_.begin() + new_order + 1);
        return truncated_series(new_order, std::move(v));
    }

    truncated_series operator-() const {
        truncated_series s(order());
        for (std::size_t k = 0; k < c_.size(); ++k)
            s.c_[k] = -c_[k];
        return s;
    }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        require_same_order(a, b);
        truncated_series s(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        return a + (-b);
    }

    /// Cauchy product truncated at the common order.
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        require_same_order(a, b);
        truncated_series s(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                s.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return s;
    }

    friend truncated_series operator*(const rational& s, const truncated_series& a) {
        truncated_series r(a.order());
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            r.c_[k] = s * a.c_[k];
        return r;
    }

    friend bool operator==(const truncated_series& a, const truncated_series& b) {
        return a.c_ == b.c_;
    }

private:
    static void require_same_order(const truncated_series& a, const truncated_series& b) {
        if (a.order() != b.order())
            throw precondition_error("truncated_series: order mismatch");
    }

    std::vector<rational> c_;
};

/**
 * Exact division of series that both vanish to order t_shift at t = 0.
 *
 * den must have its first nonzero coefficient at index exactly t_shift and
 * num at index >= t_shift. Both are shifted down by t_shift, after which the
 * divisor has a unit constant term and the quotient q is solved coefficient
 * by coefficient; q * den = num holds exactly modulo t^(num.order - t_shift + 1).
 * The result has order num.order() - t_shift.
 */
inline truncated_series div_exact(const truncated_series& num, const truncated_series& den,
                                  std::size_t t_shift) {
    if (num.order() != den.order())
        throw precondition_error("div_exact: order mismatch");
    const auto den_val = den.valuation();
    if (!den_val || *den_val != t_shift)
        throw degenerate_divisor_error("div_exact: divisor valuation does not equal t_shift");
    const auto num_val = num.valuation();
    if (num_val && *num_val < t_shift)
        throw precondition_error("div_exact: numerator valuation below t_shift");

    const std::size_t n = num.order() - t_shift;
    std::vector<rational> q(n + 1);
    const rational& lead = den.coefficient(t_shift);
    for (std::size_t k = 0; k <= n; ++k) {
        rational acc = num.coefficient(k + t_shift);
        for (std::size_t j = 1; j <= k; ++j)
            acc -= den.coefficient(j + t_shift) * q[k - j];
        q[k] = acc / lead;
    }
    return truncated_series(n, std::move(q));
}

} // namespace zpsym
