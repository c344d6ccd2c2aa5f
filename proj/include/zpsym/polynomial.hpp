#pragma once

/**
 * Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficient i is the coefficient of x^i. Trailing zeros are trimmed, so
 * the zero polynomial is the empty coefficient list and degree() of zero
 * is disengaged rather than a -inf sentinel.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zpsym/binomial.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

class polynomial {
public:
    polynomial() = default;

    explicit polynomial(std::vector<rational> coefficients) : c_(std::move(coefficients)) {
        trim();
    }

    static polynomial constant(const rational& c) { return polynomial({c}); }

    /// c * x^k
    static polynomial monomial(std::size_t k, const rational& c = rational(1)) {
        std::vector<rational> v(k + 1);
        v[k] = c;
        return polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty())
            return std::nullopt;
        return c_.size() - 1;
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    rational coefficient(std::size_t i) const {
        return i < c_.size() ? c_[i] : rational(0);
    }

    const std::vector<rational>& coefficients() const { return c_; }

    rational operator()(const rational& x) const {
        rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    polynomial derivative() const {
        if (c_.size() <= 1)
            return polynomial();
        std::vector<rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = rational(mpz_class(i)) * c_[i];
        return polynomial(std::move(d));
    }

    /// q with q(x) = p(x + a), expanded exactly via binomials.
    polynomial shifted(const rational& a) const {
        if (a.is_zero() || c_.empty())
            return *this;
        std::vector<rational> apow(c_.size());
        apow[0] = rational(1);
        for (std::size_t e = 1; e < apow.size(); ++e)
            apow[e] = apow[e - 1] * a;
        std::vector<rational> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j <= i; ++j)
                out[j] += c_[i] * rational(binomial(i, j)) * apow[i - j];
        }
        return polynomial(std::move(out));
    }

    polynomial operator-() const {
        std::vector<rational> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i] = -c_[i];
        return polynomial(std::move(v));
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        std::vector<rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coefficient(i) + b.coefficient(i);
        return polynomial(std::move(v));
    }

    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        return a + (-b);
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.c_.empty() || b.c_.empty())
            return polynomial();
        std::vector<rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return polynomial(std::move(v));
    }

    friend polynomial operator*(const rational& s, const polynomial& p) {
        std::vector<rational> v(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            v[i] = s * p.c_[i];
        return polynomial(std::move(v));
    }

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<rational> c_;
};

} // namespace zpsym
