#pragma once

/**
 * Bernoulli and Euler numbers/polynomials, and the two exact polynomial
 * integral operators they represent.
 *
 * Conventions (both forced by the shift identities the operators satisfy):
 *   - B_1 = -1/2, i.e. the EGF is t/(e^t - 1). Many references use +1/2.
 *   - "Euler number" means E_n(0), the Euler polynomial at 0 (1, -1/2, 0,
 *     1/4, ...), NOT the integer secant numbers.
 *
 * Number caches are write-once memo tables: concurrent callers may race to
 * extend them but always observe a single consistent value per index.
 */

#include <cstddef>
#include <mutex>
#include <vector>

#include "zpsym/binomial.hpp"
#include "zpsym/polynomial.hpp"
#include "zpsym/rational.hpp"
#include "zpsym/report.hpp"

namespace zpsym {

/// B_n via the triangular recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1).
class bernoulli_cache {
public:
    rational operator()(std::size_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) {
            const std::size_t i = values_.size();
            rational acc(0);
            for (std::size_t k = 0; k < i; ++k)
                acc += rational(binomial(i + 1, k)) * values_[k];
            values_.push_back(-acc / rational(mpz_class(i + 1)));
        }
        return values_[n];
    }

private:
    mutable std::mutex mu_;
    mutable std::vector<rational> values_{rational(1)};
};

/// E_n(0) via the recurrence E_n(0) = -1/2 sum_{k<n} C(n,k) E_k(0) (n >= 1).
class euler_cache {
public:
    rational operator()(std::size_t n) const {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) {
            const std::size_t i = values_.size();
            rational acc(0);
            for (std::size_t k = 0; k < i; ++k)
                acc += rational(binomial(i, k)) * values_[k];
            values_.push_back(rational(-1, 2) * acc);
        }
        return values_[n];
    }

private:
    mutable std::mutex mu_;
    mutable std::vector<rational> values_{rational(1)};
};

inline rational bernoulli_number(std::size_t n) {
    static bernoulli_cache cache;
    return cache(n);
}

inline rational euler_number(std::size_t n) {
    static euler_cache cache;
    return cache(n);
}

/// B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^(n-k).
inline polynomial bernoulli_polynomial(std::size_t n) {
    std::vector<rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[n - k] = rational(binomial(n, k)) * bernoulli_number(k);
    return polynomial(std::move(c));
}

/// E_n(x) = sum_{k=0}^{n} C(n,k) E_k(0) x^(n-k); satisfies
/// E_n(x) + sum_{k=0}^{n} C(n,k) E_k(x) = 2 x^n.
inline polynomial euler_polynomial(std::size_t n) {
    std::vector<rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        c[n - k] = rational(binomial(n, k)) * euler_number(k);
    return polynomial(std::move(c));
}

/// Linear extension of x^n -> B_n (the exact bosonic integral of a polynomial).
inline rational bosonic_integral(const polynomial& f) {
    rational acc(0);
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        acc += c[i] * bernoulli_number(i);
    return acc;
}

/// Linear extension of x^n -> E_n(0) (the exact fermionic integral).
inline rational fermionic_integral(const polynomial& f) {
    rational acc(0);
    const auto& c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        acc += c[i] * euler_number(i);
    return acc;
}

namespace detail {

inline nlohmann::ordered_json shift_params(const polynomial& f, unsigned n) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : f.coefficients())
        coeffs.push_back(c.to_string());
    return {{"n", n}, {"poly", coeffs}};
}

} // namespace detail

/// Checks I(f(x+n)) = I(f) + sum_{i=0}^{n-1} f'(i) for the bosonic integral.
inline verification_report verify_shift_bosonic(const polynomial& f, unsigned n) {
    if (n == 0)
        throw precondition_error("verify_shift_bosonic: n must be positive");
    const rational lhs = bosonic_integral(f.shifted(rational(static_cast<unsigned long>(n))));
    rational rhs = bosonic_integral(f);
    const polynomial df = f.derivative();
    for (unsigned i = 0; i < n; ++i)
        rhs += df(rational(static_cast<unsigned long>(i)));
    return make_report("shift_bosonic", detail::shift_params(f, n), lhs, rhs);
}

/// Checks I*(f(x+n)) + (-1)^(n-1) I*(f) = 2 sum_{l=0}^{n-1} (-1)^(n-1-l) f(l)
/// for the fermionic integral.
inline verification_report verify_shift_fermionic(const polynomial& f, unsigned n) {
    if (n == 0)
        throw precondition_error("verify_shift_fermionic: n must be positive");
    const rational sign = (n % 2 == 1) ? rational(1) : rational(-1);
    const rational lhs =
        fermionic_integral(f.shifted(rational(static_cast<unsigned long>(n)))) +
        sign * fermionic_integral(f);
    rational rhs(0);
    for (unsigned l = 0; l < n; ++l) {
        const rational term = f(rational(static_cast<unsigned long>(l)));
        rhs += ((n - 1 - l) % 2 == 0) ? term : -term;
    }
    rhs = rational(2) * rhs;
    return make_report("shift_fermionic", detail::shift_params(f, n), lhs, rhs);
}

} // namespace zpsym
