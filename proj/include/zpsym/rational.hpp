#pragma once

/**
 * Exact arbitrary-precision rationals (GMP-backed).
 *
 * Values are always kept in lowest terms with a positive denominator, so
 * equality is structural. The text form is "num/den" with the denominator
 * omitted when it is 1, e.g. "-691/2730", "15".
 */

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "zpsym/errors.hpp"

namespace zpsym {

class rational {
public:
    rational() : v_(0) {}
    rational(int n) : v_(n) {}
    rational(long n) : v_(static_cast<signed long>(n)) {}
    rational(unsigned long n) : v_(n) {}
    rational(const mpz_class& n) : v_(n) {}
    rational(long num, long den) : rational(mpz_class(num), mpz_class(den)) {}

    rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw degenerate_divisor_error("rational: zero denominator");
        mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
        mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
        v_.canonicalize();
    }

    /// Parses "num" or "num/den" (decimal). Inverse of to_string().
    static rational parse(const std::string& text) {
        mpq_class q;
        try {
            q = mpq_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw precondition_error("rational: cannot parse '" + text + "'");
        }
        if (q.get_den() == 0)
            throw degenerate_divisor_error("rational: zero denominator in '" + text + "'");
        q.canonicalize();
        return rational(std::move(q));
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Exact integer value of an integral rational.
    mpz_class to_integer() const {
        if (!is_integer())
            throw precondition_error("rational: " + to_string() + " is not an integer");
        return v_.get_num();
    }

    std::string to_string() const { return v_.get_str(); }

    rational operator-() const { return rational(mpq_class(-v_)); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(mpq_class(a.v_ + b.v_));
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(mpq_class(a.v_ - b.v_));
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(mpq_class(a.v_ * b.v_));
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero())
            throw degenerate_divisor_error("rational: division by zero");
        return rational(mpq_class(a.v_ / b.v_));
    }

    rational& operator+=(const rational& r) { v_ += r.v_; return *this; }
    rational& operator-=(const rational& r) { v_ -= r.v_; return *this; }
    rational& operator*=(const rational& r) { v_ *= r.v_; return *this; }
    rational& operator/=(const rational& r) { return *this = *this / r; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

private:
    explicit rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

/// base^exponent; negative exponents invert (nonzero base). 0^0 = 1.
inline rational pow(const rational& base, long exponent) {
    if (exponent == 0)
        return rational(1);
    if (base.is_zero()) {
        if (exponent < 0)
            throw degenerate_divisor_error("pow: zero base with negative exponent");
        return rational(0);
    }
    const unsigned long e =
        exponent < 0 ? -static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    return exponent > 0 ? rational(num, den) : rational(den, num);
}

inline std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.to_string();
}

} // namespace zpsym
