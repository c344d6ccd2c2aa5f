#pragma once

/**
 * Finite-precision p-adic scalars.
 *
 * A nonzero value is unit * p^valuation with the unit kept in [1, p^precision)
 * and coprime to p; `precision` counts significant p-adic digits. Zero is a
 * distinguished value carrying an absolute bound: "all digits up to p^bound
 * are zero" (bound = +infinity for an exact zero, so valuation() reports
 * infinity for anything indistinguishable from zero at working precision).
 *
 * Precision tracking: multiplication keeps the minimum relative precision of
 * the operands; addition is exact in absolute precision; division by a value
 * of valuation v > 0 additionally consumes v digits, and an operation that
 * would leave fewer than one significant digit throws precision_exhausted.
 */

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <utility>

#include "zpsym/errors.hpp"
#include "zpsym/rational.hpp"

namespace zpsym {

inline constexpr long padic_infinity = std::numeric_limits<long>::max();

inline bool is_prime(unsigned long n) {
    return mpz_probab_prime_p(mpz_class(n).get_mpz_t(), 32) != 0;
}

/// v_p(z); +infinity sentinel for 0.
inline long integer_valuation(const mpz_class& z, unsigned long p) {
    if (p < 2)
        throw precondition_error("integer_valuation: p must be >= 2");
    if (z == 0)
        return padic_infinity;
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

/// v_p(r) = v_p(num) - v_p(den); +infinity sentinel for 0.
inline long valuation_of_rational(const rational& r, unsigned long p) {
    if (r.is_zero())
        return padic_infinity;
    return integer_valuation(r.numerator(), p) - integer_valuation(r.denominator(), p);
}

class padic_scalar {
public:
    /// Nonzero value unit * p^valuation at the given precision.
    padic_scalar(unsigned long p, long valuation, const mpz_class& unit, long precision)
        : p_(p), val_(valuation), prec_(precision) {
        check_prime_base(p);
        if (precision < 1)
            throw precondition_error("padic_scalar: precision must be >= 1");
        mpz_mod(unit_.get_mpz_t(), unit.get_mpz_t(), power_of_p(precision).get_mpz_t());
        if (unit_ == 0 || mpz_divisible_ui_p(unit_.get_mpz_t(), p))
            throw precondition_error("padic_scalar: unit must be coprime to p");
    }

    static padic_scalar zero(unsigned long p) { return padic_scalar(p, padic_infinity); }

    static padic_scalar one(unsigned long p, long precision) {
        return padic_scalar(p, 0, mpz_class(1), precision);
    }

    static padic_scalar from_integer(const mpz_class& z, unsigned long p, long precision) {
        check_prime_base(p);
        if (z == 0)
            return zero(p);
        mpz_class unit;
        const long v = static_cast<long>(
            mpz_remove(unit.get_mpz_t(), z.get_mpz_t(), mpz_class(p).get_mpz_t()));
        return padic_scalar(p, v, unit, precision);
    }

    static padic_scalar from_rational(const rational& r, unsigned long p, long precision) {
        check_prime_base(p);
        if (precision < 1)
            throw precondition_error("padic_scalar: precision must be >= 1");
        if (r.is_zero())
            return zero(p);
        mpz_class nu, du;
        const long vn = static_cast<long>(
            mpz_remove(nu.get_mpz_t(), r.numerator().get_mpz_t(), mpz_class(p).get_mpz_t()));
        const long vd = static_cast<long>(
            mpz_remove(du.get_mpz_t(), r.denominator().get_mpz_t(), mpz_class(p).get_mpz_t()));
        mpz_class mod, inv;
        mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(precision));
        if (mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw precondition_error("padic_scalar: denominator not invertible");
        return padic_scalar(p, vn - vd, mpz_class(nu * inv), precision);
    }

    unsigned long prime() const { return p_; }
    bool is_zero() const { return prec_ == 0; }

    /// Valuation; padic_infinity for anything indistinguishable from zero.
    long valuation() const { return is_zero() ? padic_infinity : val_; }

    /// Significant digits (0 for zero values).
    long precision() const { return prec_; }

    const mpz_class& unit() const { return unit_; }

    /// Index of the first digit beyond everything this value knows:
    /// val + prec for nonzero, the cancellation bound for zero.
    long absolute_precision() const {
        return is_zero() ? val_ : sat_add(val_, prec_);
    }

    /// Same value viewed at lower precision.
    padic_scalar truncated(long new_precision) const {
        if (is_zero())
            return *this;
        if (new_precision < 1 || new_precision > prec_)
            throw precondition_error("padic_scalar: bad truncation precision");
        mpz_class u;
        mpz_mod(u.get_mpz_t(), unit_.get_mpz_t(), power_of_p(new_precision).get_mpz_t());
        return padic_scalar(p_, val_, u, new_precision);
    }

    padic_scalar operator-() const {
        if (is_zero())
            return *this;
        return padic_scalar(p_, val_, mpz_class(power_of_p(prec_) - unit_), prec_);
    }

    friend padic_scalar operator+(const padic_scalar& a, const padic_scalar& b) {
        require_same_prime(a, b);
        if (a.is_zero() && b.is_zero())
            return padic_scalar(a.p_, std::min(a.val_, b.val_));
        if (a.is_zero())
            return b.capped_absolute(a.val_);
        if (b.is_zero())
            return a.capped_absolute(b.val_);
        const long v = std::min(a.val_, b.val_);
        const long known = std::min(a.val_ + a.prec_, b.val_ + b.prec_);
        const long rel = known - v; // >= min precision >= 1
        const mpz_class mod = a.power_of_p(rel);
        mpz_class s = a.unit_ * a.power_of_p(a.val_ - v) + b.unit_ * b.power_of_p(b.val_ - v);
        mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        if (s == 0)
            return padic_scalar(a.p_, known);
        mpz_class u;
        const long e = static_cast<long>(
            mpz_remove(u.get_mpz_t(), s.get_mpz_t(), mpz_class(a.p_).get_mpz_t()));
        return padic_scalar(a.p_, v + e, u, rel - e);
    }

    friend padic_scalar operator-(const padic_scalar& a, const padic_scalar& b) {
        return a + (-b);
    }

    friend padic_scalar operator*(const padic_scalar& a, const padic_scalar& b) {
        require_same_prime(a, b);
        if (a.is_zero() || b.is_zero())
            return padic_scalar(a.p_, sat_add(a.val_, b.val_));
        const long prec = std::min(a.prec_, b.prec_);
        mpz_class u = a.unit_ * b.unit_;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), a.power_of_p(prec).get_mpz_t());
        return padic_scalar(a.p_, a.val_ + b.val_, u, prec);
    }

    friend padic_scalar operator/(const padic_scalar& a, const padic_scalar& b) {
        require_same_prime(a, b);
        if (b.is_zero())
            throw degenerate_divisor_error("padic_scalar: division by (indistinguishable-from-)zero");
        if (a.is_zero())
            return padic_scalar(a.p_, sat_sub(a.val_, b.val_));
        const long prec = std::min(a.prec_, b.prec_) - std::max(b.val_, 0L);
        if (prec < 1)
            throw precision_exhausted_error("padic_scalar: division leaves no significant digits");
        const mpz_class mod = a.power_of_p(prec);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
        mpz_class u = a.unit_ * inv;
        mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
        return padic_scalar(a.p_, a.val_ - b.val_, u, prec);
    }

    padic_scalar inverse() const { return one(p_, std::max(prec_, 1L)) / *this; }

    /// x^e by square-and-multiply; x^0 = 1 at x's precision (nonzero x).
    padic_scalar pow(unsigned long e) const {
        if (e == 0) {
            if (is_zero())
                throw precondition_error("padic_scalar: 0^0 at unknown precision");
            return one(p_, prec_);
        }
        padic_scalar base = *this;
        padic_scalar acc = base;
        --e;
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const padic_scalar& a, const padic_scalar& b) {
        return a.p_ == b.p_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.unit_ == b.unit_;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["p"] = p_;
        if (val_ == padic_infinity)
            j["val"] = "inf";
        else
            j["val"] = val_;
        j["unit"] = unit_.get_str();
        j["prec"] = prec_;
        return j;
    }

private:
    // Zero with an absolute cancellation bound (padic_infinity = exact zero).
    padic_scalar(unsigned long p, long bound) : p_(p), val_(bound), unit_(0), prec_(0) {
        check_prime_base(p);
    }

    static void check_prime_base(unsigned long p) {
        if (p < 2)
            throw precondition_error("padic_scalar: p must be a prime >= 2");
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw precondition_error("padic_scalar: p must be prime");
    }

    static void require_same_prime(const padic_scalar& a, const padic_scalar& b) {
        if (a.p_ != b.p_)
            throw precondition_error("padic_scalar: mixed primes");
    }

    static long sat_add(long a, long b) {
        if (a == padic_infinity || b == padic_infinity)
            return padic_infinity;
        return a + b;
    }

    static long sat_sub(long a, long b) {
        if (a == padic_infinity)
            return padic_infinity;
        return a - b;
    }

    mpz_class power_of_p(long e) const {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), p_, static_cast<unsigned long>(e));
        return r;
    }

    // Value capped so nothing beyond p^bound is claimed.
    padic_scalar capped_absolute(long bound) const {
        if (bound == padic_infinity)
            return *this;
        if (val_ >= bound)
            return padic_scalar(p_, bound);
        return truncated(std::min(prec_, bound - val_));
    }

    unsigned long p_;
    long val_; // valuation for nonzero values; absolute bound for zeros
    mpz_class unit_;
    long prec_;
};

/// True when a and b agree on every commonly known digit.
inline bool agrees(const padic_scalar& a, const padic_scalar& b) {
    return (a - b).is_zero();
}

/// q in Z_p with |1 - q|_p < 1 (i.e. q = 1 mod p), the deformation parameter.
class q_parameter {
public:
    explicit q_parameter(padic_scalar q) : q_(std::move(q)) {
        if (q_.is_zero())
            throw precondition_error("q_parameter: q must be nonzero");
        const padic_scalar delta =
            q_ - padic_scalar::one(q_.prime(), q_.precision());
        if (!delta.is_zero() && delta.valuation() < 1)
            throw precondition_error("q_parameter: |1 - q|_p must be < 1");
    }

    /// q = 1 + p^j at the given working precision.
    static q_parameter one_plus_prime_power(unsigned long p, unsigned long j, long precision) {
        if (j == 0)
            throw precondition_error("q_parameter: exponent must be >= 1");
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), p, j);
        q += 1;
        return q_parameter(padic_scalar::from_integer(q, p, precision));
    }

    const padic_scalar& value() const { return q_; }
    unsigned long prime() const { return q_.prime(); }
    long precision() const { return q_.precision(); }

private:
    padic_scalar q_;
};

} // namespace zpsym
