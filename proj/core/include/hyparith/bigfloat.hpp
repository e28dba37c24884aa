#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "hyparith/error.hpp"

namespace hyparith {

/// Working precision in bits.
using Precision = unsigned long;

inline constexpr Precision kDefaultPrecision = 256;

/// Guard bits added inside transcendental kernels before rounding back.
inline constexpr Precision kGuardBits = 32;

using Rational = mpq_class;
using Integer = mpz_class;

/// Arbitrary-precision binary float. Thin RAII wrapper over mpfr_t; every
/// value carries its own precision. Arithmetic members round to nearest at
/// the precision of the wider operand unless stated otherwise. The ball layer
/// uses raw() to drive directed rounding.
class BigReal {
  public:
    explicit BigReal(Precision prec = kDefaultPrecision) { mpfr_init2(v_, static_cast<mpfr_prec_t>(prec)); }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    static BigReal from_si(long x, Precision prec) {
        BigReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal from_rational(const Rational& q, Precision prec) {
        BigReal r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigReal from_integer(const Integer& z, Precision prec) {
        BigReal r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    /// Parse a decimal string ("-1.25e-3"). Rounds to nearest.
    static BigReal from_decimal(const std::string& s, Precision prec);
    static BigReal zero(Precision prec) { return from_si(0, prec); }
    static BigReal pi(Precision prec) {
        BigReal r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e as an exact float.
    static BigReal pow2(long e, Precision prec = 64) {
        BigReal r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    Precision precision() const { return static_cast<Precision>(mpfr_get_prec(v_)); }
    BigReal rounded_to(Precision prec) const {
        BigReal r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    bool operator<(const BigReal& o) const { return mpfr_less_p(v_, o.v_) != 0; }
    bool operator<=(const BigReal& o) const { return mpfr_lessequal_p(v_, o.v_) != 0; }
    bool operator>(const BigReal& o) const { return mpfr_greater_p(v_, o.v_) != 0; }
    bool operator>=(const BigReal& o) const { return mpfr_greaterequal_p(v_, o.v_) != 0; }
    bool operator==(const BigReal& o) const { return mpfr_equal_p(v_, o.v_) != 0; }

    BigReal operator-() const {
        BigReal r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigReal operator+(const BigReal& o) const { return bin(o, mpfr_add); }
    BigReal operator-(const BigReal& o) const { return bin(o, mpfr_sub); }
    BigReal operator*(const BigReal& o) const { return bin(o, mpfr_mul); }
    BigReal operator/(const BigReal& o) const { return bin(o, mpfr_div); }

    BigReal abs() const {
        BigReal r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal rendering with the given number of significant digits,
    /// deterministic across runs.
    std::string to_decimal(size_t digits = 20) const;

    /// Exponent e with 2^(e-1) <= |x| < 2^e; only valid for regular values.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    BigReal bin(const BigReal& o, mpfr_binop op) const {
        BigReal r(std::max(precision(), o.precision()));
        op(r.v_, v_, o.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

/// Rectangular complex value: a pair of BigReal at a common precision.
struct BigComplex {
    BigReal re, im;

    explicit BigComplex(Precision prec = kDefaultPrecision)
        : re(BigReal::zero(prec)), im(BigReal::zero(prec)) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    Precision precision() const { return std::max(re.precision(), im.precision()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex conj() const { return {re, -im}; }
};

}  // namespace hyparith
