#pragma once

#include <string>

#include "hyparith/bigfloat.hpp"

namespace hyparith {

/// Real interval in midpoint-radius form. Every operation returns a ball
/// containing the exact image of all points of the inputs: midpoints are
/// rounded to nearest and the rounding error is absorbed into the radius,
/// which is computed with upward rounding throughout.
class RealBall {
  public:
    RealBall() : mid_(BigReal::zero(kDefaultPrecision)), rad_(BigReal::zero(kRadiusPrec)) {}
    RealBall(BigReal mid, BigReal rad);

    static RealBall exact(const BigReal& x);
    static RealBall from_rational(const Rational& q, Precision prec);
    static RealBall from_si(long x, Precision prec);
    static RealBall zero(Precision prec);
    /// pi with a one-ulp radius.
    static RealBall pi(Precision prec);

    const BigReal& mid() const { return mid_; }
    const BigReal& rad() const { return rad_; }
    Precision precision() const { return mid_.precision(); }

    RealBall operator+(const RealBall& o) const;
    RealBall operator-(const RealBall& o) const;
    RealBall operator-() const;
    RealBall operator*(const RealBall& o) const;
    /// Throws Inconclusive if the divisor ball contains zero.
    RealBall operator/(const RealBall& o) const;

    RealBall abs() const;
    /// Natural log; throws Inconclusive unless the ball is strictly positive.
    RealBall log() const;
    /// Integer power by binary splitting.
    RealBall pow(long e) const;
    /// Widen the radius by t (t >= 0).
    RealBall inflated(const BigReal& t) const;
    RealBall rounded_to(Precision prec) const;

    bool contains_zero() const;
    bool is_positive() const;  // certified: every point > 0
    bool is_negative() const;
    /// Certified containment of an exact rational.
    bool contains(const Rational& q) const;
    /// Certified containment of another ball.
    bool contains(const RealBall& o) const;
    /// Certified |this| < |o| as sets (upper bound vs lower bound).
    bool abs_certainly_less(const RealBall& o) const;
    /// Upper bound of |x| over the ball, rounded up.
    BigReal abs_upper() const;
    /// Lower bound of |x| over the ball, rounded down (0 if it contains 0).
    BigReal abs_lower() const;
    BigReal lower() const;
    BigReal upper() const;

    std::string to_string(size_t digits = 20) const;

    static constexpr Precision kRadiusPrec = 32;

  private:
    BigReal mid_;
    BigReal rad_;
};

/// atan2 over a box [x +- rx] x [y +- ry]; the box must avoid the branch cut
/// (the closed negative real axis and the origin), else Inconclusive.
RealBall ball_atan2(const RealBall& y, const RealBall& x);

/// Complex disk: center and a single Euclidean radius.
class ComplexBall {
  public:
    ComplexBall() : mid_(kDefaultPrecision), rad_(BigReal::zero(RealBall::kRadiusPrec)) {}
    ComplexBall(BigComplex mid, BigReal rad);
    ComplexBall(const RealBall& re, const RealBall& im);

    static ComplexBall exact(const BigComplex& z);
    static ComplexBall from_rationals(const Rational& re, const Rational& im, Precision prec);

    const BigComplex& mid() const { return mid_; }
    const BigReal& rad() const { return rad_; }
    Precision precision() const { return mid_.precision(); }

    RealBall real() const;
    RealBall imag() const;

    ComplexBall operator+(const ComplexBall& o) const;
    ComplexBall operator-(const ComplexBall& o) const;
    ComplexBall operator-() const;
    ComplexBall operator*(const ComplexBall& o) const;
    /// Throws Inconclusive if the divisor disk contains zero.
    ComplexBall operator/(const ComplexBall& o) const;
    ComplexBall conj() const;
    ComplexBall pow(long e) const;
    ComplexBall inflated(const BigReal& t) const;
    ComplexBall rounded_to(Precision prec) const;

    RealBall abs() const;
    /// log|z|; requires the disk to exclude zero.
    RealBall log_abs() const;
    /// Principal argument; the disk must avoid the branch cut.
    RealBall arg() const;
    /// Principal log as (log|z|, arg z).
    ComplexBall log() const;

    bool contains_zero() const;
    bool definitely_nonzero() const;
    bool contains(const ComplexBall& o) const;
    /// Certified containment in the interior (strict), for Newton tests.
    bool strictly_contains(const ComplexBall& o) const;
    bool contains(const Rational& re, const Rational& im) const;
    /// Certified disjointness of two disks.
    bool disjoint_from(const ComplexBall& o) const;
    BigReal abs_upper() const;
    BigReal abs_lower() const;

    std::string to_string(size_t digits = 20) const;

  private:
    BigComplex mid_;
    BigReal rad_;
};

/// Distance upper bound |a - b| rounded up (midpoint distance + radii).
BigReal center_distance_upper(const ComplexBall& a, const ComplexBall& b);

}  // namespace hyparith
