#include "hyparith/ball.hpp"

#include <sstream>

namespace hyparith {

namespace {

constexpr Precision kRP = RealBall::kRadiusPrec;

// One ulp of x at its own precision; an upper bound for any half-ulp
// rounding error. Zero results are exact or underflowed to the tiny range.
BigReal ulp(const BigReal& x) {
    if (mpfr_regular_p(x.raw()) == 0) {
        if (mpfr_zero_p(x.raw())) return BigReal::zero(kRP);
        throw InsufficientPrecision("non-finite midpoint in ball arithmetic");
    }
    BigReal u(kRP);
    mpfr_set_ui_2exp(u.raw(), 1, x.exponent() - static_cast<long>(x.precision()) + 1, MPFR_RNDU);
    return u;
}

BigReal ulp_if(int ternary, const BigReal& x) {
    return ternary == 0 ? BigReal::zero(kRP) : ulp(x);
}

BigReal radd(const BigReal& a, const BigReal& b) {
    BigReal r(kRP);
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

BigReal radd(const BigReal& a, const BigReal& b, const BigReal& c) { return radd(radd(a, b), c); }

BigReal rmul(const BigReal& a, const BigReal& b) {
    BigReal r(kRP);
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

BigReal rdiv_up(const BigReal& a, const BigReal& b) {
    BigReal r(kRP);
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

// |x| rounded up to radius precision.
BigReal mag_up(const BigReal& x) {
    BigReal r(kRP);
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDU);
    return r;
}

// |x| rounded down.
BigReal mag_down(const BigReal& x) {
    BigReal r(kRP);
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDD);
    return r;
}

// Upper bound of sqrt(a^2 + b^2) at radius precision.
BigReal hypot_up(const BigReal& a, const BigReal& b) {
    BigReal r(kRP + 8);
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    BigReal out(kRP);
    mpfr_set(out.raw(), r.raw(), MPFR_RNDU);
    return out;
}

BigReal hypot_down(const BigReal& a, const BigReal& b) {
    BigReal r(kRP + 8);
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
    BigReal out(kRP);
    mpfr_set(out.raw(), r.raw(), MPFR_RNDD);
    return out;
}

}  // namespace

RealBall::RealBall(BigReal mid, BigReal rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw InternalError("negative ball radius");
}

RealBall RealBall::exact(const BigReal& x) { return RealBall(x, BigReal::zero(kRP)); }

RealBall RealBall::from_rational(const Rational& q, Precision prec) {
    BigReal m(prec);
    int t = mpfr_set_q(m.raw(), q.get_mpq_t(), MPFR_RNDN);
    BigReal r = ulp_if(t, m);
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::from_si(long x, Precision prec) {
    return RealBall::exact(BigReal::from_si(x, prec));
}

RealBall RealBall::zero(Precision prec) { return RealBall::exact(BigReal::zero(prec)); }

RealBall RealBall::pi(Precision prec) {
    BigReal m = BigReal::pi(prec);
    BigReal r = ulp(m);
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::operator+(const RealBall& o) const {
    BigReal m(std::max(precision(), o.precision()));
    int t = mpfr_add(m.raw(), mid_.raw(), o.mid_.raw(), MPFR_RNDN);
    BigReal r = radd(rad_, o.rad_, ulp_if(t, m));
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::operator-(const RealBall& o) const { return *this + (-o); }

RealBall RealBall::operator-() const { return RealBall(-mid_, rad_); }

RealBall RealBall::operator*(const RealBall& o) const {
    BigReal m(std::max(precision(), o.precision()));
    int t = mpfr_mul(m.raw(), mid_.raw(), o.mid_.raw(), MPFR_RNDN);
    BigReal r = radd(radd(rmul(mag_up(mid_), o.rad_), rmul(mag_up(o.mid_), rad_)),
                     radd(rmul(rad_, o.rad_), ulp_if(t, m)));
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::operator/(const RealBall& o) const {
    BigReal lo = mag_down(o.mid_);
    BigReal denom_lo(kRP);
    mpfr_sub(denom_lo.raw(), lo.raw(), o.rad_.raw(), MPFR_RNDD);
    if (denom_lo.sign() <= 0) throw Inconclusive("division by a ball containing zero");
    BigReal m(std::max(precision(), o.precision()));
    int t = mpfr_div(m.raw(), mid_.raw(), o.mid_.raw(), MPFR_RNDN);
    // |a/b - m1/m2| <= (r1 |m2| + r2 |m1|) / (|m2| (|m2| - r2))
    BigReal num = radd(rmul(rad_, mag_up(o.mid_)), rmul(o.rad_, mag_up(mid_)));
    BigReal den(kRP);
    mpfr_mul(den.raw(), lo.raw(), denom_lo.raw(), MPFR_RNDD);
    BigReal r = radd(rdiv_up(num, den), ulp_if(t, m));
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::abs() const {
    if (!contains_zero()) return RealBall(mid_.abs(), rad_);
    // hull [0, |mid|+rad]
    BigReal hi = radd(mag_up(mid_), rad_);
    BigReal half(kRP);
    mpfr_div_2ui(half.raw(), hi.raw(), 1, MPFR_RNDU);
    BigReal m = half.rounded_to(precision());
    return RealBall(std::move(m), half);
}

RealBall RealBall::log() const {
    BigReal lo(kRP);
    mpfr_sub(lo.raw(), mid_.raw(), rad_.raw(), MPFR_RNDD);
    if (lo.sign() <= 0) throw Inconclusive("log of a ball not strictly positive");
    BigReal m(precision());
    int t = mpfr_log(m.raw(), mid_.raw(), MPFR_RNDN);
    BigReal r = radd(rdiv_up(rad_, lo), ulp_if(t, m));
    return RealBall(std::move(m), std::move(r));
}

RealBall RealBall::pow(long e) const {
    if (e == 0) return RealBall::from_si(1, precision());
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RealBall acc = RealBall::from_si(1, precision());
    RealBall base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    if (invert) return RealBall::from_si(1, precision()) / acc;
    return acc;
}

RealBall RealBall::inflated(const BigReal& t) const {
    if (t.sign() < 0) throw InternalError("negative inflation");
    BigReal tt(kRP);
    mpfr_set(tt.raw(), t.raw(), MPFR_RNDU);
    return RealBall(mid_, radd(rad_, tt));
}

RealBall RealBall::rounded_to(Precision prec) const {
    BigReal m(prec);
    int t = mpfr_set(m.raw(), mid_.raw(), MPFR_RNDN);
    return RealBall(std::move(m), radd(rad_, ulp_if(t, m)));
}

bool RealBall::contains_zero() const { return mpfr_cmpabs(mid_.raw(), rad_.raw()) <= 0; }

bool RealBall::is_positive() const {
    BigReal lo(kRP);
    mpfr_sub(lo.raw(), mid_.raw(), rad_.raw(), MPFR_RNDD);
    return lo.sign() > 0;
}

bool RealBall::is_negative() const {
    BigReal hi(kRP);
    mpfr_add(hi.raw(), mid_.raw(), rad_.raw(), MPFR_RNDU);
    return hi.sign() < 0;
}

bool RealBall::contains(const Rational& q) const {
    BigReal d(std::max<Precision>(precision(), 64));
    mpfr_sub_q(d.raw(), mid_.raw(), q.get_mpq_t(), MPFR_RNDA);  // away = upper bound on |d|
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
    return mpfr_cmp(d.raw(), rad_.raw()) <= 0;
}

bool RealBall::contains(const RealBall& o) const {
    BigReal d(kRP + 8);
    mpfr_sub(d.raw(), mid_.raw(), o.mid_.raw(), MPFR_RNDA);
    mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
    BigReal lhs(kRP);
    mpfr_add(lhs.raw(), d.raw(), o.rad_.raw(), MPFR_RNDU);
    return mpfr_cmp(lhs.raw(), rad_.raw()) <= 0;
}

bool RealBall::abs_certainly_less(const RealBall& o) const {
    return mpfr_cmp(abs_upper().raw(), o.abs_lower().raw()) < 0;
}

BigReal RealBall::abs_upper() const { return radd(mag_up(mid_), rad_); }

BigReal RealBall::abs_lower() const {
    BigReal lo(kRP);
    mpfr_sub(lo.raw(), mag_down(mid_).raw(), rad_.raw(), MPFR_RNDD);
    if (lo.sign() < 0) return BigReal::zero(kRP);
    return lo;
}

BigReal RealBall::lower() const {
    BigReal r(precision());
    mpfr_sub(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDD);
    return r;
}

BigReal RealBall::upper() const {
    BigReal r(precision());
    mpfr_add(r.raw(), mid_.raw(), rad_.raw(), MPFR_RNDU);
    return r;
}

std::string RealBall::to_string(size_t digits) const {
    std::ostringstream out;
    out << mid_.to_decimal(digits) << " +/- " << rad_.to_decimal(3);
    return out.str();
}

RealBall ball_atan2(const RealBall& y, const RealBall& x) {
    // Treat the box as a disk of radius rx+ry around (mx, my).
    BigReal r = radd(x.rad(), y.rad());
    BigReal absm = hypot_down(x.mid(), y.mid());
    BigReal gap(kRP);
    mpfr_sub(gap.raw(), absm.raw(), r.raw(), MPFR_RNDD);
    if (gap.sign() <= 0) throw Inconclusive("atan2 box contains the origin");
    // Branch-cut avoidance: either entirely off the real axis or strictly in
    // the right half plane.
    bool off_axis = mpfr_cmpabs(y.mid().raw(), r.raw()) > 0;
    BigReal xlo(kRP);
    mpfr_sub(xlo.raw(), x.mid().raw(), r.raw(), MPFR_RNDD);
    bool right_half = xlo.sign() > 0;
    if (!off_axis && !right_half) throw Inconclusive("atan2 box may cross the branch cut");
    Precision prec = std::max(x.precision(), y.precision());
    BigReal m(prec);
    int t = mpfr_atan2(m.raw(), y.mid().raw(), x.mid().raw(), MPFR_RNDN);
    // |arg z - arg m| <= r / sqrt(|m|^2 - r^2) <= r / (|m| - r)
    BigReal rr = radd(rdiv_up(r, gap), ulp_if(t, m));
    return RealBall(std::move(m), std::move(rr));
}

ComplexBall::ComplexBall(BigComplex mid, BigReal rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
    if (rad_.sign() < 0) throw InternalError("negative ball radius");
}

ComplexBall::ComplexBall(const RealBall& re, const RealBall& im)
    : mid_(re.mid(), im.mid()), rad_(radd(re.rad(), im.rad())) {}

ComplexBall ComplexBall::exact(const BigComplex& z) {
    return ComplexBall(z, BigReal::zero(kRP));
}

ComplexBall ComplexBall::from_rationals(const Rational& re, const Rational& im, Precision prec) {
    return ComplexBall(RealBall::from_rational(re, prec), RealBall::from_rational(im, prec));
}

RealBall ComplexBall::real() const { return RealBall(mid_.re, rad_); }
RealBall ComplexBall::imag() const { return RealBall(mid_.im, rad_); }

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
    Precision prec = std::max(precision(), o.precision());
    BigReal re(prec), im(prec);
    int t1 = mpfr_add(re.raw(), mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDN);
    int t2 = mpfr_add(im.raw(), mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDN);
    BigReal r = radd(radd(rad_, o.rad_), radd(ulp_if(t1, re), ulp_if(t2, im)));
    return ComplexBall(BigComplex(std::move(re), std::move(im)), std::move(r));
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const { return *this + (-o); }

ComplexBall ComplexBall::operator-() const { return ComplexBall(-mid_, rad_); }

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
    Precision prec = std::max(precision(), o.precision());
    BigComplex m(prec);
    // (a+bi)(c+di) with each component rounded once more below
    BigReal t1(prec), t2(prec);
    mpfr_mul(t1.raw(), mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDN);
    mpfr_sub(m.re.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    mpfr_mul(t1.raw(), mid_.re.raw(), o.mid_.im.raw(), MPFR_RNDN);
    mpfr_mul(t2.raw(), mid_.im.raw(), o.mid_.re.raw(), MPFR_RNDN);
    mpfr_add(m.im.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
    // rounding of the four products and two sums: bound by 3 ulps per part
    BigReal round_err = radd(rmul(ulp(m.re), BigReal::from_si(3, kRP)),
                             rmul(ulp(m.im), BigReal::from_si(3, kRP)));
    BigReal a1 = hypot_up(mid_.re, mid_.im);
    BigReal a2 = hypot_up(o.mid_.re, o.mid_.im);
    BigReal r = radd(radd(rmul(a1, o.rad_), rmul(a2, rad_)), radd(rmul(rad_, o.rad_), round_err));
    return ComplexBall(std::move(m), std::move(r));
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const {
    // reciprocal of o, then multiply
    BigReal lo = hypot_down(o.mid_.re, o.mid_.im);
    BigReal gap(kRP);
    mpfr_sub(gap.raw(), lo.raw(), o.rad_.raw(), MPFR_RNDD);
    if (gap.sign() <= 0) throw Inconclusive("division by a complex ball containing zero");
    Precision prec = std::max(precision(), o.precision());
    BigComplex m(prec);
    BigReal den(prec), t1(prec);
    mpfr_mul(den.raw(), o.mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDN);
    mpfr_mul(t1.raw(), o.mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDN);
    mpfr_add(den.raw(), den.raw(), t1.raw(), MPFR_RNDN);
    mpfr_div(m.re.raw(), o.mid_.re.raw(), den.raw(), MPFR_RNDN);
    mpfr_div(m.im.raw(), o.mid_.im.raw(), den.raw(), MPFR_RNDN);
    mpfr_neg(m.im.raw(), m.im.raw(), MPFR_RNDN);
    BigReal round_err = radd(rmul(ulp(m.re), BigReal::from_si(3, kRP)),
                             rmul(ulp(m.im), BigReal::from_si(3, kRP)));
    // |1/z - 1/m| <= r / (|m| (|m|-r))
    BigReal denom(kRP);
    mpfr_mul(denom.raw(), lo.raw(), gap.raw(), MPFR_RNDD);
    BigReal r = radd(rdiv_up(o.rad_, denom), round_err);
    ComplexBall recip(std::move(m), std::move(r));
    return *this * recip;
}

ComplexBall ComplexBall::conj() const { return ComplexBall(mid_.conj(), rad_); }

ComplexBall ComplexBall::pow(long e) const {
    Precision prec = precision();
    if (e == 0) return ComplexBall::exact(BigComplex(BigReal::from_si(1, prec), BigReal::zero(prec)));
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    ComplexBall one = ComplexBall::exact(BigComplex(BigReal::from_si(1, prec), BigReal::zero(prec)));
    ComplexBall acc = one;
    ComplexBall base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    if (invert) return one / acc;
    return acc;
}

ComplexBall ComplexBall::inflated(const BigReal& t) const {
    if (t.sign() < 0) throw InternalError("negative inflation");
    BigReal tt(kRP);
    mpfr_set(tt.raw(), t.raw(), MPFR_RNDU);
    return ComplexBall(mid_, radd(rad_, tt));
}

ComplexBall ComplexBall::rounded_to(Precision prec) const {
    BigReal re(prec), im(prec);
    int t1 = mpfr_set(re.raw(), mid_.re.raw(), MPFR_RNDN);
    int t2 = mpfr_set(im.raw(), mid_.im.raw(), MPFR_RNDN);
    BigReal r = radd(rad_, radd(ulp_if(t1, re), ulp_if(t2, im)));
    return ComplexBall(BigComplex(std::move(re), std::move(im)), std::move(r));
}

RealBall ComplexBall::abs() const {
    BigReal m(precision());
    int t = mpfr_hypot(m.raw(), mid_.re.raw(), mid_.im.raw(), MPFR_RNDN);
    return RealBall(std::move(m), radd(rad_, ulp_if(t, m)));
}

RealBall ComplexBall::log_abs() const { return abs().log(); }

RealBall ComplexBall::arg() const { return ball_atan2(imag(), real()); }

ComplexBall ComplexBall::log() const { return ComplexBall(log_abs(), arg()); }

bool ComplexBall::contains_zero() const { return !definitely_nonzero(); }

bool ComplexBall::definitely_nonzero() const {
    return mpfr_cmp(hypot_down(mid_.re, mid_.im).raw(), rad_.raw()) > 0;
}

bool ComplexBall::contains(const ComplexBall& o) const {
    BigReal dre(kRP + 8), dim(kRP + 8);
    mpfr_sub(dre.raw(), mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDA);
    mpfr_sub(dim.raw(), mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDA);
    BigReal d = hypot_up(dre, dim);
    BigReal lhs(kRP);
    mpfr_add(lhs.raw(), d.raw(), o.rad_.raw(), MPFR_RNDU);
    return mpfr_cmp(lhs.raw(), rad_.raw()) <= 0;
}

bool ComplexBall::strictly_contains(const ComplexBall& o) const {
    BigReal dre(kRP + 8), dim(kRP + 8);
    mpfr_sub(dre.raw(), mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDA);
    mpfr_sub(dim.raw(), mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDA);
    BigReal d = hypot_up(dre, dim);
    BigReal lhs(kRP);
    mpfr_add(lhs.raw(), d.raw(), o.rad_.raw(), MPFR_RNDU);
    return mpfr_cmp(lhs.raw(), rad_.raw()) < 0;
}

bool ComplexBall::contains(const Rational& re, const Rational& im) const {
    Precision p = std::max<Precision>(precision(), 64);
    BigReal dre(p), dim(p);
    mpfr_sub_q(dre.raw(), mid_.re.raw(), re.get_mpq_t(), MPFR_RNDA);
    mpfr_sub_q(dim.raw(), mid_.im.raw(), im.get_mpq_t(), MPFR_RNDA);
    BigReal d = hypot_up(dre, dim);
    return mpfr_cmp(d.raw(), rad_.raw()) <= 0;
}

bool ComplexBall::disjoint_from(const ComplexBall& o) const {
    BigReal dre(kRP + 8), dim(kRP + 8);
    mpfr_sub(dre.raw(), mid_.re.raw(), o.mid_.re.raw(), MPFR_RNDZ);
    mpfr_sub(dim.raw(), mid_.im.raw(), o.mid_.im.raw(), MPFR_RNDZ);
    BigReal d = hypot_down(dre, dim);
    BigReal rsum = radd(rad_, o.rad_);
    return mpfr_cmp(d.raw(), rsum.raw()) > 0;
}

BigReal ComplexBall::abs_upper() const {
    BigReal m = hypot_up(mid_.re, mid_.im);
    BigReal r(kRP);
    mpfr_add(r.raw(), m.raw(), rad_.raw(), MPFR_RNDU);
    return r;
}

BigReal ComplexBall::abs_lower() const {
    BigReal m = hypot_down(mid_.re, mid_.im);
    BigReal r(kRP);
    mpfr_sub(r.raw(), m.raw(), rad_.raw(), MPFR_RNDD);
    if (r.sign() < 0) return BigReal::zero(kRP);
    return r;
}

std::string ComplexBall::to_string(size_t digits) const {
    std::ostringstream out;
    out << "(" << mid_.re.to_decimal(digits) << ", " << mid_.im.to_decimal(digits) << ") +/- "
        << rad_.to_decimal(3);
    return out.str();
}

BigReal center_distance_upper(const ComplexBall& a, const ComplexBall& b) {
    BigReal dre(kRP + 8), dim(kRP + 8);
    mpfr_sub(dre.raw(), a.mid().re.raw(), b.mid().re.raw(), MPFR_RNDA);
    mpfr_sub(dim.raw(), a.mid().im.raw(), b.mid().im.raw(), MPFR_RNDA);
    BigReal d = hypot_up(dre, dim);
    BigReal r(kRP);
    mpfr_add(r.raw(), d.raw(), a.rad().raw(), MPFR_RNDU);
    mpfr_add(r.raw(), r.raw(), b.rad().raw(), MPFR_RNDU);
    return r;
}

}  // namespace hyparith
