#include "hyparith/dilog.hpp"

#include <mutex>
#include <vector>

#include "hyparith/error.hpp"

namespace hyparith {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // guarded by the mutex

// upper bound of x as a low-precision float, rounded up
BigReal up32(const BigReal& x) {
    BigReal r(RealBall::kRadiusPrec);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDU);
    return r;
}

ComplexBall cball_from_rational(const Rational& re, Precision prec) {
    return ComplexBall::from_rationals(re, Rational(0), prec);
}

// sum_{n>=1} z^n / n^2 for |z| <= 1/2 (checked), with a rigorous tail bound
ComplexBall dilog_series(const ComplexBall& z, Precision wp) {
    BigReal zu = z.abs_upper();
    if (!(zu < BigReal::from_decimal("0.75", 32))) {
        throw InternalError("dilog_series called outside its region");
    }
    ComplexBall acc = cball_from_rational(Rational(0), wp);
    ComplexBall zp = cball_from_rational(Rational(1), wp);
    BigReal eps = BigReal::pow2(-static_cast<long>(wp) - 4, 32);
    BigReal one_minus(32);
    mpfr_ui_sub(one_minus.raw(), 1, zu.raw(), MPFR_RNDD);
    unsigned long n = 0;
    BigReal zpu = BigReal::from_si(1, 32);
    while (true) {
        ++n;
        zp = zp * z;
        acc = acc + zp * ComplexBall::from_rationals(
                        Rational(1) / Rational(static_cast<long>(n) * static_cast<long>(n)),
                        Rational(0), wp);
        // tail <= |z|^(n+1) / ((n+1)^2 (1 - |z|))
        mpfr_mul(zpu.raw(), zpu.raw(), zu.raw(), MPFR_RNDU);
        BigReal tail(32);
        mpfr_mul(tail.raw(), zpu.raw(), zu.raw(), MPFR_RNDU);
        mpfr_div(tail.raw(), tail.raw(), one_minus.raw(), MPFR_RNDU);
        mpfr_div_ui(tail.raw(), tail.raw(), (n + 1) * (n + 1), MPFR_RNDU);
        if (tail < eps) {
            return acc.inflated(tail);
        }
        if (n > 16 * wp + 64) throw InternalError("dilog series failed to converge");
    }
}

// sum_{n>=0} B_n w^(n+1)/(n+1)! for |w| < 2 pi, derived from
// dLi2/dw = w/(e^w - 1) with w = -log(1-z)
ComplexBall dilog_log_series(const ComplexBall& w, Precision wp) {
    BigReal wu = w.abs_upper();
    RealBall pi = RealBall::pi(64);
    BigReal two_pi_lo(32);
    mpfr_mul_ui(two_pi_lo.raw(), pi.lower().raw(), 2, MPFR_RNDD);
    BigReal q(32);
    mpfr_div(q.raw(), wu.raw(), two_pi_lo.raw(), MPFR_RNDU);
    if (!(q < BigReal::from_decimal("0.72", 32))) {
        throw Inconclusive("dilog log-series argument too close to 2*pi");
    }
    ComplexBall acc = cball_from_rational(Rational(0), wp);
    ComplexBall wp_pow = w;  // w^(n+1)
    Rational fact(1);        // (n+1)!
    BigReal eps = BigReal::pow2(-static_cast<long>(wp) - 4, 32);
    BigReal qe = BigReal::from_si(1, 32);
    BigReal one_minus_q(32);
    mpfr_ui_sub(one_minus_q.raw(), 1, q.raw(), MPFR_RNDD);
    for (unsigned n = 0;; ++n) {
        fact *= Rational(static_cast<long>(n) + 1);
        Rational bn = bernoulli(n);
        if (bn != 0) {
            acc = acc + wp_pow * ComplexBall::from_rationals(bn / fact, Rational(0), wp);
        }
        // tail bound: sum_{k>n} |B_k| |w|^(k+1) / (k+1)!
        //   |B_k|/k! <= 2 zeta(k)/(2pi)^k <= 4/(2pi)^k for k >= 2
        //   so the tail is <= 4 |w| q^(n+1) / (1-q)
        mpfr_mul(qe.raw(), qe.raw(), q.raw(), MPFR_RNDU);
        BigReal tail(32);
        mpfr_mul(tail.raw(), qe.raw(), wu.raw(), MPFR_RNDU);
        mpfr_mul_ui(tail.raw(), tail.raw(), 4, MPFR_RNDU);
        mpfr_div(tail.raw(), tail.raw(), one_minus_q.raw(), MPFR_RNDU);
        if (n >= 2 && tail < eps) {
            return acc.inflated(tail);
        }
        wp_pow = wp_pow * w;
        if (n > 64 * wp + 256) throw InternalError("dilog log-series failed to converge");
    }
}

// Principal log of an exact negative real ball, with the limit-from-below
// convention for Li2 arguments: arg = +pi exactly.
ComplexBall log_of_negative_real(const RealBall& x, Precision wp) {
    if (!x.is_negative()) throw InternalError("log_of_negative_real needs x < 0");
    RealBall mag = (-x).log();
    return ComplexBall(mag, RealBall::pi(wp));
}

ComplexBall dilog_impl(const ComplexBall& z, Precision wp);

// z is exactly real with z.lower() >= 1: on-cut evaluation, limit from below.
ComplexBall dilog_on_cut(const RealBall& x, Precision wp) {
    RealBall pi = RealBall::pi(wp);
    RealBall pi2_6 = pi * pi / RealBall::from_si(6, wp);
    if (x.mid() == BigReal::from_si(1, 32) && x.rad().is_zero()) {
        return ComplexBall(pi2_6, RealBall::zero(wp));
    }
    RealBall one = RealBall::from_si(1, wp);
    RealBall one_minus = one - x;  // negative
    BigReal half = BigReal::from_decimal("0.5", 32);
    if (one_minus.abs_upper() < half) {
        // reflection: pi^2/6 - log(z) log(1-z) - Li2(1-z)
        ComplexBall log1mz = log_of_negative_real(one_minus, wp);
        ComplexBall logz = ComplexBall(x.log(), RealBall::zero(wp));
        ComplexBall li_rest = dilog_impl(ComplexBall(one_minus, RealBall::zero(wp)), wp);
        return ComplexBall(pi2_6, RealBall::zero(wp)) - logz * log1mz - li_rest;
    }
    if (x.abs_lower() > BigReal::from_si(2, 32)) {
        // inversion: -Li2(1/x) - pi^2/6 - log(-z)^2/2, log(-z) = log(x) + i pi
        RealBall invx = one / x;
        ComplexBall li_inv = dilog_impl(ComplexBall(invx, RealBall::zero(wp)), wp);
        ComplexBall logneg = log_of_negative_real(-x, wp);
        ComplexBall half_sq = logneg * logneg *
                              ComplexBall::from_rationals(Rational(1, 2), Rational(0), wp);
        return -li_inv - ComplexBall(pi2_6, RealBall::zero(wp)) - half_sq;
    }
    // middle range: Bernoulli series with w = -log(1-z) = -log|1-x| - i pi
    ComplexBall w = -log_of_negative_real(one_minus, wp);
    return dilog_log_series(w, wp);
}

ComplexBall dilog_impl(const ComplexBall& z, Precision wp) {
    if (!z.mid().is_finite()) throw DegenerateInput("dilog of a non-finite value");
    BigReal half = BigReal::from_decimal("0.5", 32);
    BigReal two = BigReal::from_si(2, 32);

    bool exact_real = z.mid().im.is_zero() && z.rad().is_zero();
    if (exact_real) {
        RealBall x = RealBall::exact(z.mid().re);
        if (!(x.upper() < BigReal::from_si(1, 32))) {
            return dilog_on_cut(x, wp);
        }
    }

    BigReal zu = z.abs_upper();
    if (!(zu > half)) {
        return dilog_series(z.rounded_to(wp), wp);
    }
    ComplexBall one = cball_from_rational(Rational(1), wp);
    ComplexBall one_minus = one - z.rounded_to(wp);
    if (!(one_minus.abs_upper() > half)) {
        // reflection
        RealBall pi = RealBall::pi(wp);
        RealBall pi2_6 = pi * pi / RealBall::from_si(6, wp);
        ComplexBall li_rest = dilog_series(one_minus, wp);
        ComplexBall prod = z.rounded_to(wp).log() * one_minus.log();
        return ComplexBall(pi2_6, RealBall::zero(wp)) - prod - li_rest;
    }
    if (!(z.abs_lower() < two)) {
        // inversion
        ComplexBall inv = one / z.rounded_to(wp);
        ComplexBall li_inv = dilog_series(inv, wp);
        RealBall pi = RealBall::pi(wp);
        RealBall pi2_6 = pi * pi / RealBall::from_si(6, wp);
        ComplexBall logneg = (-z.rounded_to(wp)).log();
        ComplexBall half_sq = logneg * logneg *
                              ComplexBall::from_rationals(Rational(1, 2), Rational(0), wp);
        return -li_inv - ComplexBall(pi2_6, RealBall::zero(wp)) - half_sq;
    }
    // middle annulus
    ComplexBall w = -(one_minus.log());
    return dilog_log_series(w, wp);
}

}  // namespace

Rational bernoulli(unsigned n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) {
        g_bernoulli = {Rational(1), Rational(-1, 2)};
    }
    while (g_bernoulli.size() <= n) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        if (m >= 3 && m % 2 == 1) {
            g_bernoulli.emplace_back(0);
            continue;
        }
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) {
            if (g_bernoulli[k] == 0) continue;
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
            acc += Rational(binom) * g_bernoulli[k];
        }
        g_bernoulli.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return g_bernoulli[n];
}

RealBall zeta_two(Precision prec) {
    RealBall pi = RealBall::pi(prec + kGuardBits);
    return (pi * pi / RealBall::from_si(6, prec + kGuardBits)).rounded_to(prec);
}

ComplexBall dilog(const ComplexBall& z, Precision prec) {
    Precision wp = prec + kGuardBits;
    if (z.rad().is_zero() && z.mid().re.is_zero() && z.mid().im.is_zero()) {
        return cball_from_rational(Rational(0), prec);
    }
    return dilog_impl(z, wp).rounded_to(prec);
}

ComplexBall dilog(const BigComplex& z, Precision prec) {
    return dilog(ComplexBall::exact(z), prec);
}

RealBall wigner_d2(const ComplexBall& z, Precision prec) {
    Precision wp = prec + kGuardBits;
    if (z.rad().is_zero()) {
        const BigComplex& m = z.mid();
        bool is_zero = m.re.is_zero() && m.im.is_zero();
        bool is_one = m.im.is_zero() && m.re == BigReal::from_si(1, 32);
        if (is_zero || is_one) throw DegenerateInput("D2 undefined at 0 and 1");
        if (m.im.is_zero()) return RealBall::zero(prec);  // D2 vanishes on R - {0,1}
    } else {
        if (z.contains(Rational(0), Rational(0)) || z.contains(Rational(1), Rational(0))) {
            throw Inconclusive("D2 argument ball touches 0 or 1");
        }
        if (z.imag().contains_zero()) {
            // cannot certify the sign of Im; for genuinely real input use an
            // exact ball instead
            throw Inconclusive("D2 argument ball straddles the real axis");
        }
    }
    ComplexBall li = dilog_impl(z.rounded_to(wp), wp);
    ComplexBall one_minus = cball_from_rational(Rational(1), wp) - z.rounded_to(wp);
    RealBall out = li.imag() + z.rounded_to(wp).log_abs() * one_minus.arg();
    return out.rounded_to(prec);
}

}  // namespace hyparith
