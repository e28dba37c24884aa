#include "hyparith/roots.hpp"

#include <algorithm>

#include "hyparith/error.hpp"

namespace hyparith {

namespace {

BigComplex cdiv(const BigComplex& a, const BigComplex& b, Precision prec) {
    BigReal den = b.re * b.re + b.im * b.im;
    BigComplex num = a * b.conj();
    BigComplex r(prec);
    r.re = num.re / den;
    r.im = num.im / den;
    return r;
}

BigReal cabs(const BigComplex& z) {
    BigReal r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

// Durand-Kerner simultaneous iteration at midpoint precision.
std::vector<BigComplex> durand_kerner(const QPoly& f, Precision wp) {
    long n = f.degree();
    Rational bound = f.root_bound();
    std::vector<BigComplex> z(static_cast<size_t>(n), BigComplex(wp));
    BigComplex seed(BigReal::from_decimal("0.4", wp), BigReal::from_decimal("0.9", wp));
    BigComplex acc(BigReal::from_si(1, wp), BigReal::zero(wp));
    BigReal scale = BigReal::from_rational(bound, wp);
    for (long k = 0; k < n; ++k) {
        acc = acc * seed;
        z[static_cast<size_t>(k)] = BigComplex(acc.re * scale, acc.im * scale);
    }
    BigReal tol = BigReal::pow2(-static_cast<long>(wp) + 8, wp) * scale;
    for (int iter = 0; iter < 500; ++iter) {
        BigReal worst = BigReal::zero(wp);
        for (size_t k = 0; k < z.size(); ++k) {
            BigComplex fz = f.eval_mid(z[k], wp);
            BigComplex denom(BigReal::from_si(1, wp), BigReal::zero(wp));
            for (size_t j = 0; j < z.size(); ++j) {
                if (j == k) continue;
                denom = denom * (z[k] - z[j]);
            }
            BigComplex step = cdiv(fz, denom, wp);
            z[k] = z[k] - step;
            BigReal s = cabs(step);
            if (s > worst) worst = s;
        }
        if (worst < tol) break;
    }
    return z;
}

struct KrawczykResult {
    bool ok = false;
    ComplexBall refined;  // K(D), valid when ok
};

KrawczykResult krawczyk_step(const QPoly& f, const QPoly& df, const ComplexBall& disk,
                             Precision prec) {
    KrawczykResult out;
    ComplexBall m = ComplexBall::exact(disk.mid());
    BigComplex dfm = df.eval_mid(disk.mid(), prec);
    if (!dfm.is_finite()) return out;
    BigReal a = cabs(dfm);
    if (a.is_zero()) return out;
    ComplexBall c = ComplexBall::exact(cdiv(BigComplex(BigReal::from_si(1, prec), BigReal::zero(prec)), dfm, prec));
    ComplexBall fm = f.eval(m, prec);
    ComplexBall dfD = df.eval(disk, prec);
    ComplexBall one = ComplexBall::from_rationals(Rational(1), Rational(0), prec);
    ComplexBall centered(BigComplex(prec), disk.rad());  // D - mid
    ComplexBall K = m - c * fm + (one - c * dfD) * centered;
    if (!disk.strictly_contains(K)) return out;
    out.ok = true;
    out.refined = K;
    return out;
}

// Real-interval Krawczyk, keeps imaginary part exactly zero.
struct RealKrawczykResult {
    bool ok = false;
    RealBall refined;
};

RealKrawczykResult krawczyk_step_real(const QPoly& f, const QPoly& df, const RealBall& iv,
                                      Precision prec) {
    RealKrawczykResult out;
    RealBall m = RealBall::exact(iv.mid());
    RealBall fm = f.eval(m, prec);
    RealBall dfm = df.eval(m, prec);
    if (dfm.contains_zero()) return out;
    RealBall c = RealBall::from_si(1, prec) / dfm;
    RealBall dfD = df.eval(iv, prec);
    RealBall one = RealBall::from_si(1, prec);
    RealBall centered(BigReal::zero(prec), iv.rad());
    RealBall K = m - c * fm + (one - c * dfD) * centered;
    if (!iv.contains(K)) return out;
    // strictness: require the radius to have shrunk
    if (!(K.rad() < iv.rad())) return out;
    out.ok = true;
    out.refined = K;
    return out;
}

RealBall to_real_ball(const ComplexBall& b) { return RealBall(b.mid().re, b.rad()); }

ComplexBall from_real_ball(const RealBall& r, Precision prec) {
    return ComplexBall(BigComplex(r.mid().rounded_to(prec), BigReal::zero(prec)), r.rad());
}

}  // namespace

bool certify_unique_root(const QPoly& f, const ComplexBall& disk, Precision prec) {
    QPoly df = f.derivative();
    return krawczyk_step(f, df, disk, prec).ok;
}

PolyRoots isolate_roots(const QPoly& f_in, Precision prec) {
    if (f_in.is_zero()) throw DegenerateInput("cannot isolate roots of the zero polynomial");
    if (f_in.degree() < 1) throw DegenerateInput("cannot isolate roots of a constant");
    QPoly f = f_in.squarefree_part();
    QPoly df = f.derivative();
    long n = f.degree();

    // Real roots first, by Sturm bisection: exact and certified.
    auto real_ivs = f.isolate_real_roots();
    long n_real = static_cast<long>(real_ivs.size());

    PolyRoots out;
    out.poly = f;
    out.real_count = n_real;

    BigReal target_rad = BigReal::pow2(-static_cast<long>(prec / 2), 64);

    std::vector<RealBall> real_balls;
    for (auto& [lo, hi] : real_ivs) {
        RealBall iv = RealBall::from_rational((lo + hi) / 2, prec)
                          .inflated(BigReal::from_rational((hi - lo) / 2, 64).abs());
        // shrink by rational bisection until Krawczyk bites, then by Krawczyk
        Rational a = lo, b = hi;
        for (int i = 0; i < 6000; ++i) {
            auto kr = krawczyk_step_real(f, df, iv, prec);
            if (kr.ok) {
                RealBall r = kr.refined;
                while (!(r.rad() < target_rad)) {
                    auto kr2 = krawczyk_step_real(f, df, r, prec + 2 * kGuardBits);
                    if (!kr2.ok) break;
                    if (!(kr2.refined.rad() < r.rad())) break;
                    r = kr2.refined;
                }
                if (r.rad() < target_rad) {
                    real_balls.push_back(r);
                    break;
                }
            }
            // bisect rationally, keeping the sub-interval with the sign change
            Rational m = (a + b) / 2;
            while (f.eval(m) == 0) m = (a + m) / 2;
            if (sgn(f.eval(a)) * sgn(f.eval(m)) < 0) b = m;
            else a = m;
            iv = RealBall::from_rational((a + b) / 2, prec)
                     .inflated(BigReal::from_rational((b - a) / 2, 64).abs());
            if (i == 5999) throw InternalError("real root certification did not converge");
        }
    }

    // Complex roots by Durand-Kerner at escalating precision, certified by
    // the Krawczyk operator; conjugates are mirrored, not re-certified.
    long n_pairs = (n - n_real) / 2;
    if ((n - n_real) % 2 != 0) throw InternalError("odd number of non-real roots");
    std::vector<ComplexBall> reps;
    if (n_pairs > 0) {
        Precision wp = std::max<Precision>(prec, 128);
        bool done = false;
        for (int attempt = 0; attempt < 6 && !done; ++attempt, wp *= 2) {
            auto approx = durand_kerner(f, wp);
            // keep candidates with positive imaginary part
            std::vector<BigComplex> cand;
            for (auto& z : approx) {
                if (z.im.sign() > 0) cand.push_back(z);
            }
            if (static_cast<long>(cand.size()) != n_pairs) continue;
            reps.clear();
            bool all_ok = true;
            for (auto& z : cand) {
                bool ok = false;
                // try a few radii around the double-step estimate
                BigReal base = BigReal::pow2(-static_cast<long>(wp) + 60, 64) *
                               (cabs(z) + BigReal::from_si(1, 64));
                for (int j = 0; j < 30 && !ok; ++j) {
                    ComplexBall disk(z, base);
                    auto kr = krawczyk_step(f, df, disk, wp);
                    if (kr.ok) {
                        ComplexBall r = kr.refined;
                        while (!(r.rad() < target_rad)) {
                            auto kr2 = krawczyk_step(f, df, r, wp + 2 * kGuardBits);
                            if (!kr2.ok || !(kr2.refined.rad() < r.rad())) break;
                            r = kr2.refined;
                        }
                        if (r.rad() < target_rad && r.imag().is_positive()) {
                            reps.push_back(r);
                            ok = true;
                        }
                    }
                    base = base * BigReal::from_si(4, 64);
                }
                if (!ok) {
                    all_ok = false;
                    break;
                }
            }
            if (!all_ok) continue;
            // pairwise disjointness including mirrors and real roots
            bool disjoint = true;
            for (size_t i = 0; i < reps.size() && disjoint; ++i) {
                for (size_t j = i + 1; j < reps.size() && disjoint; ++j) {
                    if (!reps[i].disjoint_from(reps[j])) disjoint = false;
                }
                if (disjoint && !reps[i].disjoint_from(reps[i].conj())) disjoint = false;
            }
            if (disjoint) done = true;
        }
        if (!done) throw InternalError("complex root isolation did not converge");
    }

    // deterministic order
    std::sort(real_balls.begin(), real_balls.end(),
              [](const RealBall& a, const RealBall& b) { return a.mid() < b.mid(); });
    std::sort(reps.begin(), reps.end(), [](const ComplexBall& a, const ComplexBall& b) {
        if (!(a.mid().re == b.mid().re)) return a.mid().re < b.mid().re;
        return a.mid().im < b.mid().im;
    });
    for (auto& rb : real_balls) out.roots.push_back(from_real_ball(rb, prec));
    for (auto& rep : reps) {
        out.roots.push_back(rep);
        out.roots.push_back(rep.conj());
    }
    if (static_cast<long>(out.roots.size()) != n) throw InternalError("root count mismatch");
    return out;
}

ComplexBall refine_root(const QPoly& f, const ComplexBall& ball, Precision target_bits) {
    BigReal target = BigReal::pow2(-static_cast<long>(target_bits), 64);
    if (ball.rad() < target) return ball;
    QPoly df = f.derivative();
    bool real_mode = ball.mid().im.is_zero();
    Precision wp = std::max<Precision>(ball.precision(), target_bits + 2 * kGuardBits);

    if (real_mode) {
        RealBall cur = to_real_ball(ball);
        for (int i = 0; i < 200; ++i) {
            if (cur.rad() < target) return from_real_ball(cur, wp);
            auto kr = krawczyk_step_real(f, df, cur.rounded_to(wp), wp);
            if (kr.ok && kr.refined.rad() < cur.rad()) {
                cur = kr.refined;
            } else {
                wp *= 2;
                if (wp > 64 * (target_bits + 1024)) break;
            }
        }
        throw NoCertificate("real root refinement stalled");
    }

    ComplexBall cur = ball;
    for (int i = 0; i < 200; ++i) {
        if (cur.rad() < target) return cur;
        auto kr = krawczyk_step(f, df, cur.rounded_to(wp), wp);
        if (kr.ok && kr.refined.rad() < cur.rad()) {
            cur = kr.refined;
        } else {
            wp *= 2;
            if (wp > 64 * (target_bits + 1024)) break;
        }
    }
    throw NoCertificate("root refinement stalled");
}

}  // namespace hyparith
