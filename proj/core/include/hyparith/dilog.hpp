#pragma once

#include "hyparith/ball.hpp"

namespace hyparith {

/// Classical dilogarithm Li_2, principal branch (cut along [1, oo), values on
/// the cut are the limit from below). Certified: the returned ball contains
/// the exact value for every point of the input ball. Absolute error of the
/// midpoint stays below 2^-(prec) with kGuardBits guard bits spent internally.
///
/// Evaluation strategy by region:
///   |z| <= 1/2          power series sum z^n/n^2
///   |1-z| <= 1/2        reflection through pi^2/6 - log(z)log(1-z) - Li2(1-z)
///   |z| >= 2            inversion through -Li2(1/z) - pi^2/6 - log(-z)^2/2
///   middle annulus      Bernoulli series sum B_n w^(n+1)/(n+1)!, w = -log(1-z)
/// Throws Inconclusive when the input ball straddles a branch cut too widely
/// to certify; callers refine and retry.
ComplexBall dilog(const ComplexBall& z, Precision prec = kDefaultPrecision);

/// Convenience overload for an exact midpoint.
ComplexBall dilog(const BigComplex& z, Precision prec = kDefaultPrecision);

/// Wigner dilogarithm D2(z) = Im Li2(z) + log|z| arg(1-z); the volume of the
/// ideal simplex with cross-ratio z. Exactly-real inputs return exactly zero.
/// Throws DegenerateInput for z in {0,1}.
RealBall wigner_d2(const ComplexBall& z, Precision prec = kDefaultPrecision);

/// pi^2/6 as a certified ball.
RealBall zeta_two(Precision prec);

/// Exact Bernoulli number B_n (B_1 = -1/2 convention), cached.
Rational bernoulli(unsigned n);

}  // namespace hyparith
