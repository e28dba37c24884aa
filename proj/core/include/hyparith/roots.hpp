#pragma once

#include <vector>

#include "hyparith/ball.hpp"
#include "hyparith/qpoly.hpp"

namespace hyparith {

/// Certified isolation of all complex roots of a rational polynomial.
/// `poly` is the monic squarefree part actually isolated. Roots are stored
/// real-first (ascending, with exactly-zero imaginary parts), then complex
/// conjugate pairs (representative with positive imaginary part immediately
/// followed by its mirror), pairs sorted by midpoint. Balls are pairwise
/// disjoint and each contains exactly one root.
struct PolyRoots {
    QPoly poly;
    std::vector<ComplexBall> roots;
    long real_count = 0;

    long degree() const { return poly.degree(); }
    long complex_pair_count() const { return (degree() - real_count) / 2; }
};

/// Isolate all roots of f (squarefree part taken internally) with radii
/// below 2^-(precision/2). Throws DegenerateInput on the zero polynomial.
PolyRoots isolate_roots(const QPoly& f, Precision prec = kDefaultPrecision);

/// Shrink a certified root ball of f until its radius is <= 2^-target_bits.
/// The result stays inside the input ball. Real balls (exact zero imaginary
/// part) are refined in real arithmetic and stay exactly real.
ComplexBall refine_root(const QPoly& f, const ComplexBall& ball, Precision target_bits);

/// Krawczyk existence/uniqueness test: true iff the disk provably contains
/// exactly one simple root of f.
bool certify_unique_root(const QPoly& f, const ComplexBall& disk, Precision prec);

}  // namespace hyparith
