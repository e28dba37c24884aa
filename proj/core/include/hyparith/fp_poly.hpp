#pragma once

#include <vector>

#include "hyparith/bigfloat.hpp"

namespace hyparith {

/// Dense univariate polynomial over F_p, coefficients reduced to [0, p).
class FpPoly {
  public:
    FpPoly() = default;
    FpPoly(std::vector<Integer> coeffs, Integer p);
    /// Reduce an integer polynomial mod p.
    static FpPoly from_integers(const std::vector<Integer>& coeffs, const Integer& p);
    static FpPoly constant(const Integer& a, const Integer& p);
    static FpPoly x(const Integer& p);

    const Integer& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& operator[](size_t i) const { return c_[i]; }
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    std::pair<FpPoly, FpPoly> divrem(const FpPoly& d) const;
    FpPoly mod(const FpPoly& d) const { return divrem(d).second; }
    FpPoly monic() const;
    static FpPoly gcd(FpPoly a, FpPoly b);
    FpPoly derivative() const;
    /// this^e mod m, binary exponentiation.
    FpPoly powmod(const Integer& e, const FpPoly& m) const;
    Integer eval(const Integer& x) const;

    /// Lift to an integer polynomial with coefficients in [0, p).
    std::vector<Integer> lift() const;
    /// Lift with coefficients in (-p/2, p/2].
    std::vector<Integer> lift_centered() const;

    bool is_irreducible() const;

    /// Full factorization into monic irreducibles with multiplicities.
    /// Deterministically seeded; identical inputs give identical output order.
    std::vector<std::pair<FpPoly, unsigned>> factor() const;

  private:
    void normalize();
    std::vector<Integer> c_;
    Integer p_;
};

}  // namespace hyparith
