#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyparith/ball.hpp"
#include "hyparith/bigfloat.hpp"

namespace hyparith {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// leading coefficient of a nonzero polynomial is nonzero.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static QPoly zero() { return QPoly(); }
    static QPoly constant(const Rational& a);
    static QPoly x();
    /// c * x^k
    static QPoly monomial(const Rational& c, size_t k);
    static QPoly from_integers(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    bool is_monic() const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rational& a) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    /// Exact division; throws InternalError if the remainder is nonzero.
    QPoly exact_div(const QPoly& d) const;
    QPoly derivative() const;
    QPoly monic() const;
    /// Monic gcd.
    static QPoly gcd(QPoly a, QPoly b);
    /// Largest squarefree divisor (monic).
    QPoly squarefree_part() const;
    /// f(x + a)
    QPoly translate(const Rational& a) const;
    /// f(a * x)
    QPoly scale_arg(const Rational& a) const;
    /// x^n f(1/x), n = degree
    QPoly reverse() const;
    /// Substitute another polynomial: f(g(x)).
    QPoly compose(const QPoly& g) const;

    Rational eval(const Rational& x) const;
    ComplexBall eval(const ComplexBall& z, Precision prec) const;
    RealBall eval(const RealBall& x, Precision prec) const;
    BigComplex eval_mid(const BigComplex& z, Precision prec) const;

    /// Primitive integer polynomial with the same roots (content removed,
    /// positive leading coefficient), plus the rational factor taken out.
    std::pair<std::vector<Integer>, Rational> primitive_integer() const;

    /// Number of real roots in (a, b], by Sturm's theorem. Requires squarefree f.
    long sturm_count(const Rational& a, const Rational& b) const;
    /// Total number of distinct real roots (squarefree f).
    long real_root_count() const;
    /// Cauchy bound: all complex roots have |z| < bound.
    Rational root_bound() const;
    /// Isolating rational intervals (lo, hi), one per real root, endpoints
    /// non-roots, for squarefree f.
    std::vector<std::pair<Rational, Rational>> isolate_real_roots() const;

    /// Resultant Res(f, g) over Q.
    static Rational resultant(const QPoly& f, const QPoly& g);
    /// Discriminant of f.
    Rational discriminant() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<QPoly> sturm_chain() const;
    std::vector<Rational> c_;
};

/// Res_y(g(y), f(x - t*y)), the classical elimination step for a sum of two
/// algebraic numbers, computed by evaluation and Lagrange interpolation.
QPoly resultant_linear_combination(const QPoly& f, const QPoly& g, const Rational& t);

/// Res_y(f(y), x - p(y)): annihilating polynomial of p(theta) for f(theta)=0.
QPoly resultant_compose(const QPoly& f, const QPoly& p);

/// Mignotte-style bound on the max |coefficient| of any monic factor of the
/// primitive integer polynomial f.
Integer factor_coefficient_bound(const std::vector<Integer>& f);

}  // namespace hyparith
