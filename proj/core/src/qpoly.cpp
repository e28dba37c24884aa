#include "hyparith/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hyparith/error.hpp"

namespace hyparith {

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& a) {
    QPoly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

QPoly QPoly::x() {
    QPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

QPoly QPoly::monomial(const Rational& c, size_t k) {
    QPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, Rational(0));
        p.c_[k] = c;
    }
    return p;
}

QPoly QPoly::from_integers(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long a : coeffs) c.emplace_back(a);
    return QPoly(std::move(c));
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw DegenerateInput("leading coefficient of zero polynomial");
    return c_.back();
}

bool QPoly::is_monic() const { return !is_zero() && leading() == 1; }

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& a : r) a = -a;
    QPoly p;
    p.c_ = std::move(r);
    return p;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rational& a) const {
    if (a == 0) return QPoly();
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= a;
    QPoly p;
    p.c_ = std::move(r);
    return p;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw DegenerateInput("polynomial division by zero");
    QPoly r = *this;
    if (r.degree() < d.degree()) return {QPoly(), r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
    const Rational& lc = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        size_t shift = static_cast<size_t>(r.degree() - d.degree());
        Rational coef = r.leading() / lc;
        q[shift] = coef;
        // r -= coef * x^shift * d
        std::vector<Rational> rc = r.c_;
        for (size_t i = 0; i < d.c_.size(); ++i) rc[i + shift] -= coef * d.c_[i];
        rc.pop_back();  // leading term cancels exactly
        r = QPoly(std::move(rc));
    }
    return {QPoly(std::move(q)), r};
}

QPoly QPoly::exact_div(const QPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
    return q;
}

QPoly QPoly::derivative() const {
    if (degree() < 1) return QPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly QPoly::squarefree_part() const {
    if (degree() < 1) return monic();
    QPoly g = gcd(*this, derivative());
    return exact_div(g).monic();
}

QPoly QPoly::translate(const Rational& a) const {
    QPoly shift;  // x + a
    shift.c_ = {a, Rational(1)};
    return compose(shift);
}

QPoly QPoly::scale_arg(const Rational& a) const {
    std::vector<Rational> r(c_);
    Rational pw(1);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= a;
    }
    return QPoly(std::move(r));
}

QPoly QPoly::reverse() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return QPoly(std::move(r));
}

QPoly QPoly::compose(const QPoly& g) const {
    QPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * g + QPoly::constant(c_[i]);
    }
    return acc;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ComplexBall QPoly::eval(const ComplexBall& z, Precision prec) const {
    ComplexBall acc = ComplexBall::from_rationals(Rational(0), Rational(0), prec);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * z + ComplexBall::from_rationals(c_[i], Rational(0), prec);
    }
    return acc;
}

RealBall QPoly::eval(const RealBall& x, Precision prec) const {
    RealBall acc = RealBall::zero(prec);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + RealBall::from_rational(c_[i], prec);
    }
    return acc;
}

BigComplex QPoly::eval_mid(const BigComplex& z, Precision prec) const {
    BigComplex acc(prec);
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + BigReal::from_rational(c_[i], prec);
    }
    return acc;
}

std::pair<std::vector<Integer>, Rational> QPoly::primitive_integer() const {
    if (is_zero()) return {{}, Rational(0)};
    Integer den(1);
    for (const auto& a : c_) {
        Integer d = a.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> z(c_.size());
    Integer content(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        Rational scaled = c_[i] * Rational(den);
        z[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
    }
    if (content == 0) content = 1;
    if (z.back() < 0) content = -content;
    for (auto& v : z) v /= content;
    return {std::move(z), Rational(content) / Rational(den)};
}

std::vector<QPoly> QPoly::sturm_chain() const {
    std::vector<QPoly> chain;
    chain.push_back(*this);
    chain.push_back(derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        QPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace {
long sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        Rational v = p.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
}  // namespace

long QPoly::sturm_count(const Rational& a, const Rational& b) const {
    auto chain = sturm_chain();
    return sign_variations(chain, a) - sign_variations(chain, b);
}

long QPoly::real_root_count() const {
    Rational b = root_bound();
    return sturm_count(-b, b);
}

Rational QPoly::root_bound() const {
    if (degree() < 1) return Rational(1);
    Rational m(0);
    const Rational& lc = leading();
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        Rational a = abs(c_[i] / lc);
        if (a > m) m = a;
    }
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> QPoly::isolate_real_roots() const {
    if (degree() < 1) return {};
    auto chain = sturm_chain();
    Rational bound = root_bound();
    std::vector<std::pair<Rational, Rational>> out;
    // stack of (lo, hi, variations(lo), variations(hi)); count in (lo, hi]
    struct Seg {
        Rational lo, hi;
        long vlo, vhi;
    };
    std::vector<Seg> stack;
    Rational lo = -bound, hi = bound;
    // make sure endpoints are not roots (bound is strict, so they are not)
    stack.push_back({lo, hi, sign_variations(chain, lo), sign_variations(chain, hi)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        long n = s.vlo - s.vhi;
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        while (eval(mid) == 0) {
            // nudge the split point off the root
            mid = (s.lo + mid) / 2;
        }
        long vm = sign_variations(chain, mid);
        stack.push_back({s.lo, mid, s.vlo, vm});
        stack.push_back({mid, s.hi, vm, s.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Rational QPoly::resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    // Euclidean resultant with leading-coefficient bookkeeping.
    QPoly a = f, b = g;
    Rational acc(1);
    bool negate = false;
    while (b.degree() > 0) {
        QPoly r = a.divrem(b).second;
        long da = a.degree(), db = b.degree(), dr = r.is_zero() ? -1 : r.degree();
        // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if ((da % 2) && (db % 2)) negate = !negate;
        Rational lcb = b.leading();
        long e = da - (dr < 0 ? 0 : dr);
        if (r.is_zero()) {
            // res(b, 0) = 0 unless b is a nonzero constant (excluded: deg>0)
            return Rational(0);
        }
        Rational pw(1);
        for (long i = 0; i < e; ++i) pw *= lcb;
        acc *= pw;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res(a, c) = c^deg(a)
    Rational c = b.is_zero() ? Rational(0) : b[0];
    if (c == 0) return Rational(0);
    Rational pw(1);
    for (long i = 0; i < a.degree(); ++i) pw *= c;
    return (negate ? -acc : acc) * pw;
}

Rational QPoly::discriminant() const {
    if (degree() < 1) throw DegenerateInput("discriminant of constant polynomial");
    Rational res = resultant(*this, derivative());
    long d = degree();
    Rational lc = leading();
    Rational out = res / lc;
    if (((d * (d - 1)) / 2) % 2) out = -out;
    return out;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (!first) out << (a > 0 ? " + " : " - ");
        else if (a < 0) out << "-";
        Rational mag = abs(a);
        bool unit = (mag == 1);
        if (i == 0 || !unit) out << mag.get_str();
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

QPoly resultant_linear_combination(const QPoly& f, const QPoly& g, const Rational& t) {
    long D = f.degree() * g.degree();
    if (D < 0) throw DegenerateInput("resultant of zero polynomial");
    // R(x) = Res_y(g(y), f(x - t*y)); deg R <= D. Evaluate at D+1 points,
    // interpolate.
    std::vector<Rational> xs, ys;
    Rational x0(0);
    while (static_cast<long>(xs.size()) < D + 1) {
        // f(x0 - t*y) as a polynomial in y
        QPoly lin(std::vector<Rational>{x0, -t});
        QPoly fy = f.compose(lin);
        if (fy.degree() != f.degree()) {
            x0 += 1;
            continue;  // cannot happen for t != 0, defensive for t == 0
        }
        xs.push_back(x0);
        ys.push_back(QPoly::resultant(g, fy));
        x0 += 1;
    }
    // Lagrange interpolation
    QPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly term = QPoly::constant(ys[i]);
        Rational den(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * QPoly(std::vector<Rational>{-xs[j], Rational(1)});
            den *= xs[i] - xs[j];
        }
        acc = acc + term * (Rational(1) / den);
    }
    return acc;
}

QPoly resultant_compose(const QPoly& f, const QPoly& p) {
    long D = f.degree();
    if (D < 1) throw DegenerateInput("resultant_compose needs deg f >= 1");
    std::vector<Rational> xs, ys;
    Rational x0(0);
    for (long k = 0; k <= D; ++k) {
        QPoly h = QPoly::constant(x0) - p;  // x0 - p(y)
        xs.push_back(x0);
        ys.push_back(QPoly::resultant(f, h));
        x0 += 1;
    }
    QPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        QPoly term = QPoly::constant(ys[i]);
        Rational den(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * QPoly(std::vector<Rational>{-xs[j], Rational(1)});
            den *= xs[i] - xs[j];
        }
        acc = acc + term * (Rational(1) / den);
    }
    return acc;
}

Integer factor_coefficient_bound(const std::vector<Integer>& f) {
    // For monic integer f of degree n, any monic factor has coefficients
    // bounded by 2^n * (sum of |f_i|^2)^(1/2) <= 2^n * (1 + sum |f_i|).
    Integer sum(1);
    for (const auto& a : f) sum += abs(a);
    Integer bound = sum;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size());
    return bound;
}

}  // namespace hyparith
