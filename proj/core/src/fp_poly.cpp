#include "hyparith/fp_poly.hpp"

#include <algorithm>
#include <map>

#include "hyparith/error.hpp"

namespace hyparith {

namespace {
Integer mod_reduce(const Integer& a, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw InternalError("non-invertible element mod p");
    }
    return r;
}

// deterministic splitmix-style PRNG over mpz limbs
struct DetRng {
    unsigned long long s;
    explicit DetRng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s += 0x9e3779b97f4a7c15ULL;
        unsigned long long z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};
}  // namespace

FpPoly::FpPoly(std::vector<Integer> coeffs, Integer p) : c_(std::move(coeffs)), p_(std::move(p)) {
    for (auto& a : c_) a = mod_reduce(a, p_);
    normalize();
}

void FpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::from_integers(const std::vector<Integer>& coeffs, const Integer& p) {
    return FpPoly(coeffs, p);
}

FpPoly FpPoly::constant(const Integer& a, const Integer& p) { return FpPoly({a}, p); }

FpPoly FpPoly::x(const Integer& p) { return FpPoly({Integer(0), Integer(1)}, p); }

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly({}, p_);
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return FpPoly(std::move(r), p_);
}

std::pair<FpPoly, FpPoly> FpPoly::divrem(const FpPoly& d) const {
    if (d.is_zero()) throw DegenerateInput("FpPoly division by zero");
    if (degree() < d.degree()) return {FpPoly({}, p_), *this};
    Integer lcinv = mod_inverse(d.c_.back(), p_);
    std::vector<Integer> rem = c_;
    size_t dd = d.c_.size() - 1;
    std::vector<Integer> quot(rem.size() - dd, Integer(0));
    for (size_t k = rem.size(); k-- > dd;) {
        Integer top = mod_reduce(rem[k], p_);
        if (top != 0) {
            Integer coef = mod_reduce(top * lcinv, p_);
            size_t shift = k - dd;
            quot[shift] = coef;
            for (size_t i = 0; i <= dd; ++i) {
                rem[shift + i] = mod_reduce(rem[shift + i] - coef * d.c_[i], p_);
            }
        }
    }
    return {FpPoly(std::move(quot), p_), FpPoly(std::move(rem), p_)};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    Integer inv = mod_inverse(c_.back(), p_);
    std::vector<Integer> r = c_;
    for (auto& a : r) a = mod_reduce(a * inv, p_);
    return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly FpPoly::derivative() const {
    if (degree() < 1) return FpPoly({}, p_);
    std::vector<Integer> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mod_reduce(c_[i] * Integer(static_cast<long>(i)), p_);
    return FpPoly(std::move(r), p_);
}

FpPoly FpPoly::powmod(const Integer& e, const FpPoly& m) const {
    FpPoly base = mod(m);
    FpPoly acc = FpPoly::constant(Integer(1), p_);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = (acc * acc).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base).mod(m);
    }
    return acc;
}

Integer FpPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = mod_reduce(acc * x + c_[i], p_);
    return acc;
}

std::vector<Integer> FpPoly::lift() const { return c_; }

std::vector<Integer> FpPoly::lift_centered() const {
    std::vector<Integer> r = c_;
    Integer half = p_ / 2;
    for (auto& a : r) {
        if (a > half) a -= p_;
    }
    return r;
}

bool FpPoly::is_irreducible() const {
    long n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // Rabin test: x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) == 1
    // for every prime q | n.
    FpPoly f = monic();
    FpPoly xp = FpPoly::x(p_);
    Integer pn;
    mpz_pow_ui(pn.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(n));
    if (!(xp.powmod(pn, f) - xp).mod(f).is_zero()) return false;
    for (long q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool prime = true;
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) continue;
        Integer pm;
        mpz_pow_ui(pm.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(n / q));
        FpPoly g = gcd(f, (xp.powmod(pm, f) - xp).mod(f));
        if (g.degree() != 0) return false;
    }
    return true;
}

namespace {

// equal-degree splitting: f is a product of distinct irreducibles of degree d
void equal_degree_split(const FpPoly& f, long d, std::vector<FpPoly>& out, DetRng& rng) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Integer& p = f.modulus();
    long n = f.degree();
    FpPoly factor({}, p);
    for (int attempt = 0; attempt < 256; ++attempt) {
        // random polynomial of degree < n
        std::vector<Integer> rc(static_cast<size_t>(n));
        for (auto& a : rc) {
            Integer v(static_cast<unsigned long>(rng.next()));
            a = mod_reduce(v, p);
        }
        FpPoly h(std::move(rc), p);
        if (h.is_zero() || h.degree() < 1) continue;
        FpPoly g = FpPoly::gcd(f, h);
        if (g.degree() > 0 && g.degree() < n) {
            factor = g;
            break;
        }
        if (p == 2) {
            // trace map T(h) = h + h^2 + h^4 + ... + h^(2^(d-1)) mod f
            FpPoly t = h.mod(f);
            FpPoly acc = t;
            for (long i = 1; i < d; ++i) {
                t = (t * t).mod(f);
                acc = acc + t;
            }
            g = FpPoly::gcd(f, acc);
        } else {
            Integer e;
            mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            FpPoly hp = h.powmod(e, f) - FpPoly::constant(Integer(1), p);
            g = FpPoly::gcd(f, hp.mod(f));
        }
        if (g.degree() > 0 && g.degree() < n) {
            factor = g;
            break;
        }
    }
    if (factor.is_zero()) throw InternalError("equal-degree splitting did not converge");
    equal_degree_split(factor, d, out, rng);
    equal_degree_split(f.divrem(factor).first.monic(), d, out, rng);
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> FpPoly::factor() const {
    if (degree() < 1) throw DegenerateInput("factor() needs degree >= 1");
    const Integer& p = p_;
    // deterministic seed from the polynomial and p
    unsigned long long seed = 0x243f6a8885a308d3ULL ^ mpz_get_ui(p.get_mpz_t());
    for (const auto& a : c_) seed = seed * 1099511628211ULL + mpz_get_ui(a.get_mpz_t());
    DetRng rng(seed);

    std::map<std::vector<Integer>, unsigned> found;

    // Work list handles the p-th power descent: if f' = 0 then f = (g)^p
    // with g built from every p-th coefficient (Frobenius fixes F_p).
    struct Task {
        FpPoly f;
        unsigned mult;
    };
    std::vector<Task> tasks{{monic(), 1}};
    while (!tasks.empty()) {
        Task t = tasks.back();
        tasks.pop_back();
        FpPoly f = t.f;
        if (f.degree() < 1) continue;
        if (f.derivative().is_zero()) {
            std::vector<Integer> g;
            unsigned long pl = mpz_get_ui(p.get_mpz_t());
            for (size_t i = 0; i < f.coeffs().size(); i += pl) g.push_back(f.coeffs()[i]);
            tasks.push_back({FpPoly(std::move(g), p), t.mult * static_cast<unsigned>(pl)});
            continue;
        }
        FpPoly sf = f.divrem(gcd(f, f.derivative())).first.monic();

        // distinct-degree then equal-degree on the squarefree part
        std::vector<FpPoly> irreducibles;
        FpPoly work = sf;
        FpPoly xp = FpPoly::x(p);
        FpPoly h = xp.mod(work);  // x^(p^d) mod work, iterated
        long d = 0;
        while (work.degree() > 0) {
            ++d;
            if (2 * d > work.degree()) {
                irreducibles.push_back(work.monic());
                break;
            }
            h = h.powmod(p, work);
            FpPoly g = gcd(work, (h - xp).mod(work));
            if (g.degree() > 0) {
                equal_degree_split(g, d, irreducibles, rng);
                work = work.divrem(g).first.monic();
                h = h.mod(work);
            }
        }

        // multiplicities by trial division; what remains is a p-th power
        // (its factors had multiplicity divisible by p)
        FpPoly rest = f;
        for (const auto& q : irreducibles) {
            unsigned e = 0;
            while (true) {
                auto [quot, rem] = rest.divrem(q);
                if (!rem.is_zero()) break;
                rest = quot;
                ++e;
            }
            found[q.coeffs()] += t.mult * e;
        }
        if (rest.degree() > 0) tasks.push_back({rest.monic(), t.mult});
    }

    std::vector<std::pair<FpPoly, unsigned>> out;
    for (auto& [key, mult] : found) out.emplace_back(FpPoly(key, p), mult);
    return out;
}

}  // namespace hyparith
