#pragma once

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "pvkit/error.hpp"
#include "pvkit/rational.hpp"

namespace pvkit {

/// Dense univariate polynomial in t over Q, coefficients by ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rational &c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly monomial(const Rational &c, std::size_t k) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    const std::vector<Rational> &coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto &x : r.c_) x = -x;
        return r;
    }

    Poly &operator+=(const Poly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }

    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }

    Poly scaled(const Rational &s) const {
        if (s.is_zero()) return {};
        Poly r = *this;
        for (auto &x : r.c_) x *= s;
        return r;
    }

    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly &d) const {
        if (d.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
        if (degree() < d.degree()) return {Poly(), *this};
        std::vector<Rational> rem = c_;
        std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
        const Rational inv = d.lc().inverse();
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + dd] * inv;
            quo[k] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
        }
        rem.resize(dd);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly operator%(const Poly &d) const { return divmod(d).second; }

    /// Division that must be exact.
    Poly exact_div(const Poly &d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw error(errc::not_applicable, "inexact polynomial division");
        return q;
    }

    bool divides(const Poly &other) const { return (other % *this).is_zero(); }

    Poly monic() const { return is_zero() ? Poly() : scaled(lc().inverse()); }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(r));
    }

    Rational operator()(const Rational &x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r(1), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    /// p(t + s), i.e. re-expansion around s.
    Poly taylor_shift(const Rational &s) const {
        std::vector<Rational> a = c_;
        const std::size_t n = a.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) a[j - 1] += s * a[j];
        return Poly(std::move(a));
    }

    /// Lcm of coefficient denominators.
    Integer denominator_lcm() const {
        Integer l = 1;
        for (const auto &x : c_) l = integer_lcm(l, x.den());
        return l;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

namespace detail {

// Integer coefficient vector of p scaled to content 1.
inline std::vector<Integer> primitive_part(const Poly &p) {
    Integer l = p.denominator_lcm();
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    Integer g = 0;
    for (const auto &c : p.coeffs()) {
        v.push_back(c.num() * (l / c.den()));
        g = integer_gcd(g, v.back());
    }
    if (g > 1)
        for (auto &x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

inline void make_primitive(std::vector<Integer> &v) {
    Integer g = 0;
    for (const auto &x : v) {
        g = integer_gcd(g, x);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto &x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a <- prem(a, b), deg a >= deg b, both nonempty.
inline void pseudo_remainder(std::vector<Integer> &a, const std::vector<Integer> &b) {
    const std::size_t db = b.size() - 1;
    const Integer &lb = b.back();
    while (a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto &x : a) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

} // namespace detail

/// Monic gcd; gcd(0, 0) = 0. Primitive polynomial remainder sequence over Z.
inline Poly gcd(const Poly &a, const Poly &b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(1);
    std::vector<Integer> x = detail::primitive_part(a), y = detail::primitive_part(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return Poly(1);
        detail::pseudo_remainder(x, y);
        detail::make_primitive(x);
        std::swap(x, y);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (const auto &v : x) c.emplace_back(v);
    return Poly(std::move(c)).monic();
}

/// Returns (g, s, u) with s*a + u*b = g = gcd(a, b) monic.
inline std::tuple<Poly, Poly, Poly> gcdex(const Poly &a, const Poly &b) {
    Poly r0 = a, r1 = b, s0(1), s1, u0, u1(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

/// Solves s*a + u*b = c with deg s < deg b; requires gcd(a, b) | c.
inline std::pair<Poly, Poly> solve_bezout(const Poly &a, const Poly &b, const Poly &c) {
    auto [g, s, u] = gcdex(a, b);
    auto [q, r] = c.divmod(g);
    if (!r.is_zero()) throw error(errc::not_applicable, "gcd does not divide right-hand side");
    s = s * q;
    u = u * q;
    if (!b.is_zero() && s.degree() >= b.degree()) {
        auto [qq, rr] = s.divmod(b);
        s = std::move(rr);
        u = u + qq * a;
    }
    return {s, u};
}

inline Poly lcm(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b).exact_div(gcd(a, b)).monic();
}

/// Yun's algorithm. Returns monic squarefree, pairwise coprime factors f_1, f_2, ...
/// such that monic(p) = prod f_i^i (entries may be 1).
inline std::vector<Poly> squarefree_decomposition(const Poly &p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f.exact_div(a);
    Poly c = fp.exact_div(a);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
    }
    return out;
}

inline bool is_squarefree(const Poly &p) { return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0; }

} // namespace pvkit
