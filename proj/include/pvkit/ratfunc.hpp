#pragma once

#include <optional>
#include <utility>

#include "pvkit/poly.hpp"

namespace pvkit {

/// Which base differential field a value is considered in: Q with the zero
/// derivation, or Q(t) with d/dt. Q is a subfield of Q(t) with the same
/// (zero) derivative on its elements, so arithmetic promotes to the larger tag.
enum class FieldTag { constants_only, rational_functions };

/// Element of Q or Q(t) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality compares the fraction only.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational &c) : num_(c) {}
    RatFunc(long c) : num_(Rational(c)) {}
    RatFunc(int c) : num_(Rational(c)) {}
    RatFunc(const Poly &p) : tag_(FieldTag::rational_functions), num_(p) {}

    /// Canonicalizes num/den. Throws DivisionByZero for den = 0.
    static RatFunc normalize(Poly num, Poly den, FieldTag tag = FieldTag::rational_functions) {
        if (den.is_zero()) throw error(errc::division_by_zero, "rational function with zero denominator");
        if (tag == FieldTag::constants_only && (num.degree() > 0 || den.degree() > 0))
            throw error(errc::not_applicable, "non-constant value tagged as an element of Q");
        RatFunc r;
        r.tag_ = tag;
        if (num.is_zero()) {
            r.den_ = Poly(1);
            return r;
        }
        if (den.degree() > 0) {
            Poly g = gcd(num, den);
            if (g.degree() > 0) {
                num = num.exact_div(g);
                den = den.exact_div(g);
            }
        }
        Rational inv = den.lc().inverse();
        r.num_ = num.scaled(inv);
        r.den_ = den.scaled(inv);
        return r;
    }

    static RatFunc t() { return RatFunc(Poly::t()); }

    FieldTag tag() const noexcept { return tag_; }
    const Poly &num() const noexcept { return num_; }
    const Poly &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// True when the value lies in Q.
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rational as_rational() const {
        if (!is_rational()) throw error(errc::not_applicable, "value is not a rational constant");
        return num_.constant_term();
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
        const FieldTag tag = join(a.tag_, b.tag_);
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ + b.num_, Poly(1), tag);
        if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_, tag);
        return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, tag);
    }
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
        const FieldTag tag = join(a.tag_, b.tag_);
        if (a.is_zero() || b.is_zero()) return raw(Poly(), Poly(1), tag);
        if (a.den_.is_one() && b.den_.is_one()) return raw(a.num_ * b.num_, Poly(1), tag);
        if (a.is_rational()) return raw(b.num_.scaled(a.as_rational()), b.den_, tag);
        if (b.is_rational()) return raw(a.num_.scaled(b.as_rational()), a.den_, tag);
        return normalize(a.num_ * b.num_, a.den_ * b.den_, tag);
    }
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b) { return a * b.inverse(); }

    RatFunc &operator+=(const RatFunc &o) { return *this = *this + o; }
    RatFunc &operator-=(const RatFunc &o) { return *this = *this - o; }
    RatFunc &operator*=(const RatFunc &o) { return *this = *this * o; }
    RatFunc &operator/=(const RatFunc &o) { return *this = *this / o; }

    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inverse() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        return normalize(den_, num_, tag_);
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r(1), b = *this;
        r.tag_ = tag_;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// d/dt via the quotient rule; zero on Q.
    RatFunc derivative() const {
        if (num_.degree() <= 0 && den_.degree() <= 0) return raw(Poly(), Poly(1), tag_);
        if (den_.is_one()) return raw(num_.derivative(), Poly(1), tag_);
        return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, tag_);
    }

    /// Value at a rational point, or nullopt at a pole.
    std::optional<Rational> evaluate(const Rational &x) const {
        Rational d = den_(x);
        if (d.is_zero()) return std::nullopt;
        return num_(x) / d;
    }

    RatFunc retagged(FieldTag tag) const { return normalize(num_, den_, tag); }

private:
    static FieldTag join(FieldTag a, FieldTag b) {
        return (a == FieldTag::rational_functions || b == FieldTag::rational_functions) ? FieldTag::rational_functions
                                                                                        : FieldTag::constants_only;
    }
    // num/den already coprime with monic den
    static RatFunc raw(Poly num, Poly den, FieldTag tag) {
        RatFunc r;
        r.tag_ = tag;
        if (num.is_zero()) den = Poly(1);
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    FieldTag tag_ = FieldTag::constants_only;
    Poly num_;
    Poly den_{1};
};

} // namespace pvkit
