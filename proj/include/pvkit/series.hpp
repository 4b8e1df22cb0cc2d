#pragma once

// Formal power series at an ordinary point: fundamental systems of solutions of
// y^(n) + a_1 y^(n-1) + ... + a_n y = 0 with identity initial data.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pvkit/matrix.hpp"
#include "pvkit/wronskian.hpp"

namespace pvkit {

inline constexpr int default_series_precision = 16;

/// sum_{k<=N} c_k (t - t0)^k + O((t - t0)^(N+1)).
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(Rational base, std::vector<Rational> coeffs) : base_(std::move(base)), c_(std::move(coeffs)) {
        if (c_.empty()) throw error(errc::shape_error, "series needs at least one coefficient");
    }
    static TruncatedSeries constant(const Rational &c, const Rational &base, int precision) {
        std::vector<Rational> v(static_cast<std::size_t>(precision + 1));
        v[0] = c;
        return {base, std::move(v)};
    }

    const Rational &base_point() const noexcept { return base_; }
    int precision() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational> &coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x.is_zero(); });
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto &x : r.c_) x = -x;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
        auto [x, y] = align(a, b);
        for (std::size_t k = 0; k < x.c_.size(); ++k) x.c_[k] += y.c_[k];
        return x;
    }
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return a + (-b); }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
        auto [x, y] = align(a, b);
        std::vector<Rational> r(x.c_.size());
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
        }
        x.c_ = std::move(r);
        return x;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
        return a.base_ == b.base_ && a.c_ == b.c_;
    }

    TruncatedSeries scaled(const Rational &s) const {
        TruncatedSeries r = *this;
        for (auto &x : r.c_) x *= s;
        return r;
    }

    /// Loses one order of precision.
    TruncatedSeries derivative() const {
        if (c_.size() < 2) throw error(errc::shape_error, "derivative of a series with precision 0");
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return {base_, std::move(r)};
    }

    /// Term-by-term antiderivative with zero constant term; gains one order.
    TruncatedSeries integral() const {
        std::vector<Rational> r(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
        return {base_, std::move(r)};
    }

    TruncatedSeries truncated(int precision) const {
        TruncatedSeries r = *this;
        r.c_.resize(static_cast<std::size_t>(std::min(precision, this->precision()) + 1));
        return r;
    }

private:
    static std::pair<TruncatedSeries, TruncatedSeries> align(const TruncatedSeries &a, const TruncatedSeries &b) {
        if (a.base_ != b.base_) throw error(errc::shape_error, "series at different base points");
        const int p = std::min(a.precision(), b.precision());
        return {a.truncated(p), b.truncated(p)};
    }

    Rational base_;
    std::vector<Rational> c_;
};

/// Taylor coefficients of f at t0 through order N.
inline TruncatedSeries series_expand(const RatFunc &f, const Rational &t0, int precision) {
    if (precision < 0) throw error(errc::shape_error, "negative precision");
    const Poly num = f.num().taylor_shift(t0);
    const Poly den = f.den().taylor_shift(t0);
    if (den.constant_term().is_zero()) throw error(errc::pole_at_base_point, "pole at the base point " + t0.str());
    const std::size_t len = static_cast<std::size_t>(precision + 1);
    std::vector<Rational> c(len);
    const Rational inv = den.constant_term().inverse();
    for (std::size_t k = 0; k < len; ++k) {
        Rational acc = num.coeff(k);
        for (std::size_t j = 1; j <= k && j < den.coeffs().size(); ++j) acc -= den.coeffs()[j] * c[k - j];
        c[k] = acc * inv;
    }
    return {t0, std::move(c)};
}

namespace detail {
inline Rational falling_factorial(std::size_t k, std::size_t j) {
    Rational r(1);
    for (std::size_t i = 0; i < j; ++i) r *= Rational(static_cast<long>(k - i));
    return r;
}
} // namespace detail

/// n series solutions with u_i^(j)(t0) = delta_ij, the remaining coefficients
/// determined by the recurrence the equation imposes on Taylor coefficients.
inline std::vector<TruncatedSeries> fundamental_system_series(const LinearODE &ode, const Rational &t0,
                                                              int precision = default_series_precision) {
    const std::size_t n = ode.order();
    if (n == 0) throw error(errc::shape_error, "equation of order 0");
    if (precision < static_cast<int>(n)) throw error(errc::not_applicable, "precision must be at least the order");
    std::vector<TruncatedSeries> a;
    for (const auto &c : ode.coeffs) a.push_back(series_expand(c, t0, precision));

    const std::size_t len = static_cast<std::size_t>(precision + 1);
    std::vector<TruncatedSeries> out;
    for (std::size_t sol = 0; sol < n; ++sol) {
        std::vector<Rational> c(len);
        c[sol] = detail::falling_factorial(sol, sol).inverse(); // 1/sol!
        for (std::size_t m = 0; m + n < len; ++m) {
            Rational acc(0);
            for (std::size_t i = 1; i <= n; ++i) {
                const auto &ai = a[i - 1].coeffs();
                for (std::size_t l = 0; l <= m; ++l) {
                    if (ai[l].is_zero()) continue;
                    const std::size_t k = m - l + n - i;
                    acc += ai[l] * c[k] * detail::falling_factorial(k, n - i);
                }
            }
            c[m + n] = -acc / detail::falling_factorial(m + n, n);
        }
        out.emplace_back(t0, std::move(c));
    }
    return out;
}

/// Determinant of the series Wronsky matrix (entry (j, i) = j-th derivative of series i).
inline TruncatedSeries series_wronskian(const std::vector<TruncatedSeries> &series) {
    if (series.empty()) throw error(errc::shape_error, "Wronskian of an empty list");
    const std::size_t n = series.size();
    Matrix<TruncatedSeries> w(n, std::vector<TruncatedSeries>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (series[i].base_point() != series[0].base_point())
            throw error(errc::shape_error, "series at different base points");
        if (series[i].precision() + 1 < static_cast<int>(n))
            throw error(errc::shape_error, "precision too low for the Wronsky matrix");
        TruncatedSeries s = series[i];
        for (std::size_t j = 0; j < n; ++j) {
            w[j][i] = s;
            if (j + 1 < n) s = s.derivative();
        }
    }
    return expansion_determinant(w);
}

/// y^(n) + a_1 y^(n-1) + ... + a_n y, valid through precision N - n.
inline TruncatedSeries ode_residual(const LinearODE &ode, const TruncatedSeries &s) {
    const std::size_t n = ode.order();
    if (s.precision() < static_cast<int>(n)) throw error(errc::shape_error, "series precision below the order");
    std::vector<TruncatedSeries> d{s};
    for (std::size_t j = 0; j < n; ++j) d.push_back(d.back().derivative());
    TruncatedSeries acc = d[n];
    for (std::size_t k = 1; k <= n; ++k)
        acc = acc + series_expand(ode.coeffs[k - 1], s.base_point(), s.precision()) * d[n - k];
    return acc;
}

} // namespace pvkit
