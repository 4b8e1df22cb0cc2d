#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pvkit/ratfunc.hpp"

namespace pvkit::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return rng_() & 1u; }

    Poly poly(int max_degree, long c = 9) {
        const int d = static_cast<int>(range(0, max_degree));
        std::vector<Rational> v;
        for (int i = 0; i <= d; ++i) v.emplace_back(range(-c, c));
        return Poly(std::move(v));
    }

    Poly nonzero_poly(int max_degree, long c = 9) {
        for (;;) {
            Poly p = poly(max_degree, c);
            if (!p.is_zero()) return p;
        }
    }

    RatFunc ratfunc(int max_degree, long c = 9) {
        return RatFunc::normalize(poly(max_degree, c), nonzero_poly(max_degree, c));
    }

    Rational rational(long c = 9) { return Rational(Integer(range(-c, c)), Integer(range(1, c))); }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline RatFunc T() { return RatFunc::t(); }

inline RatFunc qt(long c) { return RatFunc(c).retagged(FieldTag::rational_functions); }

} // namespace pvkit::test

#include "pvkit/diffpoly.hpp"
#include "pvkit/matrix.hpp"

namespace pvkit::test {

inline DiffPoly X(std::uint32_t order, std::uint32_t index = 0, std::size_t m = 1) {
    return DiffPoly::variable(DerivVar{index, order}, m);
}

/// Random differential polynomial in x_0..x_{m-1} of order <= max_order, each
/// derivative variable with degree <= max_deg, small integer (occasionally t-linear) coefficients.
inline DiffPoly random_diffpoly(Gen &gen, unsigned max_order, unsigned max_deg, int terms, std::size_t m = 1,
                                bool t_coefficients = true) {
    DiffPoly p(RatFunc(), m);
    for (int k = 0; k < terms; ++k) {
        DiffPoly mono(RatFunc(1), m);
        const long nvars = gen.range(0, 2);
        for (long j = 0; j < nvars; ++j) {
            DerivVar v{static_cast<std::uint32_t>(gen.range(0, static_cast<long>(m) - 1)),
                       static_cast<std::uint32_t>(gen.range(0, max_order))};
            mono *= DiffPoly::variable(v, m).pow(static_cast<unsigned>(gen.range(1, max_deg)));
        }
        RatFunc c(gen.range(-5, 5));
        if (t_coefficients && gen.range(0, 3) == 0) c = c * RatFunc::t() + RatFunc(gen.range(-3, 3));
        p += mono.scaled(c);
    }
    return p;
}

} // namespace pvkit::test

namespace pvkit::test {

/// Random tuple of n rational functions (degrees <= max_degree, coefficients in [-c, c]);
/// about half the time one entry is replaced by a Q-combination of the others so both
/// outcomes of a dependence test get exercised.
inline std::vector<RatFunc> random_tuple(Gen &gen, std::size_t n, int max_degree = 4, long c = 9) {
    std::vector<RatFunc> v;
    for (std::size_t i = 0; i < n; ++i) {
        if (gen.coin()) v.push_back(RatFunc(gen.poly(max_degree, c)));
        else v.push_back(RatFunc::normalize(gen.poly(max_degree, c), gen.nonzero_poly(2, c)));
    }
    if (n >= 2 && gen.coin()) {
        const std::size_t target = static_cast<std::size_t>(gen.range(0, static_cast<long>(n) - 1));
        RatFunc combo;
        for (std::size_t i = 0; i < n; ++i)
            if (i != target) combo += RatFunc(Rational(gen.range(-3, 3))) * v[i];
        v[target] = combo;
    }
    return v;
}

inline Matrix<Rational> random_const_matrix(Gen &gen, std::size_t n, long c = 5) {
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (auto &row : m)
        for (auto &x : row) x = Rational(gen.range(-c, c));
    return m;
}

inline Matrix<Rational> random_invertible_matrix(Gen &gen, std::size_t n, long c = 5) {
    for (;;) {
        auto m = random_const_matrix(gen, n, c);
        if (!bareiss_determinant(m).is_zero()) return m;
    }
}

} // namespace pvkit::test

#include "pvkit/series.hpp"

namespace pvkit::test {

/// Random monic linear ODE of order 1..max_order with coefficients of degree <= 3,
/// and a base point that is ordinary for it.
inline std::pair<LinearODE, Rational> random_ode(Gen &gen, std::size_t max_order = 4) {
    LinearODE ode;
    const std::size_t n = static_cast<std::size_t>(gen.range(1, static_cast<long>(max_order)));
    for (std::size_t i = 0; i < n; ++i) {
        if (gen.coin()) ode.coeffs.push_back(RatFunc(gen.poly(3, 5)));
        else ode.coeffs.push_back(RatFunc::normalize(gen.poly(3, 5), gen.nonzero_poly(2, 5)));
    }
    for (;;) {
        Rational t0(Integer(gen.range(-4, 4)), Integer(gen.range(1, 3)));
        bool ordinary = true;
        for (const auto &a : ode.coeffs) ordinary = ordinary && !a.den()(t0).is_zero();
        if (ordinary) return {ode, t0};
    }
}

} // namespace pvkit::test

namespace pvkit::test {

/// Rational function with rational (non-integer) coefficients, for printer round trips.
inline RatFunc random_fraction_ratfunc(Gen &gen, int max_degree = 3) {
    auto rpoly = [&](bool nonzero) {
        for (;;) {
            std::vector<Rational> v;
            for (long i = 0, d = gen.range(0, max_degree); i <= d; ++i)
                v.push_back(gen.coin() ? Rational(gen.range(-9, 9)) : gen.rational(12));
            Poly p(std::move(v));
            if (!nonzero || !p.is_zero()) return p;
        }
    };
    Poly den = gen.range(0, 2) == 0 ? Poly(1) : rpoly(true);
    return RatFunc::normalize(rpoly(false), den);
}

/// Differential polynomial in x (m = 1) or x1..xm with arbitrary orders and Q(t) coefficients.
inline DiffPoly random_printable_diffpoly(Gen &gen) {
    const std::size_t m = gen.coin() ? 1 : static_cast<std::size_t>(gen.range(2, 4));
    DiffPoly p(RatFunc(), m);
    for (long k = 0, terms = gen.range(0, 4); k < terms; ++k) {
        DiffPoly mono(RatFunc(1), m);
        for (long j = 0, nvars = gen.range(0, 3); j < nvars; ++j) {
            DerivVar v{static_cast<std::uint32_t>(gen.range(0, static_cast<long>(m) - 1)),
                       static_cast<std::uint32_t>(gen.range(0, 5))};
            mono *= DiffPoly::variable(v, m).pow(static_cast<unsigned>(gen.range(1, 3)));
        }
        RatFunc c = gen.coin() ? RatFunc(gen.rational(7)) : random_fraction_ratfunc(gen, 2);
        p += mono.scaled(c);
    }
    return p;
}

} // namespace pvkit::test
