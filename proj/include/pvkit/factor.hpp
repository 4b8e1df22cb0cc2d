#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pvkit/poly.hpp"

namespace pvkit {

/// Factorization of a nonzero polynomial over Q into monic irreducible factors.
struct Factorization {
    Rational unit;                                  // leading coefficient
    std::vector<std::pair<Poly, unsigned>> factors; // (monic irreducible, multiplicity)

    Poly expand() const {
        Poly r(unit);
        for (const auto &[p, e] : factors) r *= p.pow(e);
        return r;
    }
};

namespace detail {

/// Scales p to an integer polynomial with content 1 and positive leading coefficient.
inline Poly primitive_integer(const Poly &p) {
    if (p.is_zero()) return p;
    Poly q = p.scaled(Rational(p.denominator_lcm()));
    Integer g = 0;
    for (const auto &c : q.coeffs()) g = integer_gcd(g, c.num());
    Rational s(Integer(1), g);
    if (q.lc().sign() < 0) s = -s;
    return q.scaled(s);
}

/// Positive divisors of |v|, v != 0, ascending.
inline std::vector<Integer> positive_divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<std::pair<Integer, unsigned>> primes;
    for (Integer p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) primes.emplace_back(p, e);
    }
    if (v > 1) primes.emplace_back(v, 1);
    std::vector<Integer> divs{Integer(1)};
    for (const auto &[p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Newton interpolation through (xs[i], ys[i]).
inline Poly interpolate(const std::vector<Rational> &xs, const std::vector<Rational> &ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    Poly r(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) r = r * (Poly::t() - Poly(xs[i])) + Poly(dd[i]);
    return r;
}

inline bool has_integer_coeffs(const Poly &p) {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational &c) { return c.is_integer(); });
}

/// Searches an integer factor of degree exactly d of the primitive integer polynomial f.
inline std::optional<Poly> kronecker_factor(const Poly &f, int d) {
    // pick d+1 integer points with small nonzero values
    std::vector<std::pair<Integer, Rational>> cand;
    for (long k = 0; static_cast<int>(cand.size()) < 4 * (d + 1) + 4; ++k) {
        for (int side = 0; side < (k == 0 ? 1 : 2); ++side) {
            const long x = side == 0 ? k : -k;
            Rational v = f(Rational(x));
            if (!v.is_zero()) cand.emplace_back(v.num() < 0 ? Integer(-v.num()) : v.num(), Rational(x));
        }
    }
    std::stable_sort(cand.begin(), cand.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    cand.resize(static_cast<std::size_t>(d + 1));

    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> divs;
    for (const auto &[absval, x] : cand) {
        xs.push_back(x);
        divs.push_back(positive_divisors(absval));
    }

    const Integer lc = f.lc().num();
    const std::size_t m = xs.size();
    // index[i] ranges over 2*|divs[i]| signed choices; the first point keeps a positive sign
    std::vector<std::size_t> idx(m, 0);
    std::vector<Rational> ys(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t nd = divs[i].size();
            const Integer &dv = divs[i][idx[i] % nd];
            ys[i] = Rational(idx[i] < nd ? dv : Integer(-dv));
        }
        Poly g = interpolate(xs, ys);
        if (g.degree() == d && has_integer_coeffs(g) && lc % g.lc().num() == 0 && g.divides(f))
            return primitive_integer(g);

        std::size_t i = 0;
        for (; i < m; ++i) {
            const std::size_t limit = (i == 0 ? 1 : 2) * divs[i].size();
            if (++idx[i] < limit) break;
            idx[i] = 0;
        }
        if (i == m) break;
    }
    return std::nullopt;
}

inline std::vector<Poly> rational_root_factors(Poly &f) {
    std::vector<Poly> out;
    while (f.degree() >= 1 && f.constant_term().is_zero()) {
        out.push_back(Poly::t());
        f = f.exact_div(Poly::t());
    }
    if (f.degree() < 1) return out;
    const auto ps = positive_divisors(f.constant_term().num());
    const auto qs = positive_divisors(f.lc().num());
    for (const auto &q : qs) {
        for (const auto &p : ps) {
            for (int s : {1, -1}) {
                if (f.degree() < 1) return out;
                if (integer_gcd(p, q) != 1) continue;
                Rational r(s > 0 ? p : Integer(-p), q);
                if (f(r).is_zero()) {
                    Poly lin = Poly::t() - Poly(r);
                    out.push_back(lin);
                    f = primitive_integer(f.exact_div(lin));
                }
            }
        }
    }
    return out;
}

/// Irreducible factors of a squarefree primitive integer polynomial without rational roots.
inline void split_no_linear(const Poly &f, std::vector<Poly> &out) {
    if (f.degree() <= 0) return;
    if (f.degree() <= 3) {
        out.push_back(f.monic());
        return;
    }
    for (int d = 2; 2 * d <= f.degree(); ++d) {
        if (auto g = kronecker_factor(f, d)) {
            split_no_linear(*g, out);
            split_no_linear(primitive_integer(f.exact_div(*g)), out);
            return;
        }
    }
    out.push_back(f.monic());
}

} // namespace detail

/// Monic irreducible factors of a squarefree polynomial of positive degree.
inline std::vector<Poly> irreducible_factors_squarefree(const Poly &p) {
    Poly f = detail::primitive_integer(p);
    std::vector<Poly> out;
    for (auto &lin : detail::rational_root_factors(f)) out.push_back(lin.monic());
    detail::split_no_linear(f, out);
    return out;
}

/// Complete factorization over Q: squarefree decomposition, then Kronecker splitting
/// of each squarefree part. Exponential in the degree; intended for small inputs.
inline Factorization factor(const Poly &p) {
    if (p.is_zero()) throw error(errc::not_applicable, "cannot factor the zero polynomial");
    Factorization out{p.lc(), {}};
    const auto parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        for (auto &q : irreducible_factors_squarefree(parts[i]))
            out.factors.emplace_back(std::move(q), static_cast<unsigned>(i + 1));
    }
    return out;
}

inline bool is_irreducible(const Poly &p) {
    if (p.degree() <= 0) return false;
    auto f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace pvkit
