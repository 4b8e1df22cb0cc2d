#pragma once

// Decision procedures in the base differential field Q(t): whether an element is
// a derivative, and whether (a multiple of) it is a logarithmic derivative.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "pvkit/factor.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

inline RatFunc rf_normalize(const Poly &num, const Poly &den) { return RatFunc::normalize(num, den); }

inline RatFunc rf_derive(const RatFunc &f) { return f.derivative(); }

/// Antiderivative of a polynomial with zero constant term.
inline Poly integrate(const Poly &p) {
    std::vector<Rational> c(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k + 1] = p.coeffs()[k] / Rational(static_cast<long>(k + 1));
    return Poly(std::move(c));
}

/// a = rational_part' + polynomial_part + remainder_num / remainder_den,
/// with remainder_den squarefree and deg remainder_num < deg remainder_den.
struct HermiteDecomposition {
    RatFunc rational_part;
    Poly polynomial_part;
    Poly remainder_num;
    Poly remainder_den;
};

/// Hermite reduction in Mack's linear form; everything stays over Q.
inline HermiteDecomposition hermite_reduce(const RatFunc &a) {
    auto [poly_part, numer] = a.num().divmod(a.den());
    Poly den = a.den();
    RatFunc g;
    Poly dm = gcd(den, den.derivative());
    Poly ds = den.exact_div(dm);
    while (dm.degree() > 0) {
        Poly dm2 = gcd(dm, dm.derivative());
        Poly dms = dm.exact_div(dm2);
        Poly lhs = -(ds * dm.derivative()).exact_div(dm);
        auto [b, c] = solve_bezout(lhs, dms, numer);
        numer = c - (b.derivative() * ds).exact_div(dms);
        g += RatFunc::normalize(b, dm);
        dm = std::move(dm2);
    }
    auto [extra, rem] = numer.divmod(ds);
    HermiteDecomposition out;
    out.rational_part = g;
    out.polynomial_part = poly_part + extra;
    out.remainder_num = rem;
    out.remainder_den = rem.is_zero() ? Poly(1) : ds.monic();
    if (!rem.is_zero()) out.remainder_num = rem.scaled(ds.lc().inverse());
    return out;
}

/// Returns b with b' = a when a is a derivative in its field, nullopt otherwise.
/// In Q (zero derivation) only 0 is a derivative.
inline std::optional<RatFunc> antiderivative_in_field(const RatFunc &a) {
    if (a.tag() == FieldTag::constants_only) {
        if (a.is_zero()) return RatFunc(0);
        return std::nullopt;
    }
    auto h = hermite_reduce(a);
    if (!h.remainder_num.is_zero()) return std::nullopt;
    return h.rational_part + RatFunc(integrate(h.polynomial_part));
}

/// One summand c * p'/p of a logarithmic-derivative decomposition.
struct LogTerm {
    Poly factor;
    Rational coeff;

    friend bool operator==(const LogTerm &, const LogTerm &) = default;
};

namespace detail {
inline bool poly_less(const Poly &a, const Poly &b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto &x = a.coeffs();
    const auto &y = b.coeffs();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}
} // namespace detail

/// Writes a = sum c_i p_i'/p_i over the monic irreducible factors p_i of den(a)
/// with rational c_i. Returns nullopt when a has a polynomial part, a multiple
/// pole, or a residue that is not rational on some irreducible factor.
inline std::optional<std::vector<LogTerm>> log_derivative_decompose(const RatFunc &a) {
    std::vector<LogTerm> out;
    if (a.is_zero()) return out;
    if (a.tag() == FieldTag::constants_only) return std::nullopt;
    auto [poly_part, numer] = a.num().divmod(a.den());
    if (!poly_part.is_zero()) return std::nullopt;
    const Poly &den = a.den();
    if (!is_squarefree(den)) return std::nullopt;
    const Poly dden = den.derivative();
    for (auto &p : irreducible_factors_squarefree(den)) {
        auto [g, inv, unused] = gcdex(dden % p, p);
        Poly residue = (numer * inv) % p;
        if (residue.degree() > 0) return std::nullopt;
        out.push_back({p, residue.constant_term()});
    }
    std::sort(out.begin(), out.end(), [](const LogTerm &x, const LogTerm &y) { return detail::poly_less(x.factor, y.factor); });

    RatFunc check;
    for (const auto &[p, c] : out) check += RatFunc::normalize(p.derivative().scaled(c), p);
    if (check != a) return std::nullopt;
    return out;
}

struct ExponentialIndex {
    std::uint64_t n;
    RatFunc beta; // beta' = n * a * beta
};

/// Least n >= 1 such that f' = n*a*f has a nonzero solution f in the field.
inline std::optional<ExponentialIndex> smallest_exponential_index(const RatFunc &a) {
    auto terms = log_derivative_decompose(a);
    if (!terms) return std::nullopt;
    Integer n = 1;
    for (const auto &term : *terms) n = integer_lcm(n, term.coeff.den());
    RatFunc beta(1);
    if (a.tag() == FieldTag::rational_functions) beta = beta.retagged(FieldTag::rational_functions);
    for (const auto &[p, c] : *terms) {
        Rational e = c * Rational(n);
        beta *= RatFunc(p).pow(e.num().get_si());
    }
    return ExponentialIndex{n.get_ui(), beta};
}

} // namespace pvkit
