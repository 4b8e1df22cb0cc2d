#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pvkit/diffpoly.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

namespace detail {

// One signed summand: the text carries no sign of its own.
struct Summand {
    bool negative;
    std::string body;
};

inline std::string join_summands(const std::vector<Summand> &parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0)
            out += parts[i].negative ? "-" : "";
        else
            out += parts[i].negative ? " - " : " + ";
        out += parts[i].body;
    }
    return out;
}

// |c| * factor, written as "p*factor/q" with unit numerators and denominators elided.
inline std::string scaled_text(const Rational &c, const std::string &factor) {
    const Integer p = abs(c.num());
    std::string out;
    if (factor.empty())
        out = p.get_str();
    else if (p == 1)
        out = factor;
    else
        out = p.get_str() + "*" + factor;
    if (c.den() != 1) out += "/" + c.den().get_str();
    return out;
}

inline std::string power_text(const std::string &base, unsigned e) {
    if (e == 0) return "";
    return e == 1 ? base : base + "^" + std::to_string(e);
}

inline std::vector<Summand> poly_summands(const Poly &p, const std::string &var) {
    std::vector<Summand> parts;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational &c = p.coeff(static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        parts.push_back({c.sign() < 0, scaled_text(c, power_text(var, static_cast<unsigned>(k)))});
    }
    return parts;
}

inline bool single_term(const Poly &p) {
    int nonzero = 0;
    for (const auto &c : p.coeffs()) nonzero += !c.is_zero();
    return nonzero <= 1;
}

} // namespace detail

inline std::string to_text(const Rational &r) { return r.str(); }

/// Polynomial in `var`, highest degree first.
inline std::string to_text(const Poly &p, const std::string &var = "t") {
    return detail::join_summands(detail::poly_summands(p, var));
}

/// "num" for polynomials, otherwise "(num)/(den)" with parentheses only where needed.
inline std::string to_text(const RatFunc &f) {
    if (f.is_polynomial()) return to_text(f.num());
    std::string num = to_text(f.num());
    std::string den = to_text(f.den());
    if (!detail::single_term(f.num())) num = "(" + num + ")";
    if (!detail::single_term(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

inline std::string to_text(const DerivVar &v, std::size_t indeterminates) {
    std::string name = indeterminates > 1 || v.index > 0 ? "x" + std::to_string(v.index + 1) : "x";
    if (v.order <= 2) return name + std::string(v.order, '\'');
    return name + "^(" + std::to_string(v.order) + ")";
}

namespace detail {

inline DerivVar highest(const Monomial &m) { return m.empty() ? DerivVar{0, 0} : m.back().first; }

// Display order: total degree, then highest derivative, then lexicographic from the top, all descending.
inline bool display_before(const Monomial &a, const Monomial &b) {
    if (total_degree(a) != total_degree(b)) return total_degree(a) > total_degree(b);
    if (a.empty() || b.empty()) return !a.empty();
    if (highest(a) != highest(b)) return highest(a) > highest(b);
    return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
}

inline std::string monomial_text(const Monomial &m, std::size_t indeterminates) {
    std::string out;
    for (const auto &[v, e] : m) {
        if (!out.empty()) out += "*";
        out += power_text(to_text(v, indeterminates), e);
    }
    return out;
}

} // namespace detail

/// Differential polynomial with canonical monomial order.
inline std::string to_text(const DiffPoly &p) {
    std::vector<const std::pair<const Monomial, RatFunc> *> terms;
    for (const auto &t : p.terms()) terms.push_back(&t);
    std::stable_sort(terms.begin(), terms.end(),
                     [](auto *a, auto *b) { return detail::display_before(a->first, b->first); });

    std::vector<detail::Summand> parts;
    for (const auto *term : terms) {
        const auto &[mono, c] = *term;
        const std::string m = detail::monomial_text(mono, p.num_indeterminates());
        if (c.is_rational()) {
            const Rational q = c.as_rational();
            parts.push_back({q.sign() < 0, detail::scaled_text(q, m)});
            continue;
        }
        const bool negative = c.num().lc().sign() < 0;
        const RatFunc a = negative ? -c : c;
        if (mono.empty()) {
            std::string body = to_text(a);
            if (negative && a.is_polynomial() && !detail::single_term(a.num())) body = "(" + body + ")";
            parts.push_back({negative, body});
        } else if (a.is_polynomial() && detail::single_term(a.num())) {
            parts.push_back({negative, to_text(a) + "*" + m});
        } else {
            parts.push_back({negative, "(" + to_text(a) + ")*" + m});
        }
    }
    return detail::join_summands(parts);
}

} // namespace pvkit
