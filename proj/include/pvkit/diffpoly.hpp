#pragma once

// The differential polynomial ring K{x_1, ..., x_m} over K = Q or Q(t).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pvkit/matrix.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

/// x_index^(order). Ranked by order first, then by indeterminate index.
struct DerivVar {
    std::uint32_t index = 0;
    std::uint32_t order = 0;

    friend bool operator==(const DerivVar &, const DerivVar &) = default;
    friend std::strong_ordering operator<=>(const DerivVar &a, const DerivVar &b) {
        if (auto c = a.order <=> b.order; c != 0) return c;
        return a.index <=> b.index;
    }

    DerivVar derived(std::uint32_t k = 1) const { return {index, order + k}; }
};

/// Power product of derivative variables, sorted ascending by rank, exponents > 0.
using Monomial = std::vector<std::pair<DerivVar, unsigned>>;

inline Monomial monomial_product(const Monomial &a, const Monomial &b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) out.push_back(*i++);
        else if (j->first < i->first) out.push_back(*j++);
        else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    out.insert(out.end(), j, b.end());
    return out;
}

inline unsigned total_degree(const Monomial &m) {
    unsigned d = 0;
    for (const auto &[v, e] : m) d += e;
    return d;
}

inline unsigned exponent_of(const Monomial &m, const DerivVar &v) {
    for (const auto &[w, e] : m)
        if (w == v) return e;
    return 0;
}

/// Sparse differential polynomial with coefficients in K. No zero coefficient is stored.
class DiffPoly {
public:
    using Terms = std::map<Monomial, RatFunc>;

    DiffPoly() = default;
    DiffPoly(const RatFunc &c, std::size_t indeterminates = 1) : m_(indeterminates) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    DiffPoly(long c) : DiffPoly(RatFunc(c)) {}
    DiffPoly(int c) : DiffPoly(RatFunc(c)) {}

    static DiffPoly variable(DerivVar v, std::size_t indeterminates = 1) {
        DiffPoly p;
        p.m_ = std::max<std::size_t>(indeterminates, v.index + 1);
        p.terms_.emplace(Monomial{{v, 1u}}, RatFunc(1));
        return p;
    }
    static DiffPoly term(Monomial mono, RatFunc c, std::size_t indeterminates = 1) {
        DiffPoly p;
        p.m_ = indeterminates;
        for (const auto &[v, e] : mono) p.m_ = std::max<std::size_t>(p.m_, v.index + 1);
        if (!c.is_zero()) p.terms_.emplace(std::move(mono), std::move(c));
        return p;
    }

    std::size_t num_indeterminates() const noexcept { return m_; }
    void set_num_indeterminates(std::size_t m) { m_ = std::max(m_, m); }

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// True for elements of K (including zero).
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    RatFunc constant_value() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? RatFunc() : it->second;
    }

    DiffPoly operator-() const {
        DiffPoly r = *this;
        for (auto &[m, c] : r.terms_) c = -c;
        return r;
    }

    DiffPoly &operator+=(const DiffPoly &o) {
        m_ = std::max(m_, o.m_);
        for (const auto &[mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    DiffPoly &operator-=(const DiffPoly &o) {
        m_ = std::max(m_, o.m_);
        for (const auto &[mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly &b) { return a -= b; }

    friend DiffPoly operator*(const DiffPoly &a, const DiffPoly &b) {
        DiffPoly r;
        r.m_ = std::max(a.m_, b.m_);
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) r.add_term(monomial_product(ma, mb), ca * cb);
        return r;
    }
    DiffPoly &operator*=(const DiffPoly &o) { return *this = *this * o; }

    DiffPoly scaled(const RatFunc &c) const {
        if (c.is_zero()) return DiffPoly(RatFunc(), m_);
        DiffPoly r = *this;
        for (auto &[mono, coef] : r.terms_) coef *= c;
        return r;
    }

    DiffPoly pow(unsigned e) const {
        DiffPoly r(RatFunc(1), m_), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    /// Exact division by an element of K.
    DiffPoly operator/(const DiffPoly &o) const {
        if (!o.is_constant()) throw error(errc::not_applicable, "division by a non-constant differential polynomial");
        return scaled(o.constant_value().inverse());
    }

    friend bool operator==(const DiffPoly &a, const DiffPoly &b) { return a.terms_ == b.terms_; }

    /// Derivative variables occurring in the polynomial, ascending by rank.
    std::set<DerivVar> variables() const {
        std::set<DerivVar> out;
        for (const auto &[mono, c] : terms_)
            for (const auto &[v, e] : mono) out.insert(v);
        return out;
    }

    unsigned degree_in(const DerivVar &v) const {
        unsigned d = 0;
        for (const auto &[mono, c] : terms_) d = std::max(d, exponent_of(mono, v));
        return d;
    }

    /// Coefficients of the powers of v: result[k] multiplies v^k.
    std::vector<DiffPoly> coefficients_in(const DerivVar &v) const {
        std::vector<DiffPoly> out(degree_in(v) + 1, DiffPoly(RatFunc(), m_));
        for (const auto &[mono, c] : terms_) {
            Monomial rest;
            unsigned e = 0;
            for (const auto &[w, k] : mono) {
                if (w == v) e = k;
                else rest.emplace_back(w, k);
            }
            out[e].add_term(rest, c);
        }
        return out;
    }

    /// Partial derivative with respect to v.
    DiffPoly partial(const DerivVar &v) const {
        DiffPoly r(RatFunc(), m_);
        for (const auto &[mono, c] : terms_) {
            Monomial rest;
            unsigned e = 0;
            for (const auto &[w, k] : mono) {
                if (w == v) {
                    e = k;
                    if (k > 1) rest.emplace_back(w, k - 1);
                } else {
                    rest.emplace_back(w, k);
                }
            }
            if (e) r.add_term(rest, c * RatFunc(static_cast<long>(e)));
        }
        return r;
    }

    /// Total derivative: x_i^(j) -> x_i^(j+1), coefficients by d/dt.
    DiffPoly derivative() const {
        DiffPoly r(RatFunc(), m_);
        for (const auto &[mono, c] : terms_) {
            RatFunc dc = c.derivative();
            if (!dc.is_zero()) r.add_term(mono, dc);
            for (std::size_t i = 0; i < mono.size(); ++i) {
                const auto &[v, e] = mono[i];
                Monomial lowered;
                for (std::size_t j = 0; j < mono.size(); ++j) {
                    if (j != i) lowered.push_back(mono[j]);
                    else if (e > 1) lowered.emplace_back(v, e - 1);
                }
                Monomial dv{{v.derived(), 1u}};
                r.add_term(monomial_product(lowered, dv), c * RatFunc(static_cast<long>(e)));
            }
        }
        return r;
    }

private:
    void add_term(const Monomial &mono, const RatFunc &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Terms terms_;
    std::size_t m_ = 1;
};

inline DiffPoly dp_derive(const DiffPoly &p) { return p.derivative(); }

inline DiffPoly dp_derive(const DiffPoly &p, unsigned k) {
    DiffPoly r = p;
    for (unsigned i = 0; i < k; ++i) r = r.derivative();
    return r;
}

/// Order of p in x_i: nullopt for 0, -1 when x_i does not occur.
inline std::optional<int> dp_order(const DiffPoly &p, std::uint32_t i) {
    if (p.is_zero()) return std::nullopt;
    int order = -1;
    for (const auto &[mono, c] : p.terms())
        for (const auto &[v, e] : mono)
            if (v.index == i) order = std::max(order, static_cast<int>(v.order));
    return order;
}

inline int require_order(const DiffPoly &p, std::uint32_t i) {
    auto n = dp_order(p, i);
    if (!n || *n < 0) throw error(errc::not_applicable, "polynomial has no leader in the chosen indeterminate");
    return *n;
}

inline DerivVar dp_leader(const DiffPoly &p, std::uint32_t i) {
    return DerivVar{i, static_cast<std::uint32_t>(require_order(p, i))};
}

inline unsigned dp_leader_degree(const DiffPoly &p, std::uint32_t i) { return p.degree_in(dp_leader(p, i)); }

inline DiffPoly dp_initial(const DiffPoly &p, std::uint32_t i) {
    const DerivVar u = dp_leader(p, i);
    return p.coefficients_in(u).back();
}

/// Partial derivative of p with respect to its leader x_i^(N).
inline DiffPoly dp_separant(const DiffPoly &p, std::uint32_t i) { return p.partial(dp_leader(p, i)); }

/// x_i^(j) -> sum_k transform[i][k] x_k^(j).
inline DiffPoly dp_substitute_linear(const DiffPoly &p, const Matrix<Rational> &transform) {
    const std::size_t m = p.num_indeterminates();
    if (transform.size() != m)
        throw error(errc::shape_error, "transform must be " + std::to_string(m) + "x" + std::to_string(m));
    for (const auto &row : transform)
        if (row.size() != m) throw error(errc::shape_error, "transform must be square");

    std::map<DerivVar, DiffPoly> image;
    auto image_of = [&](const DerivVar &v) -> const DiffPoly & {
        auto it = image.find(v);
        if (it != image.end()) return it->second;
        DiffPoly s(RatFunc(), m);
        for (std::uint32_t k = 0; k < m; ++k)
            if (!transform[v.index][k].is_zero())
                s += DiffPoly::variable({k, v.order}, m).scaled(RatFunc(transform[v.index][k]));
        return image.emplace(v, std::move(s)).first->second;
    };

    DiffPoly out(RatFunc(), m);
    for (const auto &[mono, c] : p.terms()) {
        DiffPoly t(c, m);
        for (const auto &[v, e] : mono) t *= image_of(v).pow(e);
        out += t;
    }
    return out;
}

using Assignment = std::map<DerivVar, RatFunc>;

inline RatFunc dp_evaluate(const DiffPoly &p, const Assignment &values) {
    RatFunc acc;
    for (const auto &[mono, c] : p.terms()) {
        RatFunc t = c;
        for (const auto &[v, e] : mono) {
            auto it = values.find(v);
            if (it == values.end())
                throw error(errc::incomplete_assignment, "no value for x" + std::to_string(v.index + 1) + "^(" +
                                                             std::to_string(v.order) + ")");
            t *= it->second.pow(e);
        }
        acc += t;
    }
    return acc;
}

} // namespace pvkit
