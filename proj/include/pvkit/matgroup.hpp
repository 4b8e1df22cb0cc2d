#pragma once

// Algebraic matrix groups over the constants Q: the invertible n x n matrices on
// which every polynomial of a defining set vanishes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvkit/diffpoly.hpp"
#include "pvkit/galois.hpp"
#include "pvkit/matrix.hpp"

namespace pvkit {

/// Square matrix of rational constants.
class ConstMatrix {
public:
    explicit ConstMatrix(Matrix<Rational> entries) : m_(std::move(entries)) { require_square(m_, "constant matrix"); }

    static ConstMatrix identity(std::size_t n) { return ConstMatrix(identity_matrix<Rational>(n)); }

    std::size_t size() const noexcept { return m_.size(); }
    const Matrix<Rational> &entries() const noexcept { return m_; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }

    Rational determinant() const { return bareiss_determinant(m_); }

    std::optional<ConstMatrix> inverse() const {
        auto inv = inverse_or_empty(m_);
        if (inv.empty()) return std::nullopt;
        return ConstMatrix(std::move(inv));
    }

    friend ConstMatrix operator*(const ConstMatrix &a, const ConstMatrix &b) {
        return ConstMatrix(multiply(a.m_, b.m_));
    }
    friend bool operator==(const ConstMatrix &, const ConstMatrix &) = default;

private:
    Matrix<Rational> m_;
};

/// Polynomial over Q in the n^2 matrix entries x_ij (variable i*n + j).
class EntryPoly {
public:
    using Exponents = std::vector<unsigned>;

    EntryPoly() = default;
    EntryPoly(const Rational &c, std::size_t n) : n_(n) {
        if (!c.is_zero()) terms_.emplace(Exponents(n * n, 0), c);
    }
    static EntryPoly entry(std::size_t i, std::size_t j, std::size_t n) {
        EntryPoly p;
        p.n_ = n;
        Exponents e(n * n, 0);
        e[i * n + j] = 1;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    std::size_t size() const noexcept { return n_; }
    const std::map<Exponents, Rational> &terms() const noexcept { return terms_; }

    friend EntryPoly operator+(EntryPoly a, const EntryPoly &b) {
        a.n_ = std::max(a.n_, b.n_);
        for (const auto &[e, c] : b.terms_) a.add(e, c);
        return a;
    }
    EntryPoly operator-() const {
        EntryPoly r = *this;
        for (auto &[e, c] : r.terms_) c = -c;
        return r;
    }
    friend EntryPoly operator-(const EntryPoly &a, const EntryPoly &b) { return a + (-b); }
    friend EntryPoly operator*(const EntryPoly &a, const EntryPoly &b) {
        EntryPoly r;
        r.n_ = std::max(a.n_, b.n_);
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add(e, ca * cb);
            }
        return r;
    }
    EntryPoly pow(unsigned k) const {
        EntryPoly r(Rational(1), n_);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const EntryPoly &, const EntryPoly &) = default;

    Rational evaluate(const ConstMatrix &m) const {
        if (m.size() != n_) throw error(errc::shape_error, "matrix size does not match the polynomial ring");
        Rational acc(0);
        for (const auto &[e, c] : terms_) {
            Rational t = c;
            for (std::size_t k = 0; k < e.size() && !t.is_zero(); ++k)
                if (e[k]) t *= m(k / n_, k % n_).pow(e[k]);
            acc += t;
        }
        return acc;
    }

private:
    void add(const Exponents &e, const Rational &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::size_t n_ = 0;
    std::map<Exponents, Rational> terms_;
};

enum class GroupKind { general_linear, special_linear, unipotent_ga, diagonal_gm, roots_of_unity };

struct GroupLabel {
    GroupKind kind;
    std::uint64_t k = 0; // order for roots_of_unity

    friend bool operator==(const GroupLabel &, const GroupLabel &) = default;
};

struct AlgebraicMatrixGroup {
    std::size_t n;
    std::vector<EntryPoly> defining_set;
    std::optional<GroupLabel> label; // empty for ad-hoc defining sets
};

inline bool group_contains(const AlgebraicMatrixGroup &g, const ConstMatrix &m) {
    if (m.size() != g.n)
        throw error(errc::shape_error, "expected a " + std::to_string(g.n) + "x" + std::to_string(g.n) + " matrix");
    if (m.determinant().is_zero()) return false;
    for (const auto &p : g.defining_set)
        if (!p.evaluate(m).is_zero()) return false;
    return true;
}

/// det as a polynomial in the entries.
inline EntryPoly determinant_polynomial(std::size_t n) {
    Matrix<EntryPoly> sym(n, std::vector<EntryPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sym[i][j] = EntryPoly::entry(i, j, n);
    return expansion_determinant(sym);
}

inline AlgebraicMatrixGroup catalog_group(GroupLabel label, std::size_t n) {
    auto x = [n](std::size_t i, std::size_t j) { return EntryPoly::entry(i, j, n); };
    const EntryPoly one(Rational(1), n);
    if (n == 0) throw error(errc::not_in_catalog, "matrix size must be positive");
    switch (label.kind) {
    case GroupKind::general_linear: return {n, {}, label};
    case GroupKind::special_linear: return {n, {determinant_polynomial(n) - one}, label};
    case GroupKind::unipotent_ga:
        if (n != 2) throw error(errc::not_in_catalog, "the additive group is embedded as 2x2 matrices");
        return {n, {x(0, 0) - one, x(1, 1) - one, x(1, 0)}, label};
    case GroupKind::diagonal_gm:
        if (n != 1) throw error(errc::not_in_catalog, "the multiplicative group is embedded as 1x1 matrices");
        return {n, {}, label};
    case GroupKind::roots_of_unity:
        if (n != 1) throw error(errc::not_in_catalog, "roots of unity are embedded as 1x1 matrices");
        if (label.k == 0) throw error(errc::not_in_catalog, "roots of unity need a positive order");
        return {n, {x(0, 0).pow(static_cast<unsigned>(label.k)) - one}, label};
    }
    throw error(errc::not_in_catalog, "unknown group label");
}

/// All pairwise products and all inverses of the samples stay in the group.
inline bool group_closure_sample_check(const AlgebraicMatrixGroup &g, const std::vector<ConstMatrix> &samples) {
    for (const auto &s : samples)
        if (!group_contains(g, s)) throw error(errc::non_member_sample, "sample is not a member of the group");
    for (const auto &a : samples) {
        auto inv = a.inverse();
        if (!inv || !group_contains(g, *inv)) return false;
        for (const auto &b : samples)
            if (!group_contains(g, a * b)) return false;
    }
    return true;
}

inline std::uint64_t identity_component_dimension(const AlgebraicMatrixGroup &g) {
    if (!g.label) throw error(errc::not_in_catalog, "dimension is only known for catalog groups");
    const std::uint64_t n = g.n;
    switch (g.label->kind) {
    case GroupKind::general_linear: return n * n;
    case GroupKind::special_linear: return n * n - 1;
    case GroupKind::unipotent_ga: return 1;
    case GroupKind::diagonal_gm: return 1;
    case GroupKind::roots_of_unity: return 0;
    }
    throw error(errc::not_in_catalog, "unknown group label");
}

/// Matrix representation of a classified group: sigma(u) = u + c acts on (u, 1)
/// as [[1, c], [0, 1]]; sigma(u) = c*u as the 1x1 matrix (c).
inline AlgebraicMatrixGroup descriptor_to_matrix_group(const GaloisDescriptor &d) {
    return std::visit(
        [](const auto &g) -> AlgebraicMatrixGroup {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, galois::Trivial>)
                return catalog_group({GroupKind::roots_of_unity, 1}, 1);
            else if constexpr (std::is_same_v<G, galois::AdditiveGroup>)
                return catalog_group({GroupKind::unipotent_ga}, 2);
            else if constexpr (std::is_same_v<G, galois::MultiplicativeGroup>)
                return catalog_group({GroupKind::diagonal_gm}, 1);
            else if constexpr (std::is_same_v<G, galois::CyclicOfOrder>)
                return catalog_group({GroupKind::roots_of_unity, g.n}, 1);
            else
                return catalog_group({GroupKind::general_linear}, static_cast<std::size_t>(g.n));
        },
        d);
}

/// The n+1 maximal minors of the (n+1) x n matrix (x_i^(j)), j = 0..n. Minor j
/// omits row j; up to sign it is the coefficient of y^(j) in W(x_1, ..., x_n, y),
/// and minor n is W(x_1, ..., x_n).
inline std::vector<DiffPoly> wronskian_minors(std::size_t n) {
    Matrix<DiffPoly> big(n + 1, std::vector<DiffPoly>(n + 1, DiffPoly(RatFunc(), n)));
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            big[j][i] = DiffPoly::variable({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, n);
    std::vector<DiffPoly> out;
    for (std::size_t j = 0; j <= n; ++j) out.push_back(expansion_determinant(minor_matrix(big, j, n)));
    return out;
}

/// Fills x_i^(j) for j <= max_order from values[i] and its derivatives.
inline Assignment generic_point_from(const std::vector<RatFunc> &values, std::uint32_t max_order) {
    Assignment at;
    for (std::size_t i = 0; i < values.size(); ++i) {
        RatFunc f = values[i];
        for (std::uint32_t j = 0; j <= max_order; ++j) {
            at[{static_cast<std::uint32_t>(i), j}] = f;
            f = f.derivative();
        }
    }
    return at;
}

/// Checks that the coefficients of W(y, x)/W(x) are unchanged by x_i^(m) -> sum_j T_ij x_j^(m),
/// by evaluating both sides at the given point.
inline bool gl_invariance_witness(std::size_t n, const ConstMatrix &transform, const Assignment &generic_point) {
    if (transform.size() != n) throw error(errc::shape_error, "transform size does not match n");
    if (transform.determinant().is_zero()) throw error(errc::singular_transform, "transform is singular");
    const auto minors = wronskian_minors(n);
    const RatFunc w = dp_evaluate(minors[n], generic_point);
    if (w.is_zero()) throw error(errc::degenerate_point, "Wronskian vanishes at the chosen point");
    const RatFunc w_t = dp_evaluate(dp_substitute_linear(minors[n], transform.entries()), generic_point);
    if (w_t.is_zero()) return false;
    for (std::size_t j = 0; j < n; ++j) {
        const RatFunc before = dp_evaluate(minors[j], generic_point) / w;
        const RatFunc after = dp_evaluate(dp_substitute_linear(minors[j], transform.entries()), generic_point) / w_t;
        if (before != after) return false;
    }
    return true;
}

} // namespace pvkit
