#pragma once

// Differential Galois groups of the two first-order extension types over Q(t):
// u' = a (antiderivative) and u' = a*u (exponential).

#include <cstdint>
#include <string_view>
#include <type_traits>
#include <variant>

#include "pvkit/basefield.hpp"

namespace pvkit {

namespace galois {

/// The extension adds nothing: u is (up to a constant) witness, which lies in K.
struct Trivial {
    RatFunc witness;
    friend bool operator==(const Trivial &, const Trivial &) = default;
};
/// sigma(u) = u + c; u transcendental over K.
struct AdditiveGroup {
    friend bool operator==(const AdditiveGroup &, const AdditiveGroup &) = default;
};
/// sigma(u) = c*u, c ranging over the nonzero constants.
struct MultiplicativeGroup {
    friend bool operator==(const MultiplicativeGroup &, const MultiplicativeGroup &) = default;
};
/// sigma(u) = eps*u with eps^n = 1; u has minimal polynomial X^n - c*beta.
struct CyclicOfOrder {
    std::uint64_t n;
    RatFunc beta;
    friend bool operator==(const CyclicOfOrder &, const CyclicOfOrder &) = default;
};
struct FullGeneralLinear {
    std::uint64_t n;
    friend bool operator==(const FullGeneralLinear &, const FullGeneralLinear &) = default;
};

} // namespace galois

using GaloisDescriptor = std::variant<galois::Trivial, galois::AdditiveGroup, galois::MultiplicativeGroup,
                                      galois::CyclicOfOrder, galois::FullGeneralLinear>;

/// K(u) with u' = a.
inline GaloisDescriptor classify_antiderivative_extension(const RatFunc &a) {
    if (auto b = antiderivative_in_field(a)) return galois::Trivial{*b};
    return galois::AdditiveGroup{};
}

/// K(u) with u' = a*u, u != 0.
inline GaloisDescriptor classify_exponential_extension(const RatFunc &a) {
    auto index = smallest_exponential_index(a);
    if (!index) return galois::MultiplicativeGroup{};
    if (index->n == 1) return galois::Trivial{index->beta};
    return galois::CyclicOfOrder{index->n, index->beta};
}

/// Dimension of the group: that of its identity component.
inline std::uint64_t descriptor_dimension(const GaloisDescriptor &d) {
    return std::visit(
        [](const auto &g) -> std::uint64_t {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, galois::AdditiveGroup> || std::is_same_v<G, galois::MultiplicativeGroup>)
                return 1; // one free parameter c
            else if constexpr (std::is_same_v<G, galois::FullGeneralLinear>)
                return g.n * g.n; // no defining equations on n^2 entries
            else
                return 0; // finite
        },
        d);
}

/// Transcendence degree of the classified extension over K.
inline std::uint64_t descriptor_trdeg(const GaloisDescriptor &d) {
    return std::visit(
        [](const auto &g) -> std::uint64_t {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, galois::Trivial>) return 0;        // u in K
            else if constexpr (std::is_same_v<G, galois::CyclicOfOrder>) return 0; // u algebraic of degree n
            else if constexpr (std::is_same_v<G, galois::FullGeneralLinear>)
                return g.n * g.n; // the x_i^(j), 0 <= j < n, are algebraically independent
            else return 1;        // a single transcendental u
        },
        d);
}

inline std::string_view descriptor_name(const GaloisDescriptor &d) {
    static constexpr std::string_view names[] = {"trivial", "additive", "multiplicative", "cyclic", "general_linear"};
    return names[d.index()];
}

} // namespace pvkit
