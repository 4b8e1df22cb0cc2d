#pragma once

// Ritt pseudo-reduction of Q modulo a single differential polynomial P and the
// membership test for the general-solution ideal I(P) built on it.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pvkit/diffpoly.hpp"
#include "pvkit/factor.hpp"

namespace pvkit {

/// S^sep_power * I^init_power * Q = sum_k cofactor_k * d^k P + remainder.
struct ReductionResult {
    DiffPoly remainder;
    unsigned sep_power = 0;
    unsigned init_power = 0;
    std::vector<std::pair<unsigned, DiffPoly>> certificate; // (derivative order k, cofactor), ascending k
};

/// True when r has order < N in x_i, or order N with lower leader degree than p.
inline bool is_reduced(const DiffPoly &r, const DiffPoly &p, std::uint32_t i) {
    const int n = require_order(p, i);
    auto order = dp_order(r, i);
    if (!order || *order < n) return true;
    if (*order > n) return false;
    return r.degree_in(DerivVar{i, static_cast<std::uint32_t>(n)}) < dp_leader_degree(p, i);
}

namespace detail {

struct Reducer {
    DiffPoly remainder;
    std::map<unsigned, DiffPoly> cofactors;
    unsigned sep_power = 0;
    unsigned init_power = 0;

    // One sparse pseudo-division of the remainder by divisor (= d^k P) in v,
    // until deg_v(remainder) < deg_v(divisor). Leading coefficients in K are
    // divided out instead of multiplied in, so they do not raise the powers.
    void divide(const DiffPoly &divisor, unsigned k, const DerivVar &v, bool is_separant) {
        const auto dcoeffs = divisor.coefficients_in(v);
        const unsigned dd = static_cast<unsigned>(dcoeffs.size() - 1);
        const DiffPoly &lead = dcoeffs.back();
        for (;;) {
            const unsigned e = remainder.degree_in(v);
            if (e < dd || remainder.is_zero()) break;
            DiffPoly lr = remainder.coefficients_in(v).back();
            DiffPoly shift = lr * DiffPoly::variable(v, remainder.num_indeterminates()).pow(e - dd);
            if (lead.is_constant()) {
                shift = shift / lead;
            } else {
                remainder = lead * remainder;
                for (auto &[kk, c] : cofactors) c = lead * c;
                (is_separant ? sep_power : init_power) += 1;
            }
            remainder -= shift * divisor;
            auto [it, inserted] = cofactors.emplace(k, shift);
            if (!inserted) it->second += shift;
        }
    }
};

} // namespace detail

/// Reduces q modulo p in the indeterminate x_i. Higher derivatives of p are
/// linear in their leaders with the separant as coefficient, so q is first
/// brought to order <= N with them; then p itself divides out the leader using
/// the initial.
inline ReductionResult ritt_reduce(const DiffPoly &q, const DiffPoly &p, std::uint32_t i) {
    const int n = require_order(p, i);
    const DiffPoly sep = dp_separant(p, i);
    const bool linear_leader = dp_leader_degree(p, i) == 1;

    detail::Reducer red{q, {}, 0, 0};
    red.remainder.set_num_indeterminates(p.num_indeterminates());

    std::map<unsigned, DiffPoly> derivs;
    for (;;) {
        auto order = dp_order(red.remainder, i);
        if (!order || *order <= n) break;
        const unsigned k = static_cast<unsigned>(*order - n);
        auto it = derivs.find(k);
        if (it == derivs.end()) it = derivs.emplace(k, dp_derive(p, k)).first;
        red.divide(it->second, k, DerivVar{i, static_cast<std::uint32_t>(*order)}, true);
    }
    // with a linear leader the initial is the separant; count it as such
    red.divide(p, 0, DerivVar{i, static_cast<std::uint32_t>(n)}, linear_leader);

    ReductionResult out;
    out.remainder = std::move(red.remainder);
    out.sep_power = red.sep_power;
    out.init_power = red.init_power;
    for (auto &[k, c] : red.cofactors)
        if (!c.is_zero()) out.certificate.emplace_back(k, std::move(c));
    return out;
}

/// S^s * I^m * q - sum_k cofactor_k * d^k p; equals the remainder for a valid certificate.
inline DiffPoly certificate_residual(const DiffPoly &q, const DiffPoly &p, std::uint32_t i, const ReductionResult &r) {
    DiffPoly lhs = dp_separant(p, i).pow(r.sep_power) * dp_initial(p, i).pow(r.init_power) * q;
    for (const auto &[k, c] : r.certificate) lhs -= c * dp_derive(p, k);
    return lhs;
}

/// Membership of q in I(p). p must be irreducible; see irreducibility_screen.
inline bool in_general_ideal(const DiffPoly &q, const DiffPoly &p, std::uint32_t i) {
    return ritt_reduce(q, p, i).remainder.is_zero();
}

/// Cheap sufficient irreducibility checks: linear leader with an initial in K, or
/// p a polynomial in its leader alone with rational coefficients that is
/// irreducible over Q (hence over Q(t)). False means "not established".
inline bool irreducibility_screen(const DiffPoly &p, std::uint32_t i) {
    const DerivVar u = dp_leader(p, i);
    if (dp_leader_degree(p, i) == 1 && dp_initial(p, i).is_constant()) return true;
    auto vars = p.variables();
    if (vars.size() != 1) return false;
    auto coeffs = p.coefficients_in(u);
    std::vector<Rational> c;
    for (const auto &x : coeffs) {
        RatFunc v = x.constant_value();
        if (!v.is_rational()) return false;
        c.push_back(v.as_rational());
    }
    return is_irreducible(Poly(std::move(c)));
}

} // namespace pvkit
