#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pvkit/matrix.hpp"
#include "pvkit/ratfunc.hpp"

namespace pvkit {

/// Monic linear ODE y^(n) + a_1 y^(n-1) + ... + a_n y = 0; coeffs = [a_1, ..., a_n].
struct LinearODE {
    std::vector<RatFunc> coeffs;

    std::size_t order() const noexcept { return coeffs.size(); }

    /// L(f) = f^(n) + a_1 f^(n-1) + ... + a_n f.
    RatFunc apply(const RatFunc &f) const {
        std::vector<RatFunc> d{f};
        for (std::size_t j = 0; j < order(); ++j) d.push_back(d.back().derivative());
        RatFunc acc = d[order()];
        for (std::size_t k = 1; k <= order(); ++k) acc += coeffs[k - 1] * d[order() - k];
        return acc;
    }

    friend bool operator==(const LinearODE &, const LinearODE &) = default;
};

/// Entry (j, i) is the j-th derivative of elems[i].
inline Matrix<RatFunc> wronsky_matrix(const std::vector<RatFunc> &elems) {
    if (elems.empty()) throw error(errc::shape_error, "Wronsky matrix of an empty list");
    const std::size_t n = elems.size();
    Matrix<RatFunc> w(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i) {
        RatFunc f = elems[i];
        for (std::size_t j = 0; j < n; ++j) {
            w[j][i] = f;
            if (j + 1 < n) f = f.derivative();
        }
    }
    return w;
}

inline RatFunc wronskian(const std::vector<RatFunc> &elems) { return bareiss_determinant(wronsky_matrix(elems)); }

/// Linear dependence over the constants Q; zero Wronskian criterion.
inline bool dependent_over_constants(const std::vector<RatFunc> &elems) { return wronskian(elems).is_zero(); }

/// Constants c (first nonzero entry 1) with sum c_i elems_i = 0, found by linear
/// algebra over Q on the coefficients after clearing denominators; nullopt when
/// the elements are independent. Does not use the Wronskian.
inline std::optional<std::vector<Rational>> dependence_certificate(const std::vector<RatFunc> &elems) {
    if (elems.empty()) throw error(errc::shape_error, "dependence test on an empty list");
    Poly common(1);
    for (const auto &f : elems) common = lcm(common, f.den());
    std::vector<Poly> cleared;
    int deg = 0;
    for (const auto &f : elems) {
        cleared.push_back(f.num() * common.exact_div(f.den()));
        deg = std::max(deg, cleared.back().degree());
    }
    Matrix<Rational> a(static_cast<std::size_t>(deg + 1), std::vector<Rational>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int k = 0; k <= deg; ++k) a[static_cast<std::size_t>(k)][i] = cleared[i].coeff(static_cast<std::size_t>(k));
    auto kernel = kernel_basis(a, elems.size());
    if (kernel.empty()) return std::nullopt;
    std::vector<Rational> c = kernel.front();
    for (const auto &v : c) {
        if (!v.is_zero()) {
            const Rational inv = v.inverse();
            for (auto &x : c) x *= inv;
            break;
        }
    }
    return c;
}

/// C * u componentwise: result_i = sum_j C[i][j] u_j.
inline std::vector<RatFunc> apply_constant_matrix(const std::vector<RatFunc> &elems, const Matrix<Rational> &c) {
    if (c.size() != elems.size()) throw error(errc::shape_error, "constant matrix size does not match the tuple");
    std::vector<RatFunc> out;
    for (const auto &row : c) {
        if (row.size() != elems.size()) throw error(errc::shape_error, "constant matrix must be square");
        RatFunc acc;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) acc += RatFunc(row[j]) * elems[j];
        out.push_back(acc);
    }
    return out;
}

/// The monic operator W(u_1, ..., u_n, y) / W(u_1, ..., u_n), expanded along the
/// y column (placed last, so the coefficient of y^(n) is W(u)).
inline LinearODE ode_from_fundamental_system(const std::vector<RatFunc> &fs) {
    const std::size_t n = fs.size();
    const RatFunc w = wronskian(fs);
    if (w.is_zero()) throw error(errc::not_fundamental, "elements have zero Wronskian");
    std::vector<RatFunc> ext = fs;
    ext.emplace_back(); // placeholder for y; its column is removed in every minor
    Matrix<RatFunc> big(n + 1, std::vector<RatFunc>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        RatFunc f = fs[i];
        for (std::size_t j = 0; j <= n; ++j) {
            big[j][i] = f;
            f = f.derivative();
        }
    }
    LinearODE ode;
    ode.coeffs.resize(n);
    // coefficient of y^(j) is (-1)^(j+n) * minor(j, n); a_{n-j} is that over W
    for (std::size_t j = 0; j < n; ++j) {
        RatFunc m = bareiss_determinant(minor_matrix(big, j, n));
        if ((j + n) % 2 == 1) m = -m;
        ode.coeffs[n - 1 - j] = m / w;
    }
    return ode;
}

} // namespace pvkit
