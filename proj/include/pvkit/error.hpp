#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pvkit {

enum class errc {
    division_by_zero,
    not_applicable,
    shape_error,
    incomplete_assignment,
    not_fundamental,
    pole_at_base_point,
    not_in_catalog,
    non_member_sample,
    singular_transform,
    degenerate_point,
    syntax_error,
    mixed_arity,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_applicable: return "NotApplicable";
    case errc::shape_error: return "ShapeError";
    case errc::incomplete_assignment: return "IncompleteAssignment";
    case errc::not_fundamental: return "NotFundamental";
    case errc::pole_at_base_point: return "PoleAtBasePoint";
    case errc::not_in_catalog: return "NotInCatalog";
    case errc::non_member_sample: return "NonMemberSample";
    case errc::singular_transform: return "SingularTransform";
    case errc::degenerate_point: return "DegeneratePoint";
    case errc::syntax_error: return "SyntaxError";
    case errc::mixed_arity: return "MixedArity";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the errc kinds.
class error : public std::runtime_error {
public:
    error(errc kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

/// Parse failure; column is 1-based.
class syntax_error : public error {
public:
    syntax_error(std::size_t column, const std::string &what)
        : error(errc::syntax_error, what + " at column " + std::to_string(column)), column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace pvkit
