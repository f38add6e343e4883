#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace softcat
{

enum class error_kind
{
    duplicate_element,
    duplicate_parameter,
    element_not_in_universe,
    universe_too_large,
    universe_mismatch,
    map_not_total,
    map_range_invalid,
    soft_condition_violated,
    composition_mismatch,
    not_an_isomorphism,
    already_epi,
    already_mono,
    not_a_separator,
    not_a_coseparator,
    morphisms_equal,
    incompatible_pair,
    syntax_error,
    unknown_reference,
    duplicate_name,
};

/// Stable CamelCase name of an error kind, used in CLI diagnostics.
[[nodiscard]] std::string_view to_string( error_kind kind );

class error : public std::runtime_error
{
    error_kind _kind;
    std::optional< std::size_t > _line;

public:
    error( error_kind kind, const std::string& detail );
    error( error_kind kind, const std::string& detail, std::size_t line );

    [[nodiscard]] error_kind kind() const { return _kind; }
    [[nodiscard]] std::optional< std::size_t > line() const { return _line; }
};

} // namespace softcat
