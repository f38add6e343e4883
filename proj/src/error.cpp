#include "softcat/error.hpp"

namespace softcat
{

std::string_view to_string( error_kind kind )
{
    switch ( kind )
    {
    case error_kind::duplicate_element: return "DuplicateElement";
    case error_kind::duplicate_parameter: return "DuplicateParameter";
    case error_kind::element_not_in_universe: return "ElementNotInUniverse";
    case error_kind::universe_too_large: return "UniverseTooLarge";
    case error_kind::universe_mismatch: return "UniverseMismatch";
    case error_kind::map_not_total: return "MapNotTotal";
    case error_kind::map_range_invalid: return "MapRangeInvalid";
    case error_kind::soft_condition_violated: return "SoftConditionViolated";
    case error_kind::composition_mismatch: return "CompositionMismatch";
    case error_kind::not_an_isomorphism: return "NotAnIsomorphism";
    case error_kind::already_epi: return "AlreadyEpi";
    case error_kind::already_mono: return "AlreadyMono";
    case error_kind::not_a_separator: return "NotASeparator";
    case error_kind::not_a_coseparator: return "NotACoseparator";
    case error_kind::morphisms_equal: return "MorphismsEqual";
    case error_kind::incompatible_pair: return "IncompatiblePair";
    case error_kind::syntax_error: return "SyntaxError";
    case error_kind::unknown_reference: return "UnknownReference";
    case error_kind::duplicate_name: return "DuplicateName";
    }
    return "Unknown";
}

namespace
{

std::string format_message( error_kind kind, const std::string& detail,
                            std::optional< std::size_t > line )
{
    std::string msg;
    if ( line )
        msg += "line " + std::to_string( *line ) + ": ";
    msg += to_string( kind );
    if ( !detail.empty() )
        msg += ": " + detail;
    return msg;
}

} // namespace

error::error( error_kind kind, const std::string& detail )
    : std::runtime_error{ format_message( kind, detail, std::nullopt ) }, _kind{ kind } {}

error::error( error_kind kind, const std::string& detail, std::size_t line )
    : std::runtime_error{ format_message( kind, detail, line ) }, _kind{ kind }, _line{ line } {}

} // namespace softcat
