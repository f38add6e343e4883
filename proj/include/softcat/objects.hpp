#pragma once

#include "softcat/hom.hpp"

#include <optional>
#include <string>
#include <utility>

namespace softcat
{

struct object_classification
{
    soft_set subject;
    bool is_initial = false;
    bool is_terminal = false;
    bool is_zero = false;
    bool is_separator = false;
    bool is_coseparator = false;
    /// Present iff is_coseparator; names (c1, c2) with H(c1) = H(c2) = U.
    std::optional< std::pair< std::string, std::string > > coseparator_witness_params;
};

// Characterizations.

/// A = ∅.
[[nodiscard]] bool is_initial( const soft_set& s );
/// Absolute with exactly one parameter.
[[nodiscard]] bool is_terminal( const soft_set& s );
/// Always false: initial needs A = ∅, terminal needs |A| = 1.
[[nodiscard]] bool is_zero( const soft_set& s );
/// Null with A ≠ ∅.
[[nodiscard]] bool is_separator( const soft_set& s );
/// Two distinct parameters with full-universe images.
[[nodiscard]] bool is_coseparator( const soft_set& s );

/// Indices of the first pair (c1 < c2 in declared order) with
/// H(c1) = H(c2) = U, if any.
[[nodiscard]] std::optional< std::pair< std::size_t, std::size_t > >
coseparator_pair( const soft_set& s );

[[nodiscard]] object_classification classify_object( const soft_set& s );

// Definitional oracles, quantified over the members of a family. All throw
// universe_mismatch when s does not live over the family's universe.

[[nodiscard]] bool oracle_is_initial( const soft_set& s, const object_family& family );
[[nodiscard]] bool oracle_is_terminal( const soft_set& s, const object_family& family );
[[nodiscard]] bool oracle_is_zero( const soft_set& s, const object_family& family );
[[nodiscard]] bool oracle_is_separator( const soft_set& s, const object_family& family );
[[nodiscard]] bool oracle_is_coseparator( const soft_set& s, const object_family& family );

} // namespace softcat
