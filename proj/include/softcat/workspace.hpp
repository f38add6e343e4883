#pragma once

#include "softcat/morphism.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace softcat
{

struct named_morphism
{
    std::string name;
    soft_morphism morphism;

    friend bool operator==( const named_morphism&, const named_morphism& ) = default;
};

/// A universe plus the soft sets and morphisms defined over it, in
/// definition order. Names are unique within each collection.
class workspace
{
    std::shared_ptr< const universe > _universe;
    std::vector< soft_set > _soft_sets;
    std::vector< named_morphism > _morphisms;

public:
    explicit workspace( std::shared_ptr< const universe > over ) : _universe{ std::move( over ) } {}

    [[nodiscard]] const universe& over() const { return *_universe; }
    [[nodiscard]] const std::shared_ptr< const universe >& universe_ptr() const { return _universe; }
    [[nodiscard]] const std::vector< soft_set >& soft_sets() const { return _soft_sets; }
    [[nodiscard]] const std::vector< named_morphism >& morphisms() const { return _morphisms; }

    [[nodiscard]] const soft_set* find_soft_set( std::string_view name ) const;
    [[nodiscard]] const soft_morphism* find_morphism( std::string_view name ) const;

    /// Throw duplicate_name or universe_mismatch.
    void add( soft_set s );
    void add( std::string name, soft_morphism m );

    friend bool operator==( const workspace& lhs, const workspace& rhs );
};

/// Parses the line-oriented format:
///
///     # comment
///     universe u1 u2
///     softset F
///     param a1 = u1
///     param a2 =
///     end
///     morphism f : F -> G
///     map a1 -> b1
///     end
///
/// Errors carry the offending line number.
[[nodiscard]] workspace parse_workspace( std::string_view text );
[[nodiscard]] workspace parse_workspace( std::istream& in );

/// Canonical form: universe line, soft sets then morphisms in definition
/// order, params in declared order, subset members in universe order.
[[nodiscard]] std::string print_workspace( const workspace& w );

void print_soft_set( std::ostream& out, const soft_set& s );
void print_morphism( std::ostream& out, std::string_view name, const soft_morphism& m );

} // namespace softcat
