#pragma once

#include "softcat/soft_set.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace softcat
{

/// Parameter map of a morphism: entry i is the target parameter index that
/// source parameter i is sent to.
using param_map = std::vector< std::size_t >;

/// A soft morphism (F_A, α, G_B): α: A -> B with F(a) ⊆ G(α(a)) for all a.
/// Only constructible through validation, so every instance satisfies the
/// soft condition.
class soft_morphism
{
    soft_set _source;
    param_map _map;
    soft_set _target;

    soft_morphism( soft_set source, param_map map, soft_set target )
        : _source{ std::move( source ) }, _map{ std::move( map ) }, _target{ std::move( target ) } {}

    friend soft_morphism make_morphism( soft_set, param_map, soft_set );

public:
    [[nodiscard]] const soft_set& source() const { return _source; }
    [[nodiscard]] const soft_set& target() const { return _target; }
    [[nodiscard]] const param_map& map() const { return _map; }
    [[nodiscard]] std::size_t operator()( std::size_t source_param ) const { return _map[ source_param ]; }

    /// Equality of the full triple (source, map, target).
    friend bool operator==( const soft_morphism&, const soft_morphism& ) = default;
};

/// Errors: universe_mismatch, map_not_total (wrong arity), map_range_invalid
/// (index outside target params), soft_condition_violated (first offending
/// source parameter in declared order).
[[nodiscard]] soft_morphism make_morphism( soft_set source, param_map map, soft_set target );

/// Name-based variant: every source parameter must appear exactly once on the
/// left; right-hand names must be target parameters.
[[nodiscard]] soft_morphism
make_morphism( soft_set source, std::span< const std::pair< std::string, std::string > > map,
               soft_set target );

[[nodiscard]] soft_morphism identity( const soft_set& s );

/// g ∘ f. Throws composition_mismatch unless f.target() == g.source().
[[nodiscard]] soft_morphism compose( const soft_morphism& g, const soft_morphism& f );

[[nodiscard]] bool morphisms_equal( const soft_morphism& f, const soft_morphism& g );

/// Re-checks F(a) ⊆ G(α(a)) for every a.
[[nodiscard]] bool satisfies_soft_condition( const soft_morphism& m );

} // namespace softcat
