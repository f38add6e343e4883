#include "softcat/morphism.hpp"

#include "softcat/error.hpp"

#include <numeric>

namespace softcat
{

soft_morphism make_morphism( soft_set source, param_map map, soft_set target )
{
    if ( !same_universe( source, target ) )
        throw error{ error_kind::universe_mismatch,
                     source.name() + " and " + target.name() + " live over different universes" };

    if ( map.size() != source.size() )
        throw error{ error_kind::map_not_total,
                     "map has " + std::to_string( map.size() ) + " entries, source "
                         + source.name() + " has " + std::to_string( source.size() )
                         + " parameters" };

    for ( std::size_t a = 0; a < map.size(); ++a )
        if ( map[ a ] >= target.size() )
            throw error{ error_kind::map_range_invalid,
                         source.params()[ a ] + " is not sent to a parameter of " + target.name() };

    for ( std::size_t a = 0; a < map.size(); ++a )
        if ( !source.image( a ).is_subset_of( target.image( map[ a ] ) ) )
            throw error{ error_kind::soft_condition_violated,
                         source.params()[ a ] + ": " + source.name() + "(" + source.params()[ a ]
                             + ") is not contained in " + target.name() + "("
                             + target.params()[ map[ a ] ] + ")" };

    return soft_morphism{ std::move( source ), std::move( map ), std::move( target ) };
}

soft_morphism make_morphism( soft_set source,
                             std::span< const std::pair< std::string, std::string > > map,
                             soft_set target )
{
    constexpr auto unset = static_cast< std::size_t >( -1 );
    param_map indices( source.size(), unset );

    for ( const auto& [ from, to ] : map )
    {
        auto a = source.param_index( from );
        if ( !a )
            throw error{ error_kind::map_not_total,
                         from + " is not a parameter of " + source.name() };
        if ( indices[ *a ] != unset )
            throw error{ error_kind::map_not_total, from + " is mapped more than once" };
        auto b = target.param_index( to );
        if ( !b )
            throw error{ error_kind::map_range_invalid,
                         to + " is not a parameter of " + target.name() };
        indices[ *a ] = *b;
    }

    for ( std::size_t a = 0; a < indices.size(); ++a )
        if ( indices[ a ] == unset )
            throw error{ error_kind::map_not_total, source.params()[ a ] + " is not mapped" };

    return make_morphism( std::move( source ), std::move( indices ), std::move( target ) );
}

soft_morphism identity( const soft_set& s )
{
    param_map map( s.size() );
    std::iota( map.begin(), map.end(), std::size_t{ 0 } );
    return make_morphism( s, std::move( map ), s );
}

soft_morphism compose( const soft_morphism& g, const soft_morphism& f )
{
    if ( !( f.target() == g.source() ) )
        throw error{ error_kind::composition_mismatch,
                     "target " + f.target().name() + " differs from source " + g.source().name() };

    param_map map( f.map().size() );
    for ( std::size_t a = 0; a < map.size(); ++a )
        map[ a ] = g( f( a ) );
    return make_morphism( f.source(), std::move( map ), g.target() );
}

bool morphisms_equal( const soft_morphism& f, const soft_morphism& g ) { return f == g; }

bool satisfies_soft_condition( const soft_morphism& m )
{
    if ( m.map().size() != m.source().size() )
        return false;
    for ( std::size_t a = 0; a < m.map().size(); ++a )
        if ( m( a ) >= m.target().size()
             || !m.source().image( a ).is_subset_of( m.target().image( m( a ) ) ) )
            return false;
    return true;
}

} // namespace softcat
