#include "softcat/hom.hpp"

#include "softcat/error.hpp"

#include <limits>
#include <stdexcept>

namespace softcat
{

namespace
{

void require_shared_universe( const soft_set& source, const soft_set& target )
{
    if ( !same_universe( source, target ) )
        throw error{ error_kind::universe_mismatch,
                     source.name() + " and " + target.name() + " live over different universes" };
}

// admissible[a] lists, in target order, the b with F(a) ⊆ G(b)
std::vector< std::vector< std::size_t > > admissible_targets( const soft_set& source,
                                                              const soft_set& target )
{
    std::vector< std::vector< std::size_t > > admissible( source.size() );
    for ( std::size_t a = 0; a < source.size(); ++a )
        for ( std::size_t b = 0; b < target.size(); ++b )
            if ( source.image( a ).is_subset_of( target.image( b ) ) )
                admissible[ a ].push_back( b );
    return admissible;
}

std::uint64_t checked_mul( std::uint64_t x, std::uint64_t y )
{
    if ( y != 0 && x > std::numeric_limits< std::uint64_t >::max() / y )
        throw std::length_error{ "count overflows 64 bits" };
    return x * y;
}

} // namespace

std::vector< soft_morphism > enumerate_hom( const soft_set& source, const soft_set& target )
{
    require_shared_universe( source, target );
    const auto admissible = admissible_targets( source, target );

    std::vector< soft_morphism > result;
    for ( const auto& choices : admissible )
        if ( choices.empty() )
            return result;

    // odometer over admissible choices, last source parameter varying fastest
    std::vector< std::size_t > digit( source.size(), 0 );
    while ( true )
    {
        param_map map( source.size() );
        for ( std::size_t a = 0; a < map.size(); ++a )
            map[ a ] = admissible[ a ][ digit[ a ] ];
        result.push_back( make_morphism( source, std::move( map ), target ) );

        std::size_t pos = digit.size();
        while ( pos > 0 )
        {
            --pos;
            if ( ++digit[ pos ] < admissible[ pos ].size() )
                break;
            digit[ pos ] = 0;
            if ( pos == 0 )
                return result;
        }
        if ( digit.empty() )
            return result;
    }
}

std::uint64_t hom_count( const soft_set& source, const soft_set& target )
{
    require_shared_universe( source, target );
    if ( source.empty() )
        return 1;
    if ( is_null( source ) )
    {
        std::uint64_t count = 1;
        for ( std::size_t a = 0; a < source.size(); ++a )
            count = checked_mul( count, target.size() );
        return count;
    }

    std::uint64_t count = 1;
    for ( const auto& choices : admissible_targets( source, target ) )
        count = checked_mul( count, choices.size() );
    return count;
}

bool lives_over( const soft_set& s, const object_family& family )
{
    return s.universe_ptr() == family.universe_ptr() || s.over() == family.over();
}

std::uint64_t family_size( std::size_t universe_size, std::size_t max_params )
{
    if ( universe_size >= 64 && max_params > 0 )
        throw std::length_error{ "object family too large" };
    const std::uint64_t subsets = std::uint64_t{ 1 } << universe_size;

    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for ( std::size_t k = 0; k <= max_params; ++k )
    {
        if ( total > std::numeric_limits< std::uint64_t >::max() - layer )
            throw std::length_error{ "object family too large" };
        total += layer;
        if ( k < max_params )
            layer = checked_mul( layer, subsets );
    }
    return total;
}

object_family generate_object_family( std::shared_ptr< const universe > over,
                                      std::size_t max_params )
{
    const std::uint64_t total = family_size( over->size(), max_params );
    if ( total > std::numeric_limits< std::size_t >::max() )
        throw std::length_error{ "object family too large" };
    const std::uint64_t subsets = std::uint64_t{ 1 } << over->size();

    std::vector< soft_set > members;
    members.reserve( static_cast< std::size_t >( total ) );

    for ( std::size_t k = 0; k <= max_params; ++k )
    {
        std::vector< std::string > params;
        for ( std::size_t i = 1; i <= k; ++i )
            params.push_back( "p" + std::to_string( i ) );

        // image tuples as base-2^|U| digits, first parameter most significant
        std::vector< std::uint64_t > digit( k, 0 );
        while ( true )
        {
            assignment_list assignments;
            for ( std::size_t i = 0; i < k; ++i )
                assignments.emplace_back( params[ i ], subset{ digit[ i ] } );
            members.push_back( make_soft_set( over, "s" + std::to_string( members.size() ),
                                              std::move( assignments ) ) );

            std::size_t pos = k;
            bool carried_out = true;
            while ( pos > 0 )
            {
                --pos;
                if ( ++digit[ pos ] < subsets )
                {
                    carried_out = false;
                    break;
                }
                digit[ pos ] = 0;
            }
            if ( carried_out )
                break;
        }
    }

    return object_family{ std::move( over ), max_params, std::move( members ) };
}

} // namespace softcat
