#include "softcat/morphisms.hpp"

#include "softcat/error.hpp"
#include "softcat/objects.hpp"

#include <algorithm>

namespace softcat
{

bool is_epi( const soft_morphism& m )
{
    std::vector< bool > hit( m.target().size(), false );
    for ( auto b : m.map() )
        hit[ b ] = true;
    return std::all_of( hit.begin(), hit.end(), []( bool h ) { return h; } );
}

bool is_mono( const soft_morphism& m )
{
    std::vector< bool > hit( m.target().size(), false );
    for ( auto b : m.map() )
    {
        if ( hit[ b ] )
            return false;
        hit[ b ] = true;
    }
    return true;
}

bool is_bimorphism( const soft_morphism& m ) { return is_epi( m ) && is_mono( m ); }

bool is_iso( const soft_morphism& m )
{
    if ( !is_bimorphism( m ) )
        return false;
    for ( std::size_t a = 0; a < m.source().size(); ++a )
        if ( m.source().image( a ) != m.target().image( m( a ) ) )
            return false;
    return true;
}

morphism_classification classify_morphism( const soft_morphism& m )
{
    morphism_classification result{ .subject = m };
    result.is_epi = is_epi( m );
    result.is_mono = is_mono( m );
    result.is_bimorphism = result.is_epi && result.is_mono;
    result.is_iso = is_iso( m );
    return result;
}

soft_morphism invert( const soft_morphism& m )
{
    if ( !is_bimorphism( m ) )
        throw error{ error_kind::not_an_isomorphism,
                     std::string{ "parameter map is not " }
                         + ( is_mono( m ) ? "surjective" : "injective" ) };

    const auto& source = m.source();
    const auto& target = m.target();
    param_map inverse( target.size() );
    for ( std::size_t a = 0; a < source.size(); ++a )
    {
        if ( source.image( a ) != target.image( m( a ) ) )
            throw error{ error_kind::not_an_isomorphism,
                         "image of " + source.params()[ a ] + " differs from image of "
                             + target.params()[ m( a ) ] };
        inverse[ m( a ) ] = a;
    }
    return make_morphism( target, std::move( inverse ), source );
}

cancellation_counterexample epi_counterexample( const soft_morphism& m )
{
    if ( is_epi( m ) )
        throw error{ error_kind::already_epi, "parameter map is surjective" };

    const auto& over = m.target().universe_ptr();
    const subset full = m.target().over().full();
    soft_set probe = make_soft_set( over, "H", { { "0", full }, { "1", full } } );

    std::vector< bool > in_image( m.target().size(), false );
    for ( auto b : m.map() )
        in_image[ b ] = true;

    param_map constant( m.target().size(), 0 );
    param_map split( m.target().size() );
    for ( std::size_t b = 0; b < split.size(); ++b )
        split[ b ] = in_image[ b ] ? 0 : 1;

    return { make_morphism( m.target(), std::move( constant ), probe ),
             make_morphism( m.target(), std::move( split ), probe ), probe };
}

cancellation_counterexample mono_counterexample( const soft_morphism& m )
{
    const auto& source = m.source();
    for ( std::size_t a1 = 0; a1 < source.size(); ++a1 )
        for ( std::size_t a2 = a1 + 1; a2 < source.size(); ++a2 )
        {
            if ( m( a1 ) != m( a2 ) )
                continue;
            soft_set probe = make_soft_set( source.universe_ptr(), "H", { { "c", subset{} } } );
            return { make_morphism( probe, { a1 }, source ),
                     make_morphism( probe, { a2 }, source ), probe };
        }
    throw error{ error_kind::already_mono, "parameter map is injective" };
}

namespace
{

// Index of the first source parameter where two parallel morphisms differ.
std::size_t first_difference( const soft_morphism& alpha, const soft_morphism& beta )
{
    if ( !( alpha.source() == beta.source() ) || !( alpha.target() == beta.target() ) )
        throw error{ error_kind::incompatible_pair, "morphisms are not parallel" };
    for ( std::size_t a = 0; a < alpha.map().size(); ++a )
        if ( alpha( a ) != beta( a ) )
            return a;
    throw error{ error_kind::morphisms_equal, "" };
}

void require_universe( const soft_set& object, const soft_morphism& alpha )
{
    if ( !same_universe( object, alpha.source() ) )
        throw error{ error_kind::universe_mismatch,
                     object.name() + " and " + alpha.source().name()
                         + " live over different universes" };
}

} // namespace

soft_morphism separator_witness( const soft_set& sep, const soft_morphism& alpha,
                                 const soft_morphism& beta )
{
    require_universe( sep, alpha );
    if ( !is_separator( sep ) )
        throw error{ error_kind::not_a_separator, sep.name() };
    const std::size_t a = first_difference( alpha, beta );
    return make_morphism( sep, param_map( sep.size(), a ), alpha.source() );
}

soft_morphism coseparator_witness( const soft_set& cosep, const soft_morphism& alpha,
                                   const soft_morphism& beta )
{
    require_universe( cosep, alpha );
    const auto pair = coseparator_pair( cosep );
    if ( !pair )
        throw error{ error_kind::not_a_coseparator, cosep.name() };
    const std::size_t a1 = first_difference( alpha, beta );

    const auto& target = alpha.target();
    param_map map( target.size(), pair->second );
    map[ alpha( a1 ) ] = pair->first;
    return make_morphism( target, std::move( map ), cosep );
}

namespace
{

void require_family_universe( const soft_set& s, const object_family& family )
{
    if ( !lives_over( s, family ) )
        throw error{ error_kind::universe_mismatch,
                     s.name() + " does not live over the family's universe" };
}

} // namespace

bool oracle_is_epi( const soft_morphism& m, const object_family& family )
{
    require_family_universe( m.source(), family );
    for ( const auto& probe : family )
    {
        const auto pairs = enumerate_hom( m.target(), probe );
        for ( std::size_t i = 0; i < pairs.size(); ++i )
            for ( std::size_t j = i + 1; j < pairs.size(); ++j )
                if ( compose( pairs[ i ], m ) == compose( pairs[ j ], m ) )
                    return false;
    }
    return true;
}

bool oracle_is_mono( const soft_morphism& m, const object_family& family )
{
    require_family_universe( m.source(), family );
    for ( const auto& probe : family )
    {
        const auto pairs = enumerate_hom( probe, m.source() );
        for ( std::size_t i = 0; i < pairs.size(); ++i )
            for ( std::size_t j = i + 1; j < pairs.size(); ++j )
                if ( compose( m, pairs[ i ] ) == compose( m, pairs[ j ] ) )
                    return false;
    }
    return true;
}

} // namespace softcat
