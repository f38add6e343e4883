#include "softcat/objects.hpp"

#include "softcat/error.hpp"

namespace softcat
{

bool is_initial( const soft_set& s ) { return s.empty(); }

bool is_terminal( const soft_set& s ) { return s.size() == 1 && is_absolute( s ); }

bool is_zero( const soft_set& s ) { return is_initial( s ) && is_terminal( s ); }

bool is_separator( const soft_set& s ) { return !s.empty() && is_null( s ); }

std::optional< std::pair< std::size_t, std::size_t > > coseparator_pair( const soft_set& s )
{
    const subset full = s.over().full();
    std::optional< std::size_t > first;
    for ( std::size_t c = 0; c < s.size(); ++c )
    {
        if ( s.image( c ) != full )
            continue;
        if ( first )
            return std::pair{ *first, c };
        first = c;
    }
    return std::nullopt;
}

bool is_coseparator( const soft_set& s ) { return coseparator_pair( s ).has_value(); }

object_classification classify_object( const soft_set& s )
{
    object_classification result{ .subject = s,
                                  .is_initial = is_initial( s ),
                                  .is_terminal = is_terminal( s ),
                                  .is_zero = is_zero( s ),
                                  .is_separator = is_separator( s ),
                                  .is_coseparator = false,
                                  .coseparator_witness_params = std::nullopt };
    if ( auto pair = coseparator_pair( s ) )
    {
        result.is_coseparator = true;
        result.coseparator_witness_params = std::pair{ s.params()[ pair->first ],
                                                       s.params()[ pair->second ] };
    }
    return result;
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

bool oracle_is_initial( const soft_set& s, const object_family& family )
{
    require_family_universe( s, family );
    for ( const auto& target : family )
        if ( enumerate_hom( s, target ).size() != 1 )
            return false;
    return true;
}

bool oracle_is_terminal( const soft_set& s, const object_family& family )
{
    require_family_universe( s, family );
    for ( const auto& source : family )
        if ( enumerate_hom( source, s ).size() != 1 )
            return false;
    return true;
}

bool oracle_is_zero( const soft_set& s, const object_family& family )
{
    return oracle_is_initial( s, family ) && oracle_is_terminal( s, family );
}

bool oracle_is_separator( const soft_set& s, const object_family& family )
{
    require_family_universe( s, family );
    for ( const auto& from : family )
    {
        const auto probes = enumerate_hom( s, from );
        for ( const auto& to : family )
        {
            const auto parallel = enumerate_hom( from, to );
            for ( std::size_t i = 0; i < parallel.size(); ++i )
                for ( std::size_t j = 0; j < parallel.size(); ++j )
                {
                    if ( i == j )
                        continue;
                    bool distinguished = false;
                    for ( const auto& h : probes )
                        if ( compose( parallel[ i ], h ) != compose( parallel[ j ], h ) )
                        {
                            distinguished = true;
                            break;
                        }
                    if ( !distinguished )
                        return false;
                }
        }
    }
    return true;
}

bool oracle_is_coseparator( const soft_set& s, const object_family& family )
{
    require_family_universe( s, family );
    for ( const auto& to : family )
    {
        const auto probes = enumerate_hom( to, s );
        for ( const auto& from : family )
        {
            const auto parallel = enumerate_hom( from, to );
            for ( std::size_t i = 0; i < parallel.size(); ++i )
                for ( std::size_t j = 0; j < parallel.size(); ++j )
                {
                    if ( i == j )
                        continue;
                    bool distinguished = false;
                    for ( const auto& k : probes )
                        if ( compose( k, parallel[ i ] ) != compose( k, parallel[ j ] ) )
                        {
                            distinguished = true;
                            break;
                        }
                    if ( !distinguished )
                        return false;
                }
        }
    }
    return true;
}

} // namespace softcat
