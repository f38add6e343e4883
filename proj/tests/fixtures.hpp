#pragma once

#include "softcat/error.hpp"
#include "softcat/hom.hpp"

#include <doctest.h>

#include <memory>
#include <string>
#include <vector>

namespace softcat::test
{

inline std::shared_ptr< const universe > u12()
{
    static const auto u = std::make_shared< const universe >( std::vector< std::string >{ "u1", "u2" } );
    return u;
}

using named_images = std::vector< std::pair< std::string, std::vector< std::string > > >;

inline soft_set sset( const std::string& name, const named_images& images,
                      std::shared_ptr< const universe > over = u12() )
{
    return make_soft_set( std::move( over ), name, images );
}

/// Null soft set over the given params.
inline soft_set null_set( const std::string& name, const std::vector< std::string >& params,
                          std::shared_ptr< const universe > over = u12() )
{
    named_images images;
    for ( const auto& p : params )
        images.emplace_back( p, std::vector< std::string >{} );
    return sset( name, images, std::move( over ) );
}

/// Absolute soft set over the given params.
inline soft_set absolute_set( const std::string& name, const std::vector< std::string >& params,
                              std::shared_ptr< const universe > over = u12() )
{
    named_images images;
    for ( const auto& p : params )
        images.emplace_back( p, over->elements() );
    return sset( name, images, std::move( over ) );
}

template < typename F >
error_kind kind_of( F&& f )
{
    try
    {
        f();
    }
    catch ( const error& e )
    {
        return e.kind();
    }
    FAIL( "expected a softcat::error" );
    return error_kind::syntax_error;
}

/// Independent hom oracle: tries all |B|^|A| functions and keeps those
/// satisfying the soft condition, in lexicographic order.
inline std::vector< param_map > brute_force_hom( const soft_set& source, const soft_set& target )
{
    std::vector< param_map > result;
    const std::size_t n = source.size();
    const std::size_t m = target.size();
    std::size_t total = 1;
    for ( std::size_t i = 0; i < n; ++i )
        total *= m;
    for ( std::size_t code = 0; code < total; ++code )
    {
        param_map map( n );
        std::size_t rest = code;
        for ( std::size_t i = n; i-- > 0; )
        {
            map[ i ] = rest % m;
            rest /= m;
        }
        bool ok = true;
        for ( std::size_t a = 0; a < n; ++a )
            ok = ok && ( source.image( a ).bits() & ~target.image( map[ a ] ).bits() ) == 0;
        if ( ok )
            result.push_back( map );
    }
    return result;
}

} // namespace softcat::test
