#include "softcat/universe.hpp"

#include "softcat/error.hpp"

#include <algorithm>

namespace softcat
{

universe::universe( std::vector< std::string > elements ) : _elements{ std::move( elements ) }
{
    if ( _elements.size() > max_size )
        throw error{ error_kind::universe_too_large,
                     std::to_string( _elements.size() ) + " elements, at most "
                         + std::to_string( max_size ) + " supported" };

    for ( auto it = _elements.begin(); it != _elements.end(); ++it )
        if ( std::find( _elements.begin(), it, *it ) != it )
            throw error{ error_kind::duplicate_element, *it };
}

std::optional< std::size_t > universe::index_of( const std::string& element ) const
{
    auto it = std::find( _elements.begin(), _elements.end(), element );
    if ( it == _elements.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - _elements.begin() );
}

subset universe::full() const
{
    if ( _elements.size() == 64 )
        return subset{ ~std::uint64_t{ 0 } };
    return subset{ ( std::uint64_t{ 1 } << _elements.size() ) - 1 };
}

subset universe::subset_of( std::span< const std::string > names ) const
{
    subset result;
    for ( const auto& name : names )
    {
        auto idx = index_of( name );
        if ( !idx )
            throw error{ error_kind::element_not_in_universe, name };
        result.insert( *idx );
    }
    return result;
}

std::vector< std::string > universe::names_of( subset s ) const
{
    std::vector< std::string > names;
    for ( std::size_t i = 0; i < _elements.size(); ++i )
        if ( s.contains( i ) )
            names.push_back( _elements[ i ] );
    return names;
}

} // namespace softcat
