#include "softcat/soft_set.hpp"

#include "softcat/error.hpp"

#include <algorithm>

namespace softcat
{

soft_set::soft_set( std::shared_ptr< const universe > over, std::string name,
                    std::vector< std::pair< std::string, subset > > assignments )
{
    data d;
    d.name = std::move( name );
    d.over = over ? std::move( over ) : std::make_shared< const universe >();
    d.params.reserve( assignments.size() );
    d.images.reserve( assignments.size() );

    for ( auto& [ param, image ] : assignments )
    {
        if ( std::find( d.params.begin(), d.params.end(), param ) != d.params.end() )
            throw error{ error_kind::duplicate_parameter, param + " in soft set " + d.name };
        if ( !d.over->owns( image ) )
            throw error{ error_kind::element_not_in_universe,
                         "image of " + param + " in soft set " + d.name };
        d.params.push_back( std::move( param ) );
        d.images.push_back( image );
    }

    _data = std::make_shared< const data >( std::move( d ) );
}

std::optional< std::size_t > soft_set::param_index( const std::string& param ) const
{
    const auto& ps = _data->params;
    auto it = std::find( ps.begin(), ps.end(), param );
    if ( it == ps.end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - ps.begin() );
}

soft_set soft_set::renamed( std::string name ) const
{
    soft_set copy = *this;
    auto d = *_data;
    d.name = std::move( name );
    copy._data = std::make_shared< const data >( std::move( d ) );
    return copy;
}

bool operator==( const soft_set& lhs, const soft_set& rhs )
{
    if ( lhs._data == rhs._data )
        return true;
    const auto& l = *lhs._data;
    const auto& r = *rhs._data;
    return l.name == r.name && l.params == r.params && l.images == r.images
        && ( l.over == r.over || *l.over == *r.over );
}

soft_set make_soft_set( std::shared_ptr< const universe > over, std::string name,
                        assignment_list assignments )
{
    return soft_set{ std::move( over ), std::move( name ), std::move( assignments ) };
}

soft_set
make_soft_set( std::shared_ptr< const universe > over, std::string name,
               const std::vector< std::pair< std::string, std::vector< std::string > > >& assignments )
{
    assignment_list resolved;
    resolved.reserve( assignments.size() );
    for ( const auto& [ param, elements ] : assignments )
        resolved.emplace_back( param, over->subset_of( elements ) );
    return soft_set{ std::move( over ), std::move( name ), std::move( resolved ) };
}

bool is_null( const soft_set& s )
{
    return std::all_of( s.images().begin(), s.images().end(),
                        []( subset img ) { return img.empty(); } );
}

bool is_absolute( const soft_set& s )
{
    const subset full = s.over().full();
    return std::all_of( s.images().begin(), s.images().end(),
                        [ full ]( subset img ) { return img == full; } );
}

bool same_universe( const soft_set& lhs, const soft_set& rhs )
{
    return lhs.universe_ptr() == rhs.universe_ptr() || lhs.over() == rhs.over();
}

} // namespace softcat
