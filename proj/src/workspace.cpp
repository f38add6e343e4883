#include "softcat/workspace.hpp"

#include "softcat/error.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

namespace softcat
{

const soft_set* workspace::find_soft_set( std::string_view name ) const
{
    auto it = std::find_if( _soft_sets.begin(), _soft_sets.end(),
                            [ name ]( const soft_set& s ) { return s.name() == name; } );
    return it == _soft_sets.end() ? nullptr : &*it;
}

const soft_morphism* workspace::find_morphism( std::string_view name ) const
{
    auto it = std::find_if( _morphisms.begin(), _morphisms.end(),
                            [ name ]( const named_morphism& m ) { return m.name == name; } );
    return it == _morphisms.end() ? nullptr : &it->morphism;
}

void workspace::add( soft_set s )
{
    if ( find_soft_set( s.name() ) )
        throw error{ error_kind::duplicate_name, "soft set " + s.name() };
    if ( !( s.universe_ptr() == _universe || s.over() == *_universe ) )
        throw error{ error_kind::universe_mismatch, s.name() };
    _soft_sets.push_back( std::move( s ) );
}

void workspace::add( std::string name, soft_morphism m )
{
    if ( find_morphism( name ) )
        throw error{ error_kind::duplicate_name, "morphism " + name };
    if ( !( m.source().universe_ptr() == _universe || m.source().over() == *_universe ) )
        throw error{ error_kind::universe_mismatch, name };
    _morphisms.push_back( { std::move( name ), std::move( m ) } );
}

bool operator==( const workspace& lhs, const workspace& rhs )
{
    return *lhs._universe == *rhs._universe && lhs._soft_sets == rhs._soft_sets
        && lhs._morphisms == rhs._morphisms;
}

namespace
{

std::vector< std::string > tokenize( std::string_view line )
{
    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
        line = line.substr( 0, hash );
    std::istringstream in{ std::string{ line } };
    return { std::istream_iterator< std::string >{ in }, std::istream_iterator< std::string >{} };
}

[[noreturn]] void syntax_error( std::size_t line, const std::string& detail )
{
    throw error{ error_kind::syntax_error, detail, line };
}

struct softset_block
{
    std::string name;
    std::size_t line = 0;
    std::vector< std::pair< std::string, std::vector< std::string > > > assignments;
};

struct morphism_block
{
    std::string name;
    std::size_t line = 0;
    soft_set source;
    soft_set target;
    std::vector< std::pair< std::string, std::string > > map;
    std::map< std::string, std::size_t > map_lines;
};

class parser
{
    std::optional< workspace > _ws;
    std::optional< softset_block > _softset;
    std::optional< morphism_block > _morphism;

public:
    void line( std::size_t number, const std::vector< std::string >& tokens )
    {
        const auto& keyword = tokens.front();

        if ( !_ws )
        {
            if ( keyword != "universe" )
                syntax_error( number, "expected 'universe' as the first definition" );
            try
            {
                _ws.emplace( std::make_shared< const universe >(
                    std::vector< std::string >( tokens.begin() + 1, tokens.end() ) ) );
            }
            catch ( const error& e )
            {
                throw error{ e.kind(), strip_kind( e ), number };
            }
            return;
        }

        if ( _softset )
            softset_line( number, tokens );
        else if ( _morphism )
            morphism_line( number, tokens );
        else if ( keyword == "universe" )
            syntax_error( number, "universe may only be declared once" );
        else if ( keyword == "softset" )
            open_softset( number, tokens );
        else if ( keyword == "morphism" )
            open_morphism( number, tokens );
        else
            syntax_error( number, "unexpected '" + keyword + "'" );
    }

    workspace finish( std::size_t last_line )
    {
        if ( !_ws )
            syntax_error( std::max< std::size_t >( last_line, 1 ), "missing universe declaration" );
        if ( _softset )
            syntax_error( last_line, "softset " + _softset->name + " is missing 'end'" );
        if ( _morphism )
            syntax_error( last_line, "morphism " + _morphism->name + " is missing 'end'" );
        return std::move( *_ws );
    }

private:
    static std::string strip_kind( const error& e )
    {
        std::string what = e.what();
        const std::string prefix = std::string{ to_string( e.kind() ) } + ": ";
        if ( what.starts_with( prefix ) )
            return what.substr( prefix.size() );
        return what == to_string( e.kind() ) ? std::string{} : what;
    }

    void open_softset( std::size_t number, const std::vector< std::string >& tokens )
    {
        if ( tokens.size() != 2 )
            syntax_error( number, "expected 'softset <name>'" );
        if ( _ws->find_soft_set( tokens[ 1 ] ) )
            throw error{ error_kind::duplicate_name, "soft set " + tokens[ 1 ], number };
        _softset = softset_block{ tokens[ 1 ], number, {} };
    }

    void softset_line( std::size_t number, const std::vector< std::string >& tokens )
    {
        if ( tokens.front() == "end" )
        {
            if ( tokens.size() != 1 )
                syntax_error( number, "expected 'end'" );
            auto block = std::move( *_softset );
            _softset.reset();
            _ws->add( make_soft_set( _ws->universe_ptr(), block.name, block.assignments ) );
            return;
        }
        if ( tokens.front() != "param" || tokens.size() < 3 || tokens[ 2 ] != "=" )
            syntax_error( number, "expected 'param <name> = <element>...' or 'end'" );

        const auto& param = tokens[ 1 ];
        for ( const auto& [ existing, _ ] : _softset->assignments )
            if ( existing == param )
                throw error{ error_kind::duplicate_parameter,
                             param + " in soft set " + _softset->name, number };

        std::vector< std::string > elements( tokens.begin() + 3, tokens.end() );
        for ( const auto& element : elements )
            if ( !_ws->over().index_of( element ) )
                throw error{ error_kind::element_not_in_universe, element, number };
        _softset->assignments.emplace_back( param, std::move( elements ) );
    }

    void open_morphism( std::size_t number, const std::vector< std::string >& tokens )
    {
        if ( tokens.size() != 6 || tokens[ 2 ] != ":" || tokens[ 4 ] != "->" )
            syntax_error( number, "expected 'morphism <name> : <source> -> <target>'" );
        if ( _ws->find_morphism( tokens[ 1 ] ) )
            throw error{ error_kind::duplicate_name, "morphism " + tokens[ 1 ], number };
        const soft_set* source = _ws->find_soft_set( tokens[ 3 ] );
        if ( !source )
            throw error{ error_kind::unknown_reference, "soft set " + tokens[ 3 ], number };
        const soft_set* target = _ws->find_soft_set( tokens[ 5 ] );
        if ( !target )
            throw error{ error_kind::unknown_reference, "soft set " + tokens[ 5 ], number };
        _morphism = morphism_block{ tokens[ 1 ], number, *source, *target, {}, {} };
    }

    void morphism_line( std::size_t number, const std::vector< std::string >& tokens )
    {
        auto& block = *_morphism;
        if ( tokens.front() == "end" )
        {
            if ( tokens.size() != 1 )
                syntax_error( number, "expected 'end'" );
            close_morphism( number );
            return;
        }
        if ( tokens.front() != "map" || tokens.size() != 4 || tokens[ 2 ] != "->" )
            syntax_error( number, "expected 'map <param> -> <param>' or 'end'" );

        const auto& from = tokens[ 1 ];
        const auto& to = tokens[ 3 ];
        if ( !block.source.param_index( from ) )
            throw error{ error_kind::unknown_reference,
                         from + " is not a parameter of " + block.source.name(), number };
        if ( block.map_lines.contains( from ) )
            throw error{ error_kind::map_not_total, from + " is mapped more than once", number };
        if ( !block.target.param_index( to ) )
            throw error{ error_kind::map_range_invalid,
                         to + " is not a parameter of " + block.target.name(), number };
        block.map.emplace_back( from, to );
        block.map_lines.emplace( from, number );
    }

    void close_morphism( std::size_t number )
    {
        auto block = std::move( *_morphism );
        _morphism.reset();
        try
        {
            _ws->add( block.name, make_morphism( block.source, block.map, block.target ) );
        }
        catch ( const error& e )
        {
            std::size_t line = number;
            if ( e.kind() == error_kind::soft_condition_violated )
            {
                // report at the map line of the first offending parameter
                const auto& source = block.source;
                for ( std::size_t a = 0; a < source.size(); ++a )
                {
                    const auto& param = source.params()[ a ];
                    auto it = std::find_if( block.map.begin(), block.map.end(),
                                            [ & ]( const auto& entry ) { return entry.first == param; } );
                    auto b = block.target.param_index( it->second );
                    if ( !source.image( a ).is_subset_of( block.target.image( *b ) ) )
                    {
                        line = block.map_lines.at( param );
                        break;
                    }
                }
            }
            throw error{ e.kind(), strip_kind( e ), line };
        }
    }
};

} // namespace

workspace parse_workspace( std::string_view text )
{
    parser p;
    std::size_t number = 0;
    std::size_t last_content = 0;
    std::size_t start = 0;
    while ( start <= text.size() )
    {
        auto end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        auto raw = text.substr( start, end - start );
        if ( !raw.empty() && raw.back() == '\r' )
            raw.remove_suffix( 1 );
        ++number;
        if ( auto tokens = tokenize( raw ); !tokens.empty() )
        {
            p.line( number, tokens );
            last_content = number;
        }
        if ( end == text.size() )
            break;
        start = end + 1;
    }
    return p.finish( last_content );
}

workspace parse_workspace( std::istream& in )
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_workspace( buffer.str() );
}

void print_soft_set( std::ostream& out, const soft_set& s )
{
    out << "softset " << s.name() << '\n';
    for ( std::size_t a = 0; a < s.size(); ++a )
    {
        out << "param " << s.params()[ a ] << " =";
        for ( const auto& element : s.over().names_of( s.image( a ) ) )
            out << ' ' << element;
        out << '\n';
    }
    out << "end\n";
}

void print_morphism( std::ostream& out, std::string_view name, const soft_morphism& m )
{
    out << "morphism " << name << " : " << m.source().name() << " -> " << m.target().name()
        << '\n';
    for ( std::size_t a = 0; a < m.source().size(); ++a )
        out << "map " << m.source().params()[ a ] << " -> " << m.target().params()[ m( a ) ]
            << '\n';
    out << "end\n";
}

std::string print_workspace( const workspace& w )
{
    std::ostringstream out;
    out << "universe";
    for ( const auto& element : w.over().elements() )
        out << ' ' << element;
    out << '\n';
    for ( const auto& s : w.soft_sets() )
    {
        out << '\n';
        print_soft_set( out, s );
    }
    for ( const auto& [ name, m ] : w.morphisms() )
    {
        out << '\n';
        print_morphism( out, name, m );
    }
    return out.str();
}

} // namespace softcat
