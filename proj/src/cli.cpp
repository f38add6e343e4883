#include "softcat/cli.hpp"

#include "softcat/error.hpp"
#include "softcat/morphisms.hpp"
#include "softcat/objects.hpp"
#include "softcat/workspace.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace softcat::cli
{

namespace
{

struct usage_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Raised for well-formed requests whose answer is negative (e.g. asking for
// an epi counterexample of an epimorphism).
struct negative_result : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

const char* yes_no( bool b ) { return b ? "yes" : "no"; }

workspace load( const std::string& path, std::istream& in )
{
    if ( path == "-" )
        return parse_workspace( in );
    std::ifstream file{ path };
    if ( !file )
        throw usage_error{ "cannot open " + path };
    return parse_workspace( file );
}

const soft_set& require_soft_set( const workspace& w, const std::string& name )
{
    if ( const auto* s = w.find_soft_set( name ) )
        return *s;
    throw error{ error_kind::unknown_reference, "soft set " + name };
}

const soft_morphism& require_morphism( const workspace& w, const std::string& name )
{
    if ( const auto* m = w.find_morphism( name ) )
        return *m;
    throw error{ error_kind::unknown_reference, "morphism " + name };
}

std::string map_text( const soft_morphism& m )
{
    std::string text;
    for ( std::size_t a = 0; a < m.source().size(); ++a )
    {
        if ( a > 0 )
            text += ',';
        text += m.source().params()[ a ] + "->" + m.target().params()[ m( a ) ];
    }
    return text;
}

std::string join( const std::vector< std::string >& items, char sep )
{
    std::string text;
    for ( std::size_t i = 0; i < items.size(); ++i )
    {
        if ( i > 0 )
            text += sep;
        text += items[ i ];
    }
    return text;
}

void print_universe_line( std::ostream& out, const universe& u )
{
    out << "universe";
    for ( const auto& e : u.elements() )
        out << ' ' << e;
    out << '\n';
}

// Gives `s` a name not used by any of `taken`.
soft_set fresh_name( const soft_set& s, const std::vector< soft_set >& taken )
{
    auto clashes = [ & ]( const std::string& name ) {
        return std::any_of( taken.begin(), taken.end(),
                            [ & ]( const soft_set& t ) { return t.name() == name; } );
    };
    if ( !clashes( s.name() ) )
        return s;
    for ( int i = 1;; ++i )
    {
        auto name = s.name() + "_" + std::to_string( i );
        if ( !clashes( name ) )
            return s.renamed( name );
    }
}

soft_morphism retarget( const soft_morphism& m, const soft_set& source, const soft_set& target )
{
    return make_morphism( source, m.map(), target );
}

struct options
{
    bool porcelain = false;
    std::string file;
    std::string name;
    std::string morphism;
    std::string witness_kind;
    std::vector< std::string > pair;
    std::vector< std::string > hom_ends;
    bool hom_count = false;
    bool hom_list = false;
    bool canonical = false;
    std::size_t max_params = 2;
    std::optional< std::string > universe_list;
};

int cmd_validate( const options& opt, std::istream& in, std::ostream& out )
{
    const auto w = load( opt.file, in );
    if ( opt.canonical )
    {
        out << print_workspace( w );
        return success;
    }
    if ( opt.porcelain )
        out << "status=ok\n"
            << "universe_size=" << w.over().size() << '\n'
            << "softsets=" << w.soft_sets().size() << '\n'
            << "morphisms=" << w.morphisms().size() << '\n';
    else
        out << "ok: " << w.over().size() << " elements, " << w.soft_sets().size()
            << " soft sets, " << w.morphisms().size() << " morphisms\n";
    return success;
}

int cmd_classify_object( const options& opt, std::istream& in, std::ostream& out )
{
    const auto w = load( opt.file, in );
    const auto c = classify_object( require_soft_set( w, opt.name ) );
    const char* sep = opt.porcelain ? "=" : ": ";
    out << "object" << sep << c.subject.name() << '\n'
        << "initial" << sep << yes_no( c.is_initial ) << '\n'
        << "terminal" << sep << yes_no( c.is_terminal ) << '\n'
        << "zero" << sep << yes_no( c.is_zero ) << '\n'
        << "separator" << sep << yes_no( c.is_separator ) << '\n'
        << "coseparator" << sep << yes_no( c.is_coseparator );
    if ( c.coseparator_witness_params )
    {
        const auto& [ c1, c2 ] = *c.coseparator_witness_params;
        if ( opt.porcelain )
            out << "\ncoseparator_witness=" << c1 << ',' << c2;
        else
            out << " (" << c1 << ", " << c2 << ')';
    }
    out << '\n';
    return success;
}

int cmd_classify_morphism( const options& opt, std::istream& in, std::ostream& out )
{
    const auto w = load( opt.file, in );
    const auto c = classify_morphism( require_morphism( w, opt.morphism ) );
    const char* sep = opt.porcelain ? "=" : ": ";
    out << "morphism" << sep << opt.morphism << '\n'
        << "epi" << sep << yes_no( c.is_epi ) << '\n'
        << "mono" << sep << yes_no( c.is_mono ) << '\n'
        << "bimorphism" << sep << yes_no( c.is_bimorphism ) << '\n'
        << "iso" << sep << yes_no( c.is_iso ) << '\n';
    return success;
}

int cmd_hom( const options& opt, std::istream& in, std::ostream& out )
{
    if ( opt.hom_count == opt.hom_list )
        throw usage_error{ "hom needs exactly one of --count or --list" };
    const auto w = load( opt.file, in );
    const auto& source = require_soft_set( w, opt.hom_ends.at( 0 ) );
    const auto& target = require_soft_set( w, opt.hom_ends.at( 1 ) );

    if ( opt.hom_count )
    {
        out << "count" << ( opt.porcelain ? "=" : ": " ) << hom_count( source, target ) << '\n';
        return success;
    }

    const auto homs = enumerate_hom( source, target );
    if ( opt.porcelain )
    {
        out << "count=" << homs.size() << '\n';
        for ( std::size_t i = 0; i < homs.size(); ++i )
            out << "hom." << i + 1 << '=' << map_text( homs[ i ] ) << '\n';
        return success;
    }
    for ( std::size_t i = 0; i < homs.size(); ++i )
    {
        if ( i > 0 )
            out << '\n';
        print_morphism( out, "h" + std::to_string( i + 1 ), homs[ i ] );
    }
    return success;
}

// Prints a self-contained document: universe, objects, then morphisms.
void print_document( std::ostream& out, const universe& u, const std::vector< soft_set >& objects,
                     const std::vector< std::pair< std::string, soft_morphism > >& morphisms )
{
    print_universe_line( out, u );
    for ( const auto& s : objects )
    {
        out << '\n';
        print_soft_set( out, s );
    }
    for ( const auto& [ name, m ] : morphisms )
    {
        out << '\n';
        print_morphism( out, name, m );
    }
}

int witness_cancellation( const options& opt, const workspace& w, std::ostream& out, bool epi )
{
    const auto& m = require_morphism( w, opt.morphism );
    cancellation_counterexample cx = [ & ] {
        try
        {
            return epi ? epi_counterexample( m ) : mono_counterexample( m );
        }
        catch ( const error& e )
        {
            if ( e.kind() == error_kind::already_epi || e.kind() == error_kind::already_mono )
                throw negative_result{ e.what() };
            throw;
        }
    }();

    if ( opt.porcelain )
    {
        out << "kind=" << ( epi ? "epi" : "mono" ) << '\n'
            << "auxiliary_params=" << join( cx.auxiliary.params(), ',' ) << '\n'
            << "left=" << map_text( cx.left ) << '\n'
            << "right=" << map_text( cx.right ) << '\n';
        return success;
    }

    // the shared object is m's target (epi) or source (mono)
    const soft_set& shared = epi ? m.target() : m.source();
    const soft_set aux = fresh_name( cx.auxiliary, { shared } );
    const auto left = epi ? retarget( cx.left, shared, aux ) : retarget( cx.left, aux, shared );
    const auto right = epi ? retarget( cx.right, shared, aux ) : retarget( cx.right, aux, shared );
    print_document( out, w.over(), { shared, aux }, { { "beta", left }, { "gamma", right } } );
    return success;
}

int witness_separation( const options& opt, const workspace& w, std::ostream& out, bool co )
{
    if ( opt.pair.size() != 2 )
        throw usage_error{ "--pair needs two morphism names" };
    const auto& object = require_soft_set( w, opt.name );
    const auto& alpha = require_morphism( w, opt.pair[ 0 ] );
    const auto& beta = require_morphism( w, opt.pair[ 1 ] );

    const soft_morphism gamma = [ & ] {
        try
        {
            return co ? coseparator_witness( object, alpha, beta )
                      : separator_witness( object, alpha, beta );
        }
        catch ( const error& e )
        {
            if ( e.kind() == error_kind::not_a_separator
                 || e.kind() == error_kind::not_a_coseparator
                 || e.kind() == error_kind::morphisms_equal )
                throw negative_result{ e.what() };
            throw;
        }
    }();

    if ( opt.porcelain )
    {
        out << "kind=" << ( co ? "coseparator" : "separator" ) << '\n'
            << "witness=" << map_text( gamma ) << '\n';
        return success;
    }

    std::vector< soft_set > objects{ gamma.source() };
    if ( !( gamma.target() == gamma.source() ) )
        objects.push_back( gamma.target() );
    print_document( out, w.over(), objects, { { "gamma", gamma } } );
    return success;
}

int cmd_witness( const options& opt, std::istream& in, std::ostream& out )
{
    const auto& kind = opt.witness_kind;
    if ( kind != "epi" && kind != "mono" && kind != "separator" && kind != "coseparator" )
        throw usage_error{ "witness kind must be epi, mono, separator or coseparator" };
    const auto w = load( opt.file, in );

    if ( kind == "epi" || kind == "mono" )
    {
        if ( opt.morphism.empty() )
            throw usage_error{ "witness " + kind + " needs --morphism" };
        return witness_cancellation( opt, w, out, kind == "epi" );
    }
    if ( opt.name.empty() )
        throw usage_error{ "witness " + kind + " needs --object" };
    return witness_separation( opt, w, out, kind == "coseparator" );
}

std::shared_ptr< const universe > universe_for( const options& opt, std::istream& in,
                                                std::optional< workspace >& loaded )
{
    if ( opt.universe_list )
    {
        std::vector< std::string > elements;
        std::stringstream list{ *opt.universe_list };
        for ( std::string item; std::getline( list, item, ',' ); )
            if ( !item.empty() )
                elements.push_back( item );
        return std::make_shared< const universe >( std::move( elements ) );
    }
    if ( opt.file.empty() )
        throw usage_error{ "need a workspace file or --universe" };
    loaded.emplace( load( opt.file, in ) );
    return loaded->universe_ptr();
}

int cmd_family( const options& opt, std::istream& in, std::ostream& out )
{
    std::optional< workspace > loaded;
    const auto family = generate_object_family( universe_for( opt, in, loaded ), opt.max_params );
    if ( opt.porcelain )
    {
        out << "universe_size=" << family.over().size() << '\n'
            << "max_params=" << family.max_params() << '\n'
            << "members=" << family.size() << '\n';
        return success;
    }
    print_document( out, family.over(), family.members(), {} );
    return success;
}

struct tally
{
    std::string property;
    std::size_t checked = 0;
    std::vector< std::string > disagreements;

    void record( const std::string& subject, bool characterization, bool oracle )
    {
        ++checked;
        if ( characterization != oracle )
            disagreements.push_back( property + " on " + subject + ": characterization="
                                     + yes_no( characterization ) + " oracle=" + yes_no( oracle ) );
    }
};

int cmd_oracle_check( const options& opt, std::istream& in, std::ostream& out )
{
    std::optional< workspace > loaded;
    const auto over = universe_for( opt, in, loaded );
    const auto family = generate_object_family( over, opt.max_params );

    std::vector< tally > tallies;
    for ( const char* property :
          { "initial", "terminal", "zero", "separator", "coseparator", "epi", "mono" } )
        tallies.push_back( tally{ property, 0, {} } );

    auto check_object = [ & ]( const soft_set& s, const std::string& label ) {
        tallies[ 0 ].record( label, is_initial( s ), oracle_is_initial( s, family ) );
        tallies[ 1 ].record( label, is_terminal( s ), oracle_is_terminal( s, family ) );
        tallies[ 2 ].record( label, is_zero( s ), oracle_is_zero( s, family ) );
        tallies[ 3 ].record( label, is_separator( s ), oracle_is_separator( s, family ) );
        tallies[ 4 ].record( label, is_coseparator( s ), oracle_is_coseparator( s, family ) );
    };
    auto check_morphism = [ & ]( const soft_morphism& m, const std::string& label ) {
        tallies[ 5 ].record( label, is_epi( m ), oracle_is_epi( m, family ) );
        tallies[ 6 ].record( label, is_mono( m ), oracle_is_mono( m, family ) );
    };

    for ( const auto& s : family )
        check_object( s, s.name() );
    for ( const auto& source : family )
        for ( const auto& target : family )
            for ( const auto& m : enumerate_hom( source, target ) )
                check_morphism( m, source.name() + "->" + target.name() + "[" + map_text( m ) + "]" );
    if ( loaded )
    {
        for ( const auto& s : loaded->soft_sets() )
            check_object( s, "workspace:" + s.name() );
        for ( const auto& [ name, m ] : loaded->morphisms() )
            check_morphism( m, "workspace:" + name );
    }

    bool agree = true;
    for ( const auto& t : tallies )
        agree = agree && t.disagreements.empty();

    if ( opt.porcelain )
    {
        out << "universe_size=" << family.over().size() << '\n'
            << "max_params=" << family.max_params() << '\n'
            << "members=" << family.size() << '\n';
        for ( const auto& t : tallies )
            out << t.property << ".checked=" << t.checked << '\n'
                << t.property << ".disagreements=" << t.disagreements.size() << '\n';
        out << "result=" << ( agree ? "agree" : "disagree" ) << '\n';
    }
    else
    {
        out << "family: " << family.size() << " members over " << family.over().size()
            << " elements, max params " << family.max_params() << '\n';
        for ( const auto& t : tallies )
            out << t.property << ": " << t.checked - t.disagreements.size() << '/' << t.checked
                << " agree\n";
        for ( const auto& t : tallies )
            for ( const auto& d : t.disagreements )
                out << "disagreement: " << d << '\n';
        out << "result: " << ( agree ? "agree" : "disagree" ) << '\n';
    }
    return agree ? success : negative;
}

} // namespace

int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out,
         std::ostream& err )
{
    options opt;
    CLI::App app{ "Category of soft sets over a finite universe", "softcat" };
    app.require_subcommand( 1 );
    app.add_flag( "--porcelain", opt.porcelain, "Machine-readable key=value output" );

    auto* validate = app.add_subcommand( "validate", "Parse and validate a workspace" );
    validate->add_option( "file", opt.file, "Workspace file, '-' for stdin" )->required();
    validate->add_flag( "--canonical", opt.canonical, "Print the canonical form" );

    auto* cls_obj = app.add_subcommand( "classify-object", "Classify a soft set" );
    cls_obj->add_option( "file", opt.file )->required();
    cls_obj->add_option( "--name", opt.name, "Soft set name" )->required();

    auto* cls_mor = app.add_subcommand( "classify-morphism", "Classify a morphism" );
    cls_mor->add_option( "file", opt.file )->required();
    cls_mor->add_option( "--morphism", opt.morphism, "Morphism name" )->required();

    auto* hom = app.add_subcommand( "hom", "Count or list hom(source, target)" );
    hom->add_option( "file", opt.file )->required();
    hom->add_option( "ends", opt.hom_ends, "Source and target soft set names" )
        ->required()
        ->expected( 2 );
    hom->add_flag( "--count", opt.hom_count );
    hom->add_flag( "--list", opt.hom_list );

    auto* witness = app.add_subcommand( "witness", "Construct a witness from the proofs" );
    witness->add_option( "kind", opt.witness_kind, "epi, mono, separator or coseparator" )
        ->required();
    witness->add_option( "file", opt.file )->required();
    witness->add_option( "--morphism", opt.morphism );
    witness->add_option( "--object", opt.name );
    witness->add_option( "--pair", opt.pair )->expected( 2 );

    auto* family = app.add_subcommand( "family", "Print the exhaustive object family" );
    family->add_option( "file", opt.file, "Workspace supplying the universe" );
    family->add_option( "--universe", opt.universe_list, "Comma-separated elements" );
    family->add_option( "--max-params", opt.max_params )->required();

    auto* oracle = app.add_subcommand( "oracle-check",
                                       "Compare every characterization with its oracle" );
    oracle->add_option( "file", opt.file, "Workspace supplying the universe" );
    oracle->add_option( "--universe", opt.universe_list, "Comma-separated elements" );
    oracle->add_option( "--max-params", opt.max_params )->required();

    for ( auto* sub : app.get_subcommands( {} ) )
        sub->fallthrough();

    try
    {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? success : input_error;
    }

    if ( opt.universe_list && !opt.file.empty() )
    {
        err << "error: give either a workspace file or --universe, not both\n";
        return input_error;
    }

    try
    {
        if ( validate->parsed() )
            return cmd_validate( opt, in, out );
        if ( cls_obj->parsed() )
            return cmd_classify_object( opt, in, out );
        if ( cls_mor->parsed() )
            return cmd_classify_morphism( opt, in, out );
        if ( hom->parsed() )
            return cmd_hom( opt, in, out );
        if ( witness->parsed() )
            return cmd_witness( opt, in, out );
        if ( family->parsed() )
            return cmd_family( opt, in, out );
        return cmd_oracle_check( opt, in, out );
    }
    catch ( const negative_result& e )
    {
        err << e.what() << '\n';
        return negative;
    }
    catch ( const error& e )
    {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch ( const usage_error& e )
    {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    catch ( const std::length_error& e )
    {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

} // namespace softcat::cli
