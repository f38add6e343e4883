#include "fixtures.hpp"

#include "softcat/morphism.hpp"

using namespace softcat;
using namespace softcat::test;

TEST_CASE( "universe rejects duplicate elements" )
{
    CHECK( kind_of( [] { universe{ { "u1", "u1" } }; } ) == error_kind::duplicate_element );
    CHECK( kind_of( [] { universe{ std::vector< std::string >( 65, "x" ) }; } )
           == error_kind::universe_too_large );
}

TEST_CASE( "universe encodes subsets in element order" )
{
    const universe u{ { "x", "y", "z" } };
    const std::vector< std::string > names{ "z", "x" };
    const subset s = u.subset_of( names );
    CHECK( s.bits() == 0b101 );
    CHECK( u.names_of( s ) == std::vector< std::string >{ "x", "z" } );
    CHECK( u.full().bits() == 0b111 );
}

TEST_CASE( "make_soft_set" )
{
    SUBCASE( "empty parameter set is valid" )
    {
        const auto s = sset( "F", {} );
        CHECK( s.empty() );
        CHECK( s.name() == "F" );
    }
    SUBCASE( "params keep their order" )
    {
        const auto s = sset( "F", { { "a1", { "u1" } }, { "a2", {} } } );
        REQUIRE( s.size() == 2 );
        CHECK( s.params() == std::vector< std::string >{ "a1", "a2" } );
        CHECK( s.image( 0 ) == subset{ 0b01 } );
        CHECK( s.image( 1 ).empty() );
        CHECK( s.param_index( "a2" ) == 1U );
        CHECK_FALSE( s.param_index( "b" ).has_value() );
    }
    SUBCASE( "unknown element" )
    {
        auto u1 = std::make_shared< const universe >( std::vector< std::string >{ "u1" } );
        CHECK( kind_of( [ & ] { (void) sset( "F", { { "a1", { "u2" } } }, u1 ); } )
               == error_kind::element_not_in_universe );
        CHECK( kind_of( [ & ] { (void) make_soft_set( u1, "F", { { "a1", subset{ 0b10 } } } ); } )
               == error_kind::element_not_in_universe );
    }
    SUBCASE( "duplicate parameter" )
    {
        CHECK( kind_of( [] { (void) sset( "F", { { "a1", {} }, { "a1", { "u1" } } } ); } )
               == error_kind::duplicate_parameter );
    }
}

TEST_CASE( "null and absolute soft sets" )
{
    CHECK( is_null( sset( "F", {} ) ) );
    CHECK( is_absolute( sset( "F", {} ) ) );
    CHECK( is_null( null_set( "F", { "a1", "a2" } ) ) );
    CHECK_FALSE( is_null( sset( "F", { { "a1", { "u1" } } } ) ) );
    CHECK( is_absolute( sset( "F", { { "a1", { "u1", "u2" } } } ) ) );
    CHECK_FALSE( is_absolute( sset( "F", { { "a1", { "u1" } } } ) ) );
}

TEST_CASE( "soft set equality is name, params and mapping" )
{
    const auto f = sset( "F", { { "a1", { "u1" } } } );
    CHECK( f == sset( "F", { { "a1", { "u1" } } } ) );
    CHECK_FALSE( f == sset( "G", { { "a1", { "u1" } } } ) );
    CHECK_FALSE( f == sset( "F", { { "a2", { "u1" } } } ) );
    CHECK_FALSE( f == sset( "F", { { "a1", { "u2" } } } ) );
    CHECK( f.renamed( "G" ) == sset( "G", { { "a1", { "u1" } } } ) );
}

TEST_CASE( "make_morphism" )
{
    SUBCASE( "null source maps anywhere" )
    {
        const auto f = null_set( "F", { "a1" } );
        const auto g = sset( "G", { { "b1", { "u2" } } } );
        const auto m = make_morphism( f, { 0 }, g );
        CHECK( satisfies_soft_condition( m ) );
    }
    SUBCASE( "soft condition violated names the parameter" )
    {
        const auto f = sset( "F", { { "a1", { "u1", "u2" } } } );
        const auto g = sset( "G", { { "b1", { "u1" } } } );
        try
        {
            (void) make_morphism( f, { 0 }, g );
            FAIL( "expected SoftConditionViolated" );
        }
        catch ( const error& e )
        {
            CHECK( e.kind() == error_kind::soft_condition_violated );
            CHECK( std::string{ e.what() }.find( "a1" ) != std::string::npos );
        }
    }
    SUBCASE( "first violating parameter in declared order is reported" )
    {
        const auto f = sset( "F", { { "a1", {} }, { "a2", { "u2" } }, { "a3", { "u1", "u2" } } } );
        const auto g = sset( "G", { { "b1", { "u1" } } } );
        try
        {
            (void) make_morphism( f, { 0, 0, 0 }, g );
            FAIL( "expected SoftConditionViolated" );
        }
        catch ( const error& e )
        {
            CHECK( std::string{ e.what() }.starts_with( "SoftConditionViolated: a2:" ) );
        }
    }
    SUBCASE( "inclusion holds" )
    {
        const auto f = sset( "F", { { "a1", { "u1" } } } );
        const auto g = sset( "G", { { "b1", { "u1", "u2" } } } );
        CHECK( make_morphism( f, { 0 }, g ).map() == param_map{ 0 } );
    }
    SUBCASE( "map shape errors" )
    {
        const auto f = null_set( "F", { "a1", "a2" } );
        const auto g = null_set( "G", { "b1" } );
        CHECK( kind_of( [ & ] { (void) make_morphism( f, param_map{ 0 }, g ); } )
               == error_kind::map_not_total );
        CHECK( kind_of( [ & ] { (void) make_morphism( f, param_map{ 0, 1 }, g ); } )
               == error_kind::map_range_invalid );

        using entries = std::vector< std::pair< std::string, std::string > >;
        const entries missing{ { "a1", "b1" } };
        CHECK( kind_of( [ & ] { (void) make_morphism( f, missing, g ); } )
               == error_kind::map_not_total );
        const entries twice{ { "a1", "b1" }, { "a1", "b1" }, { "a2", "b1" } };
        CHECK( kind_of( [ & ] { (void) make_morphism( f, twice, g ); } )
               == error_kind::map_not_total );
        const entries bad_target{ { "a1", "b1" }, { "a2", "b9" } };
        CHECK( kind_of( [ & ] { (void) make_morphism( f, bad_target, g ); } )
               == error_kind::map_range_invalid );
        const entries ok{ { "a2", "b1" }, { "a1", "b1" } };
        CHECK( make_morphism( f, ok, g ).map() == param_map{ 0, 0 } );
    }
    SUBCASE( "universes must agree" )
    {
        auto other = std::make_shared< const universe >( std::vector< std::string >{ "v" } );
        const auto f = null_set( "F", { "a1" } );
        const auto g = null_set( "G", { "b1" }, other );
        CHECK( kind_of( [ & ] { (void) make_morphism( f, { 0 }, g ); } )
               == error_kind::universe_mismatch );
    }
}

TEST_CASE( "identity and composition" )
{
    const auto empty = sset( "E", {} );
    CHECK( identity( empty ).map().empty() );

    const auto s = sset( "S", { { "a1", { "u1" } } } );
    CHECK( identity( s ).map() == param_map{ 0 } );

    const auto f = sset( "F", { { "a1", {} }, { "a2", { "u1" } } } );
    const auto g = sset( "G", { { "b1", { "u1" } }, { "b2", { "u1", "u2" } } } );
    const auto h = absolute_set( "H", { "c1" } );
    const auto alpha = make_morphism( f, { 0, 1 }, g );
    const auto beta = make_morphism( g, { 0, 0 }, h );

    CHECK( compose( identity( g ), alpha ) == alpha );
    CHECK( compose( alpha, identity( f ) ) == alpha );

    const auto composite = compose( beta, alpha );
    CHECK( composite.source() == f );
    CHECK( composite.target() == h );
    CHECK( composite.map() == param_map{ 0, 0 } );

    CHECK( kind_of( [ & ] { (void) compose( alpha, beta ); } ) == error_kind::composition_mismatch );
    // same content, different name: not composable
    CHECK( kind_of( [ & ] { (void) compose( identity( g.renamed( "G2" ) ), alpha ); } )
           == error_kind::composition_mismatch );
}

TEST_CASE( "morphism equality is equality of the triple" )
{
    const auto f = null_set( "F", { "a1" } );
    const auto g = null_set( "G", { "b1", "b2" } );
    const auto m = make_morphism( f, { 0 }, g );
    CHECK( morphisms_equal( m, m ) );
    CHECK_FALSE( morphisms_equal( m, make_morphism( f, { 1 }, g ) ) );
    // identical map, different targets: hom-sets are disjoint
    CHECK_FALSE( morphisms_equal( m, make_morphism( f, { 0 }, g.renamed( "G2" ) ) ) );
}

TEST_CASE( "category laws hold across the k <= 2 family" )
{
    const auto family = generate_object_family( u12(), 2 );
    std::size_t checked = 0;
    for ( const auto& a : family )
        for ( const auto& b : family )
            for ( const auto& f : enumerate_hom( a, b ) )
            {
                CHECK( satisfies_soft_condition( f ) );
                CHECK( make_morphism( f.source(), f.map(), f.target() ) == f );
                CHECK( compose( identity( b ), f ) == f );
                CHECK( compose( f, identity( a ) ) == f );
                ++checked;
            }
    CHECK( checked == 489 );
}
