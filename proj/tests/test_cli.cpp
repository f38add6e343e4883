#include "golden_io.hpp"

#include "softcat/cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace softcat;
using namespace softcat::test;

namespace
{

struct result
{
    int code;
    std::string out;
    std::string err;
};

result invoke( const std::vector< std::string >& args, const std::string& input = {} )
{
    std::istringstream in{ input };
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run( args, in, out, err );
    return { code, out.str(), err.str() };
}

std::string golden( const std::string& name ) { return ( golden_dir() / name ).string(); }

} // namespace

TEST_CASE( "porcelain output matches the golden files byte for byte" )
{
    const auto cases = porcelain_cases();
    REQUIRE( cases.size() >= 10 );
    for ( const auto& c : cases )
    {
        CAPTURE( c.expected_file );
        const auto r = invoke( c.args );
        CHECK( r.code == c.exit_code );
        CHECK( r.out == read_file( golden_dir() / "porcelain" / c.expected_file ) );
    }
}

TEST_CASE( "output is deterministic" )
{
    const std::vector< std::string > args{ "oracle-check", golden( "separators.sset" ), "--max-params", "2" };
    CHECK( invoke( args ).out == invoke( args ).out );
}

TEST_CASE( "classify-object human output" )
{
    const auto r = invoke( { "classify-object", golden( "separators.sset" ), "--name", "C" } );
    CHECK( r.code == cli::success );
    CHECK( r.out == "object: C\ninitial: no\nterminal: no\nzero: no\nseparator: no\n"
                    "coseparator: yes (c1, c2)\n" );
}

TEST_CASE( "stdin is read for '-'" )
{
    const auto r = invoke( { "--porcelain", "validate", "-" }, "universe a b\nsoftset F\nend\n" );
    CHECK( r.code == cli::success );
    CHECK( r.out == "status=ok\nuniverse_size=2\nsoftsets=1\nmorphisms=0\n" );
}

TEST_CASE( "validate --canonical prints the canonical form" )
{
    const auto r = invoke( { "validate", "--canonical", golden( "interleaved.sset" ) } );
    CHECK( r.code == cli::success );
    CHECK( r.out == read_file( golden_dir() / "interleaved.canonical" ) );
}

TEST_CASE( "witness documents parse back" )
{
    for ( const auto& args : std::vector< std::vector< std::string > >{
              { "witness", "epi", golden( "epi_mono.sset" ), "--morphism", "partial" },
              { "witness", "mono", golden( "epi_mono.sset" ), "--morphism", "collapse" },
              { "witness", "separator", golden( "separators.sset" ), "--object", "S", "--pair", "alpha", "beta" },
              { "witness", "coseparator", golden( "separators.sset" ), "--object", "C", "--pair", "alpha", "beta" },
              { "hom", golden( "epi_mono.sset" ), "--list", "F", "G" },
          } )
    {
        const auto r = invoke( args );
        REQUIRE( r.code == cli::success );
        // hom --list prints bare morphism blocks; prepend the source document
        const std::string doc = args[ 0 ] == "hom" ? read_file( args[ 1 ] ) + r.out : r.out;
        const auto v = invoke( { "validate", "-" }, doc );
        CHECK_MESSAGE( v.code == cli::success, v.err );
    }

    const auto epi = invoke( { "witness", "epi", golden( "epi_mono.sset" ), "--morphism", "partial" } );
    CHECK( epi.out.find( "morphism beta : G -> H\n" ) != std::string::npos );
    CHECK( epi.out.find( "softset H\nparam 0 = u1 u2\nparam 1 = u1 u2\nend\n" ) != std::string::npos );
}

TEST_CASE( "witness auxiliary object is renamed on a name clash" )
{
    const std::string doc = "universe u\nsoftset H\nparam a =\nparam b =\nend\n"
                            "softset K\nparam k =\nend\n"
                            "morphism f : H -> K\nmap a -> k\nmap b -> k\nend\n";
    const auto r = invoke( { "witness", "mono", "-", "--morphism", "f" }, doc );
    CHECK( r.code == cli::success );
    CHECK( r.out.find( "softset H_1\nparam c =\nend\n" ) != std::string::npos );
    CHECK( invoke( { "validate", "-" }, r.out ).code == cli::success );
}

TEST_CASE( "exit codes" )
{
    SUBCASE( "negative results exit 1" )
    {
        auto r = invoke( { "witness", "epi", golden( "iso.sset" ), "--morphism", "swap" } );
        CHECK( r.code == cli::negative );
        CHECK( r.err.find( "AlreadyEpi" ) != std::string::npos );
        r = invoke( { "witness", "mono", golden( "iso.sset" ), "--morphism", "swap" } );
        CHECK( r.code == cli::negative );
        CHECK( r.err.find( "AlreadyMono" ) != std::string::npos );
        r = invoke( { "witness", "separator", golden( "separators.sset" ), "--object", "C", "--pair", "alpha", "beta" } );
        CHECK( r.code == cli::negative );
        r = invoke( { "witness", "coseparator", golden( "separators.sset" ), "--object", "C", "--pair", "alpha", "alpha" } );
        CHECK( r.code == cli::negative );
    }
    SUBCASE( "input errors exit 2" )
    {
        auto r = invoke( { "validate", golden( "bad/soft_condition.sset" ) } );
        CHECK( r.code == cli::input_error );
        CHECK( r.err == "error: line 11: SoftConditionViolated: a2: F(a2) is not contained in G(b1)\n" );
        CHECK( invoke( { "validate", golden( "does_not_exist.sset" ) } ).code == cli::input_error );
        CHECK( invoke( { "classify-object", golden( "basic.sset" ), "--name", "Z" } ).code == cli::input_error );
        CHECK( invoke( { "classify-morphism", golden( "basic.sset" ), "--morphism", "z" } ).code == cli::input_error );
        CHECK( invoke( { "hom", golden( "basic.sset" ), "F", "G" } ).code == cli::input_error );
        CHECK( invoke( { "hom", golden( "basic.sset" ), "--count", "--list", "F", "G" } ).code == cli::input_error );
        CHECK( invoke( { "witness", "iso", golden( "basic.sset" ) } ).code == cli::input_error );
        CHECK( invoke( { "witness", "epi", golden( "basic.sset" ) } ).code == cli::input_error );
        CHECK( invoke( { "witness", "separator", golden( "separators.sset" ), "--object", "S" } ).code
               == cli::input_error );
        CHECK( invoke( { "family", "--max-params", "1" } ).code == cli::input_error );
        CHECK( invoke( { "family", golden( "basic.sset" ), "--universe", "a", "--max-params", "1" } ).code
               == cli::input_error );
    }
    SUBCASE( "usage errors exit 2" )
    {
        CHECK( invoke( {} ).code == cli::input_error );
        CHECK( invoke( { "frobnicate" } ).code == cli::input_error );
        CHECK( invoke( { "validate", golden( "basic.sset" ), "--bogus" } ).code == cli::input_error );
    }
    SUBCASE( "help exits 0" )
    {
        CHECK( invoke( { "--help" } ).code == cli::success );
    }
}

TEST_CASE( "family prints a parseable document" )
{
    const auto r = invoke( { "family", "--universe", "u1,u2", "--max-params", "1" } );
    CHECK( r.code == cli::success );
    CHECK( r.out.starts_with( "universe u1 u2\n\nsoftset s0\nend\n\nsoftset s1\nparam p1 =\nend\n" ) );
    const auto v = invoke( { "--porcelain", "validate", "-" }, r.out );
    CHECK( v.out.find( "softsets=5\n" ) != std::string::npos );
}

TEST_CASE( "oracle-check uses the workspace universe" )
{
    const auto r = invoke( { "oracle-check", golden( "three_elements.sset" ), "--max-params", "2" } );
    CHECK( r.code == cli::success );
    CHECK( r.out.starts_with( "family: 73 members over 3 elements, max params 2\n" ) );
    CHECK( r.out.ends_with( "result: agree\n" ) );
}

TEST_CASE( "oracle-check reports disagreement when the family is too small" )
{
    // without two-parameter probes there are no distinct parallel pairs, so
    // the separator, co-separator and epi oracles hold vacuously
    const auto r = invoke( { "--porcelain", "oracle-check", "--universe", "u1,u2", "--max-params", "1" } );
    CHECK( r.code == cli::negative );
    CHECK( r.out.find( "separator.disagreements=4\n" ) != std::string::npos );
    CHECK( r.out.find( "mono.disagreements=0\n" ) != std::string::npos );
    CHECK( r.out.ends_with( "result=disagree\n" ) );
}
