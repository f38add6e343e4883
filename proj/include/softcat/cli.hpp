#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace softcat::cli
{

enum exit_code : int
{
    success = 0,
    negative = 1,    // a verification came out negative, or a witness cannot exist
    input_error = 2, // usage, parse, or reference errors
};

/// Runs one command line (without the program name). A file argument of
/// "-" reads from `in`.
int run( const std::vector< std::string >& args, std::istream& in, std::ostream& out,
         std::ostream& err );

} // namespace softcat::cli
