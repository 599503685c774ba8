#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shepkit::cli {

// Runs one command. args excludes the program name. Returns the process
// exit code: 0 for success or a positive verdict, 2 for a well-formed run
// with a negative verdict, 1 for usage, input, or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace shepkit::cli
