#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rps::cli {

// Dispatches one command-line invocation. Exit status 0 on success, 2 for
// usage and precondition problems, 1 for internal errors (and for a
// certificate that fails verification). All output is deterministic:
// identical argv yields identical bytes on both streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rps::cli
