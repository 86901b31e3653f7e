#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arsite::cli {

/// Runs one CLI invocation; `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (error JSON on `out`), 2 on malformed input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace arsite::cli
