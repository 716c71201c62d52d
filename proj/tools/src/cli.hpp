#pragma once

#include <iosfwd>

namespace prime_scope::cli {

/// Exit codes: 0 success, 1 domain error (error JSON on stdout), 2 usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace prime_scope::cli
