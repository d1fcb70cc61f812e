#pragma once

#include <iosfwd>

namespace tetra::cli {

/// Runs the tetra command line. Exit codes: 0 success, 1 data or
/// verification failure, 2 usage error or unmet theorem hypothesis.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
