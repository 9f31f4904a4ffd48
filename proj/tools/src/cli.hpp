// Command-line front end: grids, meshes, reports, and verification runs.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxsurf/genmat.hpp"

namespace maxsurf::cli {

/// Runs the tool with `args` (program name excluded), writing products to
/// `out` and diagnostics to `err`.  Returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Formats v with 17 significant digits so the decimal round-trips to the
/// same double.
std::string format17(double v);

/// Reads a matrix file of nine whitespace-separated reals, row-major.
/// Throws std::runtime_error when the file is missing or malformed.
Mat3 read_matrix_file(const std::string& path);

}  // namespace maxsurf::cli
