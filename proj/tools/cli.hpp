#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altbest::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kNumerical = 4 };

/// Quadrature error estimates above this fail the run with kNumerical.
inline constexpr double kDefaultQuadTolerance = 1e-8;

/// Parses `args` (args[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `start:stop:step`, endpoints inclusive, every value in [0,1].
std::vector<double> parse_grid(const std::string& spec);

}  // namespace altbest::cli
