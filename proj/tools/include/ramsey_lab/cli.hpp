#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ramsey_lab/graph.hpp"

namespace ramsey_lab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitInfeasible = 4;

/// Runs the tool with `args` (without the program name). Command output goes
/// to `out`; diagnostics and the run manifest (unless --manifest names a file)
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a host from a generator spec: "K6", "K3,3", "C5", "P4", "S4",
/// "M2,2,1" (complete multipartite), "petersen", or "file:<path>" for an
/// edge-list file.
Graph parse_host(const std::string& spec);

}  // namespace ramsey_lab::cli
