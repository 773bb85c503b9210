#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ramsey_lab/arrow_checker.hpp"
#include "ramsey_lab/bounds.hpp"
#include "ramsey_lab/constructions.hpp"
#include "ramsey_lab/graph.hpp"
#include "ramsey_lab/random_models.hpp"
#include "ramsey_lab/threshold_solver.hpp"

namespace ramsey_lab {

inline constexpr const char* kToolVersion = "ramsey_lab 1.0.0";

// Edge-list text format:
//
//   <N> <E>[ parts <l_0> ... <l_{N-1}>]
//   u v
//   ...
//
// one edge per line, 0-based, u < v, lines sorted. Blank lines and lines
// starting with '#' are skipped on input.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);

/// "u v color" per line, in host edge order.
std::string write_coloring(const EdgeColoring& coloring);

nlohmann::json to_json(const TrialReport& report);
nlohmann::json to_json(const ArrowResult& result, const TargetSpec& targets);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const DensitySolveResult& result);

/// Shortest decimal representation that keeps 12 significant digits.
std::string format_sig12(double x);

/// FNV-1a 64-bit of `bytes` as 16 lowercase hex digits.
std::string checksum(std::string_view bytes);

}  // namespace ramsey_lab
