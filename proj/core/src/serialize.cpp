#include "ramsey_lab/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <string>

#include "ramsey_lab/errors.hpp"

namespace ramsey_lab {
namespace {

double sig12(double x) { return std::stod(format_sig12(x)); }

[[noreturn]] void parse_error(std::size_t line, const std::string& why) {
  throw InvalidArgument("edge list line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
  if (g.has_parts()) {
    out += " parts";
    for (const int p : g.parts()) out += " " + std::to_string(p);
  }
  out += '\n';
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<int> parts;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> m) || n < 0 || m < 0) parse_error(line_no, "expected '<N> <E>' header");
      std::string word;
      if (fields >> word) {
        if (word != "parts") parse_error(line_no, "unexpected '" + word + "' in header");
        int label = 0;
        while (fields >> label) parts.push_back(label);
        if (!fields.eof()) parse_error(line_no, "bad part label");
        if (parts.size() != static_cast<std::size_t>(n)) {
          parse_error(line_no, "expected " + std::to_string(n) + " part labels");
        }
      }
      have_header = true;
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) parse_error(line_no, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) parse_error(line_no, "vertex out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw InvalidArgument("edge list is empty");
  if (edges.size() != static_cast<std::size_t>(m)) {
    throw InvalidArgument("edge list header announces " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
  }
  Graph g(static_cast<Vertex>(n), std::move(edges));
  if (!parts.empty()) g.set_parts(std::move(parts));
  return g;
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string write_coloring(const EdgeColoring& coloring) {
  std::string out;
  for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
    out += std::to_string(coloring.edges[i].u) + " " + std::to_string(coloring.edges[i].v) + " " +
           std::to_string(coloring.colors[i]) + "\n";
  }
  return out;
}

nlohmann::json to_json(const TrialReport& report) {
  const auto& ex = report.experiment;
  nlohmann::json params = {{"N", ex.n}, {"s", ex.s}};
  if (ex.model == HoleModel::kPairing) {
    params["d"] = ex.d;
    params["simple_only"] = ex.simple_only;
  } else {
    params["p"] = sig12(ex.p);
  }
  if (report.mode == SearchMode::kHeuristic) params["heuristic_iterations"] = ex.heuristic_iterations;

  nlohmann::json out = {
      {"model", std::string(to_string(ex.model))},
      {"params", params},
      {"trials", report.trials},
      {"holes", report.holes_found},
      {"freq", sig12(report.frequency)},
      {"ci_low", sig12(report.ci_low)},
      {"ci_high", sig12(report.ci_high)},
      {"mode", std::string(to_string(report.mode))},
      {"seed", ex.seed},
      {"version", report.version},
  };
  if (report.pairing_attempts) {
    out["pairing_attempts"] = *report.pairing_attempts;
    out["acceptance_rate"] =
        sig12(static_cast<double>(report.trials) / static_cast<double>(*report.pairing_attempts));
  }
  return out;
}

nlohmann::json to_json(const ArrowResult& result, const TargetSpec& targets) {
  nlohmann::json out = {
      {"targets", targets.to_string()},
      {"arrows", result.arrows},
      {"colorings_examined", result.colorings_examined},
      {"version", kToolVersion},
  };
  if (result.witness) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < result.witness->edges.size(); ++i) {
      rows.push_back({result.witness->edges[i].u, result.witness->edges[i].v,
                      result.witness->colors[i]});
    }
    out["witness"] = std::move(rows);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json flags = nlohmann::json::array();
  for (const bool f : report.constraint_flags) flags.push_back(f);
  return {
      {"model", std::string(to_string(report.model))},
      {"c", to_string(report.c)},
      {"c_value", sig12(to_double(report.c))},
      {"d", sig12(report.d)},
      {"coefficient", sig12(report.coefficient)},
      {"loose_coefficient", sig12(report.loose_coefficient)},
      {"constraint_ok", report.constraint_ok},
      {"constraint_flags", flags},
  };
}

nlohmann::json to_json(const DensitySolveResult& result) {
  return {
      {"d_min", sig12(result.d_min)},
      {"worst_a", sig12(result.worst_a)},
      {"max_exponent", sig12(result.max_exponent)},
      {"max_exponent_below", sig12(result.max_exponent_below)},
      {"grid_points", result.grid_points},
      {"tolerance", result.tolerance},
  };
}

}  // namespace ramsey_lab
