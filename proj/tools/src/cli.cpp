#include "ramsey_lab/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsey_lab/arrow_checker.hpp"
#include "ramsey_lab/bounds.hpp"
#include "ramsey_lab/constructions.hpp"
#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/random_models.hpp"
#include "ramsey_lab/serialize.hpp"
#include "ramsey_lab/threshold_solver.hpp"

namespace ramsey_lab::cli {
namespace {

using nlohmann::json;

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (token.empty() || used != token.size()) {
      throw InvalidArgument(flag + ": '" + token + "' at position " + std::to_string(start + 1) +
                            " is not an integer");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Reference-style display: coefficient in units of 10^6, rounded up.
long long millions_ceil(double coefficient) {
  return static_cast<long long>(std::ceil(coefficient / 1e6));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Renders rows as whitespace-aligned columns.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i] + 2);
    }
    out += line + "\n";
  }
  return out;
}

struct CommandOutput {
  std::string text;
  std::optional<std::uint64_t> seed;
};

// --- bounds -----------------------------------------------------------------

CommandOutput cmd_bounds(const std::string& cycles_text, const std::string& format,
                         std::size_t grid) {
  const CycleSpec spec(parse_int_list(cycles_text, "--cycles"));
  std::vector<BoundReport> reports;
  reports.push_back(ramsey_vs_biclique(spec));
  reports.push_back(size_ramsey_gnp(spec));
  const Rational c = cycle_constant(spec);
  std::optional<DensitySolveResult> solved;
  if (c > 3) {
    RegularSolveOptions options;
    options.grid = grid;
    solved = regular_min_density(c, options);
    reports.push_back(size_ramsey_regular(spec, solved->d_min, /*verify_d=*/false));
  }
  if (spec.all_even()) reports.push_back(size_ramsey_bipartite(spec));

  std::string text;
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      json row = to_json(r);
      row["coefficient_e6_ceil"] = millions_ceil(r.loose_coefficient);
      rows.push_back(std::move(row));
    }
    json lengths = json::array();
    for (const auto n : spec.lengths()) lengths.push_back(n);
    json doc = {{"cycles", lengths},
                {"t_even", spec.even_count()},
                {"t_odd", spec.odd_count()},
                {"bounds", rows},
                {"version", kToolVersion}};
    if (spec.all_even()) {
      doc["ramsey_vs_kmm_even_route"] = cor_f0_bound(static_cast<int>(spec.size()), 1).str();
    }
    text = doc.dump(2) + "\n";
  } else if (format == "csv") {
    text = "model,c,c_value,d,coefficient,loose_coefficient,coefficient_e6_ceil,constraint_ok\n";
    for (const auto& r : reports) {
      text += std::string(to_string(r.model)) + "," + to_string(r.c) + "," +
              format_sig12(to_double(r.c)) + "," + format_sig12(r.d) + "," +
              format_sig12(r.coefficient) + "," + format_sig12(r.loose_coefficient) + "," +
              std::to_string(millions_ceil(r.loose_coefficient)) + "," +
              (r.constraint_ok ? "true" : "false") + "\n";
    }
  } else {
    std::vector<std::vector<std::string>> rows = {
        {"model", "c", "d", "coefficient", "loose", "loose_e6_ceil", "constraint_ok"}};
    for (const auto& r : reports) {
      rows.push_back({std::string(to_string(r.model)), to_string(r.c), format_sig12(r.d),
                      format_sig12(r.coefficient), format_sig12(r.loose_coefficient),
                      std::to_string(millions_ceil(r.loose_coefficient)),
                      r.constraint_ok ? "true" : "false"});
    }
    text = render_table(rows);
  }
  return {text, std::nullopt};
}

// --- solve ------------------------------------------------------------------

CommandOutput cmd_solve(const std::string& model_name, const std::string& c_text,
                        std::size_t grid, double tol, const std::string& format) {
  const DensityModel model = parse_density_model(model_name);
  const auto problem = DensityProblem::from_c(model, parse_rational(c_text));
  json doc = {{"model", std::string(to_string(model))},
              {"c", to_string(problem.c())},
              {"rho", to_string(problem.rho())},
              {"version", kToolVersion}};
  switch (model) {
    case DensityModel::kGnp: {
      const double d = gnp_min_density(problem.rho());
      doc["d_min"] = std::stod(format_sig12(d));
      doc["method"] = "closed form";
      break;
    }
    case DensityModel::kBipartite: {
      const double d = bipartite_min_density(problem.rho());
      doc["d_min"] = std::stod(format_sig12(d));
      doc["method"] = "closed form";
      break;
    }
    case DensityModel::kRegular: {
      RegularSolveOptions options;
      options.grid = grid;
      options.tolerance = tol;
      const auto result = regular_min_density(problem.c(), options);
      doc.update(to_json(result));
      doc["method"] = "affine-in-d grid maximum with golden-section refinement";
      break;
    }
  }
  if (format == "json") return {doc.dump(2) + "\n", std::nullopt};
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, value] : doc.items()) {
    rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  return {render_table(rows), std::nullopt};
}

// --- simulate ---------------------------------------------------------------

CommandOutput cmd_simulate(HoleExperiment ex, const std::string& format) {
  if (ex.trials < 1) throw InvalidArgument("--trials must be >= 1");
  const TrialReport report = estimate_hole_probability(ex);
  const json doc = to_json(report);
  if (format == "json") return {doc.dump(2) + "\n", ex.seed};
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, value] : doc.items()) {
    rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  }
  return {render_table(rows), ex.seed};
}

// --- construct --------------------------------------------------------------

std::string tree_report(const RootedTree& tree) {
  const auto leaves = tree.leaves();
  std::int32_t min_depth = tree.height();
  std::int32_t max_depth = 0;
  for (const Vertex v : leaves) {
    min_depth = std::min(min_depth, tree.depth(v));
    max_depth = std::max(max_depth, tree.depth(v));
  }
  std::ostringstream os;
  os << "# vertices " << tree.vertex_count() << "\n"
     << "# root " << tree.root() << "\n"
     << "# leaves " << leaves.size() << "\n"
     << "# leaf_depth_min " << min_depth << "\n"
     << "# leaf_depth_max " << max_depth << "\n"
     << "# max_degree " << tree.max_degree() << "\n";
  return os.str();
}

CommandOutput cmd_construct(const std::string& leaf_tree, const std::string& connector,
                            const std::string& multipartite) {
  const int chosen = !leaf_tree.empty() + !connector.empty() + !multipartite.empty();
  if (chosen != 1) {
    throw InvalidArgument("construct: give exactly one of --leaf-tree, --connector, --multipartite");
  }
  std::string text;
  if (!leaf_tree.empty()) {
    const auto n = parse_int_list(leaf_tree, "--leaf-tree");
    if (n.size() != 1) throw InvalidArgument("--leaf-tree takes one integer");
    const RootedTree tree = build_leaf_tree(n[0]);
    text = "# kind leaf-tree n=" + std::to_string(n[0]) + "\n" + tree_report(tree) +
           "# vertex_bound " + std::to_string(2 * n[0] + ceil_log2(static_cast<std::uint64_t>(n[0])) - 2) +
           "\n" + write_edge_list(tree.to_graph());
  } else if (!connector.empty()) {
    const auto p = parse_int_list(connector, "--connector");
    if (p.size() != 3) throw InvalidArgument("--connector takes m1,m2,n");
    const RootedTree tree = build_connector_tree(p[0], p[1], p[2]);
    const Graph g = tree.to_graph();
    std::int32_t dmin = INT32_MAX;
    std::int32_t dmax = 0;
    for (const Vertex x : tree.left_leaves()) {
      const auto dist = bfs_distances(g, x);
      for (const Vertex y : tree.right_leaves()) {
        dmin = std::min(dmin, dist[y]);
        dmax = std::max(dmax, dist[y]);
      }
    }
    std::string parity = "n/a";
    if (p[2] % 2 == 0) {
      const auto coloring = two_coloring(g);
      bool split = coloring.has_value();
      for (const Vertex x : tree.left_leaves()) {
        for (const Vertex y : tree.right_leaves()) {
          split = split && (*coloring)[x] != (*coloring)[y];
        }
      }
      parity = split ? "split" : "not-split";
    }
    std::ostringstream os;
    os << "# kind connector m1=" << p[0] << " m2=" << p[1] << " n=" << p[2] << "\n"
       << tree_report(tree) << "# left_leaves " << tree.left_leaves().size() << "\n"
       << "# right_leaves " << tree.right_leaves().size() << "\n"
       << "# xy_distance_min " << dmin << "\n"
       << "# xy_distance_max " << dmax << "\n"
       << "# vertex_bound " << p[2] + 2 * p[0] + 2 * p[1] << "\n"
       << "# even_n_class_split " << parity << "\n";
    text = os.str() + write_edge_list(g);
  } else {
    const auto sizes = parse_int_list(multipartite, "--multipartite");
    const Graph g = build_complete_multipartite(sizes);
    text = "# kind multipartite\n# vertices " + std::to_string(g.vertex_count()) + "\n# edges " +
           std::to_string(g.edge_count()) + "\n" + write_edge_list(g);
  }
  return {text, std::nullopt};
}

// --- arrow ------------------------------------------------------------------

CommandOutput cmd_arrow(const std::string& host_spec, const std::string& targets_text,
                        bool bipartite, std::size_t max_edges, const std::string& witness_path,
                        const std::string& format) {
  const Graph host = parse_host(host_spec);
  const TargetSpec targets = TargetSpec::parse(targets_text);
  ArrowOptions options;
  options.max_edges = max_edges;
  const ArrowResult result =
      bipartite ? bipartite_arrows(host, targets, options) : arrows(host, targets, options);
  if (result.witness) {
    if (!is_good_coloring(host, *result.witness, targets, bipartite)) {
      throw std::logic_error("arrow search produced a witness that fails re-verification");
    }
    if (!witness_path.empty()) {
      std::ofstream file(witness_path);
      if (!file) throw InvalidArgument("cannot write witness file '" + witness_path + "'");
      file << write_coloring(*result.witness);
    }
  }
  json doc = to_json(result, targets);
  doc["host"] = {{"spec", host_spec},
                 {"vertices", host.vertex_count()},
                 {"edges", host.edge_count()}};
  if (format == "json") return {doc.dump(2) + "\n", std::nullopt};
  std::ostringstream os;
  os << "host " << host_spec << " (" << host.vertex_count() << " vertices, " << host.edge_count()
     << " edges)\n"
     << "targets " << targets.to_string() << "\n"
     << "arrows " << (result.arrows ? "true" : "false") << "\n"
     << "colorings_examined " << result.colorings_examined << "\n";
  if (result.witness) os << "witness\n" << write_coloring(*result.witness);
  return {os.str(), std::nullopt};
}

// --- reproduce --------------------------------------------------------------

struct ReproRow {
  std::string name;
  std::string computed;
  std::string reference;
  bool pass = false;
};

std::vector<ReproRow> reproduce_rows() {
  std::vector<ReproRow> rows;
  auto millions_row = [&](const std::string& name, double coefficient, long long reference) {
    const long long shown = millions_ceil(coefficient);
    const bool close = std::fabs(coefficient / 1e6 - static_cast<double>(reference)) <= 1.0;
    rows.push_back({name, format_sig12(coefficient) + " (" + std::to_string(shown) + "e6)",
                    std::to_string(reference) + "e6", shown == reference && close});
  };

  const LinearForm f2 = f_coefficients(2);
  rows.push_back({"f_2 coefficients",
                  "(" + f2.a.str() + ", " + f2.b.str() + ", " + f2.c.str() + ")",
                  "(38033, 57379, -1617)", f2 == LinearForm{38033, 57379, -1617}});

  const CycleSpec odd({1000001, 1000001});
  const CycleSpec even({1000000, 1000000});
  const Rational c_odd = cycle_constant(odd);
  const Rational c_even = cycle_constant(even);
  rows.push_back({"c for two odd / two even cycles", to_string(c_odd) + " / " + to_string(c_even),
                  "95412 / 538002/35", c_odd == 95412 && c_even == Rational(538002, 35)});

  millions_row("G(N,p) bound, odd n", size_ramsey_gnp(odd).loose_coefficient, 113484);
  millions_row("G(N,p) bound, even n", size_ramsey_gnp(even).loose_coefficient, 2515);

  for (const auto& [c, d, label] :
       {std::tuple{c_odd, 2378778.0, "odd"}, std::tuple{c_even, 327091.0, "even"}}) {
    const auto check = check_regular_certificate(c, d);
    rows.push_back({std::string("regular certificate f(a,c,") + format_sig12(d) + ") <= 0, " + label,
                    "max_a f = " + format_sig12(check.max_exponent),
                    "<= 0", check.holds});
  }
  millions_row("random regular bound, odd n", size_ramsey_regular(c_odd, 2378778.0).coefficient,
               113482);
  millions_row("random regular bound, even n", size_ramsey_regular(c_even, 327091.0).coefficient,
               2514);
  millions_row("random bipartite bound, even n", size_ramsey_bipartite(even).coefficient, 843);
  return rows;
}

CommandOutput cmd_reproduce(bool as_json) {
  const auto rows = reproduce_rows();
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (as_json) {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"name", r.name},
                      {"computed", r.computed},
                      {"reference", r.reference},
                      {"status", r.pass ? "PASS" : "FAIL"}});
    }
    return {json{{"rows", list}, {"all_pass", all}, {"version", kToolVersion}}.dump(2) + "\n",
            std::nullopt};
  }
  std::vector<std::vector<std::string>> table = {{"status", "quantity", "computed", "reference"}};
  for (const auto& r : rows) {
    table.push_back({r.pass ? "PASS" : "FAIL", r.name, r.computed, r.reference});
  }
  return {render_table(table), std::nullopt};
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

}  // namespace

Graph parse_host(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw InvalidArgument("cannot open host file '" + spec.substr(5) + "'");
    return read_edge_list(in);
  }
  if (spec == "petersen") return petersen_graph();
  if (spec.size() < 2) throw InvalidArgument("unknown host '" + spec + "'");
  const char kind = spec[0];
  const auto params = parse_int_list(spec.substr(1), "--host");
  for (const auto p : params) {
    if (p < 1 || p > 64) throw InvalidArgument("--host: size " + std::to_string(p) + " out of range");
  }
  const auto first = static_cast<Vertex>(params[0]);
  switch (kind) {
    case 'K':
      if (params.size() == 1) return complete_graph(first);
      if (params.size() == 2) return complete_bipartite_graph(first, static_cast<Vertex>(params[1]));
      break;
    case 'C':
      if (params.size() == 1) return cycle_graph(first);
      break;
    case 'P':
      if (params.size() == 1) return path_graph(first);
      break;
    case 'S':
      if (params.size() == 1) return star_graph(first);
      break;
    case 'M':
      return build_complete_multipartite(params);
    default:
      break;
  }
  throw InvalidArgument("unknown host '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Size-Ramsey bounds, density thresholds, constructions and arrow checks for cycles",
               "ramsey_lab"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");

  std::string format = "table";
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  std::function<CommandOutput()> action;

  auto* bounds = app.add_subcommand("bounds", "All applicable size-Ramsey bounds for a cycle list");
  std::string cycles;
  std::size_t bounds_grid = 100'000;
  bounds->add_option("--cycles", cycles, "Comma-separated cycle lengths")->required();
  bounds->add_option("--grid", bounds_grid, "a-grid intervals for the regular-model solve");
  add_format(bounds, {"table", "json", "csv"});
  bounds->callback([&] { action = [&] { return cmd_bounds(cycles, format, bounds_grid); }; });

  auto* solve = app.add_subcommand("solve", "Minimal density d(c) for a random model");
  std::string model = "regular";
  std::string c_text;
  std::size_t grid = 100'000;
  double tol = 1e-6;
  solve->add_option("--model", model, "gnp | regular | bipartite")->required();
  solve->add_option("--c", c_text, "c = 1/rho, as p, p/q or a decimal")->required();
  solve->add_option("--grid", grid, "a-grid intervals (regular model)");
  solve->add_option("--tol", tol, "Relative minimality tolerance (regular model)");
  add_format(solve, {"table", "json"});
  solve->callback([&] { action = [&] { return cmd_solve(model, c_text, grid, tol, format); }; });

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo hole frequency for a random model");
  HoleExperiment ex;
  std::string sim_model;
  std::string mode = "auto";
  std::optional<std::uint64_t> seed;
  std::optional<double> p_opt;
  std::optional<double> d_opt;
  simulate->add_option("--model", sim_model, "gnp | bipartite | pairing")->required();
  simulate->add_option("--N", ex.n, "Vertex count (per side for bipartite)")->required();
  simulate->add_option("--s", ex.s, "Hole side size")->default_val(1);
  simulate->add_option("--p", p_opt, "Edge probability (gnp, bipartite)");
  simulate->add_option("--d", d_opt, "Degree (pairing); expected degree p*N otherwise");
  simulate->add_option("--trials", ex.trials, "Number of samples")->default_val(1);
  simulate->add_option("--seed", seed, "Base seed (required)")->required();
  simulate->add_option("--mode", mode, "auto | exact | heuristic");
  simulate->add_option("--iters", ex.heuristic_iterations, "Heuristic restarts per sample");
  simulate->add_flag("--simple-only", ex.simple_only, "Reject non-simple pairings");
  add_format(simulate, {"table", "json"});
  simulate->callback([&] {
    action = [&] {
      ex.model = parse_hole_model(sim_model);
      ex.mode = parse_search_mode(mode);
      ex.seed = *seed;
      if (ex.model == HoleModel::kPairing) {
        if (!d_opt || *d_opt != std::floor(*d_opt)) {
          throw InvalidArgument("pairing model needs an integer --d");
        }
        ex.d = static_cast<std::int64_t>(*d_opt);
      } else if (p_opt) {
        ex.p = *p_opt;
      } else if (d_opt) {
        ex.p = *d_opt / static_cast<double>(ex.n);
      } else {
        throw InvalidArgument(sim_model + " model needs --p or --d");
      }
      return cmd_simulate(ex, format);
    };
  });

  auto* construct = app.add_subcommand("construct", "Explicit trees and multipartite hosts");
  std::string leaf_tree;
  std::string connector;
  std::string multipartite;
  construct->add_option("--leaf-tree", leaf_tree, "n: binary tree with n leaves at equal depth");
  construct->add_option("--connector", connector, "m1,m2,n: connector tree");
  construct->add_option("--multipartite", multipartite, "a,b,...: complete multipartite graph");
  construct->callback(
      [&] { action = [&] { return cmd_construct(leaf_tree, connector, multipartite); }; });

  auto* arrow = app.add_subcommand("arrow", "Exhaustive check of H -> (G_1, ..., G_k)");
  std::string host;
  std::string targets;
  std::string witness_path;
  bool bipartite = false;
  std::size_t max_edges = kDefaultArrowEdgeCap;
  arrow->add_option("--host", host, "K6, K3,3, C5, P4, S4, M2,2,1, petersen, file:<path>")
      ->required();
  arrow->add_option("--targets", targets, "Comma-separated targets: C<n> or K<m1>x<m2>")
      ->required();
  arrow->add_flag("--bipartite", bipartite, "Treat the host as bipartitioned");
  arrow->add_option("--max-edges", max_edges, "Edge cap for the exhaustive search");
  arrow->add_option("--witness-out", witness_path, "Write a good coloring as 'u v color' lines");
  add_format(arrow, {"table", "json"});
  arrow->callback([&] {
    action = [&] {
      return cmd_arrow(host, targets, bipartite, max_edges, witness_path, format);
    };
  });

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the headline constants");
  bool as_json = false;
  reproduce->add_flag("--json", as_json, "Emit JSON");
  reproduce->callback([&] { action = [&] { return cmd_reproduce(as_json); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  CommandOutput result;
  try {
    result = action();
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << result.text;

  const json manifest = {
      {"tool_version", kToolVersion},
      {"command", app.get_subcommands().front()->get_name()},
      {"params", join_args(args)},
      {"seed", result.seed ? json(*result.seed) : json(nullptr)},
      {"timestamp", utc_timestamp()},
      {"output_checksum", checksum(result.text)},
  };
  if (manifest_path.empty()) {
    err << "manifest " << manifest.dump() << "\n";
  } else {
    std::ofstream file(manifest_path);
    if (!file) {
      err << "error: cannot write manifest '" << manifest_path << "'\n";
      return kExitError;
    }
    file << manifest.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace ramsey_lab::cli
