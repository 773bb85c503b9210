#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_lab/graph.hpp"

namespace ramsey_lab {

/// G(N, p): each of the N(N-1)/2 pairs independently with probability p.
Graph sample_gnp(Vertex n, double p, std::uint64_t seed);

/// G(N1, N2, p): each pair of V1 x V2 independently with probability p.
/// Vertices 0..N1-1 form part 0, the rest part 1.
Graph sample_bipartite(Vertex n1, Vertex n2, double p, std::uint64_t seed);

struct PairingSample {
  Multigraph graph;
  /// Pairings drawn; 1 unless simple-only rejection was requested.
  std::uint64_t attempts = 1;
};

inline constexpr std::uint64_t kDefaultMaxPairingAttempts = 1'000'000;

/// Uniform perfect matching of N*d points in N buckets of d points,
/// projected to a d-regular multigraph. With `simple_only`, pairings are
/// redrawn until the projection is simple (CapExceeded after
/// `max_attempts`).
PairingSample sample_pairing(Vertex n, std::int64_t d, std::uint64_t seed,
                             bool simple_only = false,
                             std::uint64_t max_attempts = kDefaultMaxPairingAttempts);

struct AcceptanceStats {
  std::uint64_t attempts = 0;
  std::uint64_t simple = 0;
  double rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(simple) / attempts;
  }
};

/// Draws `attempts` independent pairings (stream i seeded by
/// derive_seed(seed, i)) and counts the simple ones.
AcceptanceStats pairing_simple_acceptance(Vertex n, std::int64_t d,
                                          std::uint64_t attempts,
                                          std::uint64_t seed);

/// Two disjoint equal-size vertex sets with no edge between them.
struct HoleWitness {
  std::vector<Vertex> s;
  std::vector<Vertex> t;
};

/// Checks every HoleWitness invariant against `g` (for bipartitioned hosts,
/// S and T must lie in different classes).
bool verify_hole(const Graph& g, const HoleWitness& witness, std::size_t size);

inline constexpr Vertex kDefaultHoleVertexCap = 60;
inline constexpr std::int64_t kDefaultHoleSizeCap = 8;

/// Exact search: branch and bound over S (in increasing vertex order) keeping
/// the common non-neighborhood of S as a bitset; T is any s-subset of it.
/// Bipartitioned hosts only search S in part 0 and T in part 1.
std::optional<HoleWitness> find_hole_exact(const Graph& g, std::int64_t s,
                                           Vertex vertex_cap = kDefaultHoleVertexCap,
                                           std::int64_t size_cap = kDefaultHoleSizeCap);

/// Randomized greedy restarts. Any returned witness has been verified;
/// nullopt means "not found", not "does not exist".
std::optional<HoleWitness> find_hole_heuristic(const Graph& g, std::int64_t s,
                                               std::int64_t iterations,
                                               std::uint64_t seed);

enum class HoleModel { kGnp, kBipartite, kPairing };
enum class SearchMode { kAuto, kExact, kHeuristic };

std::string_view to_string(HoleModel model);
std::string_view to_string(SearchMode mode);
HoleModel parse_hole_model(std::string_view name);
SearchMode parse_search_mode(std::string_view name);

struct HoleExperiment {
  HoleModel model = HoleModel::kGnp;
  /// Vertex count (per side for the bipartite model).
  Vertex n = 0;
  /// Hole side size |S| = |T|.
  std::int64_t s = 1;
  /// Edge probability for gnp/bipartite.
  double p = 0.0;
  /// Degree for the pairing model.
  std::int64_t d = 0;
  bool simple_only = false;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::kAuto;
  std::int64_t heuristic_iterations = 200;
  /// Worker cap; 0 means RAMSEY_LAB_THREADS (or 1).
  unsigned threads = 0;
};

struct TrialReport {
  HoleExperiment experiment;
  std::int64_t trials = 0;
  std::int64_t holes_found = 0;
  double frequency = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  /// Effective search mode ("exact" or "heuristic").
  SearchMode mode = SearchMode::kExact;
  /// Pairing model with simple_only: total pairings drawn.
  std::optional<std::uint64_t> pairing_attempts;
  std::string version;
};

/// 95% Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials);

/// Runs `trials` independent samples (trial i seeded by derive_seed(seed, i))
/// and counts those containing a hole with sides of size s.
TrialReport estimate_hole_probability(const HoleExperiment& experiment);

/// Worker count from RAMSEY_LAB_THREADS, clamped to [1, hardware threads].
unsigned configured_threads(unsigned requested = 0);

}  // namespace ramsey_lab
