#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_lab/graph.hpp"

namespace ramsey_lab {

struct Target {
  enum class Kind { kCycle, kBiclique };
  Kind kind = Kind::kCycle;
  /// Cycle length (kCycle).
  std::int64_t length = 3;
  /// Side sizes (kBiclique).
  std::int64_t m1 = 1;
  std::int64_t m2 = 1;

  static Target cycle(std::int64_t length);
  static Target biclique(std::int64_t m1, std::int64_t m2);
  friend bool operator==(const Target&, const Target&) = default;
};

/// One target per color; color i (1-based) must avoid targets()[i-1].
class TargetSpec {
 public:
  explicit TargetSpec(std::vector<Target> targets);

  /// Parses a comma-separated list such as "C3,C3" or "C6,K2x3". Errors name
  /// the 1-based character position of the offending token.
  static TargetSpec parse(std::string_view text);

  std::size_t color_count() const { return targets_.size(); }
  const Target& operator[](std::size_t i) const { return targets_[i]; }
  const std::vector<Target>& targets() const { return targets_; }
  bool all_equal() const;
  std::string to_string() const;

 private:
  std::vector<Target> targets_;
};

/// Colors 1..k, one per host edge in Graph::edges() order.
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> colors;

  /// Subgraph of `host` formed by the edges of `color`.
  Graph color_class(Vertex vertex_count, int color) const;
};

inline constexpr Vertex kDefaultCycleVertexCap = 20;
inline constexpr std::size_t kDefaultArrowEdgeCap = 21;

/// True iff g has a simple cycle on exactly n vertices.
bool has_cycle_length(const Graph& g, std::int64_t n,
                      Vertex cap = kDefaultCycleVertexCap);

/// True iff disjoint A, B with |A| = m1, |B| = m2 exist with every A-B pair
/// adjacent. With `respect_bipartition`, A must lie in one part and B in the
/// other.
bool has_biclique(const Graph& g, std::int64_t m1, std::int64_t m2,
                  bool respect_bipartition = false,
                  Vertex cap = kDefaultCycleVertexCap);

/// Whether `g` contains `target` (bicliques across the bipartition when
/// `respect_bipartition`).
bool contains_target(const Graph& g, const Target& target,
                     bool respect_bipartition = false,
                     Vertex cap = kDefaultCycleVertexCap);

struct ArrowOptions {
  std::size_t max_edges = kDefaultArrowEdgeCap;
  Vertex max_vertices = kDefaultCycleVertexCap;
};

struct ArrowResult {
  bool arrows = false;
  /// Present iff !arrows.
  std::optional<EdgeColoring> witness;
  /// Search nodes visited (partial colorings tested).
  std::uint64_t colorings_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// H -> (G_1, ..., G_k): every k-coloring of E(H) has a color-i copy of G_i.
ArrowResult arrows(const Graph& host, const TargetSpec& targets,
                   const ArrowOptions& options = {});

/// Arrow relation on a bipartitioned host; biclique targets must respect the
/// bipartition.
ArrowResult bipartite_arrows(const Graph& host, const TargetSpec& targets,
                             const ArrowOptions& options = {});

/// A coloring with no color-i copy of G_i, or nullopt iff the host arrows.
std::optional<EdgeColoring> find_good_coloring(const Graph& host,
                                               const TargetSpec& targets,
                                               const ArrowOptions& options = {});

/// Independent re-check: true iff no color class contains its target.
bool is_good_coloring(const Graph& host, const EdgeColoring& coloring,
                      const TargetSpec& targets, bool respect_bipartition = false);

}  // namespace ramsey_lab
