#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ramsey_lab {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..N-1 with an optional part label per
/// vertex (a bipartition, or the classes of a complete multipartite graph).
/// Edges are stored normalized (u < v) and kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex vertex_count);
  /// Throws InvalidArgument on loops, out-of-range endpoints, or duplicates.
  Graph(Vertex vertex_count, std::vector<Edge> edges);

  Vertex vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Adds {u, v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);

  /// Part labels; empty when the graph carries no partition.
  std::span<const int> parts() const { return parts_; }
  bool has_parts() const { return !parts_.empty(); }
  int part(Vertex v) const { return parts_[v]; }
  int part_count() const;
  /// Throws InvalidArgument if the labeling has the wrong size or some edge
  /// joins two vertices with the same label.
  void set_parts(std::vector<int> parts);
  /// True when parts are present, exactly two classes exist, and no edge is
  /// internal to a class.
  bool is_bipartitioned() const;

  /// Complement (or, for bipartitioned graphs with `respect_parts`, the
  /// complement with respect to the complete bipartite graph).
  Graph complement(bool respect_parts = false) const;

  friend bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.vertex_count_ == rhs.vertex_count_ && lhs.edges_ == rhs.edges_ &&
           lhs.parts_ == rhs.parts_;
  }

 private:
  Vertex vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> parts_;
};

/// Multigraph from the pairing model: loops and parallel edges allowed.
/// A loop contributes 2 to its vertex degree.
class Multigraph {
 public:
  explicit Multigraph(Vertex vertex_count);

  Vertex vertex_count() const { return static_cast<Vertex>(degree_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::int64_t> degrees() const { return degree_; }

  void add_edge(Vertex u, Vertex v);
  std::size_t loop_count() const;
  std::size_t parallel_edge_count() const;
  bool is_simple() const { return loop_count() == 0 && parallel_edge_count() == 0; }
  /// Throws InvalidArgument when not simple.
  Graph to_simple() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::int64_t> degree_;
};

/// Small well-known hosts.
Graph complete_graph(Vertex n);
Graph complete_bipartite_graph(Vertex a, Vertex b);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph petersen_graph();

/// Unweighted distances from `source`; -1 for unreachable vertices.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

/// Proper 2-coloring (0/1 per vertex) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace ramsey_lab
