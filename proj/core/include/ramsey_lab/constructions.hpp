#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey_lab/graph.hpp"

namespace ramsey_lab {

/// Rooted tree with parent/children maps, depths, and two designated leaf
/// sets (used by connector trees; empty otherwise).
class RootedTree {
 public:
  /// Builds from a parent array; `parent[root]` must be -1. Throws
  /// InvalidArgument if the array does not describe a tree.
  RootedTree(std::vector<Vertex> parent, Vertex root);

  Vertex vertex_count() const { return static_cast<Vertex>(parent_.size()); }
  Vertex root() const { return root_; }
  /// -1 for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::int32_t depth(Vertex v) const { return depth_[v]; }
  std::int32_t height() const;
  std::vector<Vertex> leaves() const;
  std::size_t max_degree() const;

  std::span<const Vertex> left_leaves() const { return left_leaves_; }
  std::span<const Vertex> right_leaves() const { return right_leaves_; }
  void set_designated_leaves(std::vector<Vertex> left, std::vector<Vertex> right);

  Graph to_graph() const;

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::int32_t> depth_;
  Vertex root_;
  std::vector<Vertex> left_leaves_;
  std::vector<Vertex> right_leaves_;
};

/// Exponents t_1 > ... > t_r >= 0 with n = sum 2^{t_i}.
std::vector<int> binary_decomposition(std::int64_t n);

/// Binary tree with exactly n leaves, all at depth ceil(log2 n), and at most
/// 2n + ceil(log2 n) - 2 vertices. For n a power of two this is the perfect
/// tree. Otherwise perfect trees of heights t_1 > ... > t_r hang off a path
/// v_1 ... v_{t_1 - t_r + 1} (rooted at v_1), the i-th at v_{t_1 - t_i + 1}.
/// Requires n >= 2.
RootedTree build_leaf_tree(std::int64_t n);

/// Leaf trees for m1 and m2 joined root-to-root by a path of length
/// n - 1 - ceil(log2 m1) - ceil(log2 m2), so every designated left leaf is
/// at distance exactly n - 1 from every designated right leaf. A side with
/// m = 1 is a single vertex. The path length must be at least 1.
RootedTree build_connector_tree(std::int64_t m1, std::int64_t m2, std::int64_t n);

inline constexpr Vertex kDefaultExpansionCap = 24;
inline constexpr Vertex kDefaultEmbeddingCap = 40;

struct ExpansionCheck {
  bool holds = false;
  /// Smallest violating set, present iff !holds.
  std::optional<std::vector<Vertex>> violating_set;
};

/// Tests |N(X)| >= (d + 1)|X| for every X with 1 <= |X| <= max(1, 2 tree_size - 2).
/// Subsets are enumerated by increasing size, so a reported witness has
/// minimum size.
ExpansionCheck fp_condition_check(const Graph& g, std::int64_t tree_size,
                                  std::int64_t d,
                                  Vertex cap = kDefaultExpansionCap);

struct EmbeddingResult {
  /// image[v] = host vertex for tree vertex v; empty when no embedding exists.
  std::vector<Vertex> image;
  std::uint64_t nodes_explored = 0;
  bool found() const { return !image.empty(); }
};

/// Exhaustive backtracking search for an injective adjacency-preserving map.
EmbeddingResult embed_tree_backtracking(const Graph& g, const RootedTree& tree,
                                        Vertex cap = kDefaultEmbeddingCap);

/// Complete multipartite graph with the given class sizes; part labels are
/// the class indices.
Graph build_complete_multipartite(std::span<const std::int64_t> sizes);

}  // namespace ramsey_lab
