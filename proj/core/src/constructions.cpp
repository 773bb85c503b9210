#include "ramsey_lab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/numeric.hpp"

namespace ramsey_lab {
namespace {

// Appends a perfect binary tree of the given height below `attach_to` (or as
// a new root when attach_to < 0) and returns its root.
Vertex append_perfect_tree(std::vector<Vertex>& parent, int height, Vertex attach_to) {
  const auto root = static_cast<Vertex>(parent.size());
  parent.push_back(attach_to);
  std::vector<Vertex> level{root};
  for (int h = 0; h < height; ++h) {
    std::vector<Vertex> next;
    next.reserve(level.size() * 2);
    for (const Vertex v : level) {
      for (int child = 0; child < 2; ++child) {
        next.push_back(static_cast<Vertex>(parent.size()));
        parent.push_back(v);
      }
    }
    level = std::move(next);
  }
  return root;
}

// Parent array of the leaf tree for n >= 1 (n = 1 is a single vertex).
std::vector<Vertex> leaf_tree_parents(std::int64_t n) {
  std::vector<Vertex> parent;
  const auto exponents = binary_decomposition(n);
  if (exponents.size() == 1) {
    append_perfect_tree(parent, exponents.front(), -1);
    return parent;
  }
  const int t1 = exponents.front();
  const int tr = exponents.back();
  // Path v_1 ... v_{t1 - tr + 1}; v_j gets id j - 1 and v_1 is the root.
  const int path_len = t1 - tr + 1;
  for (int j = 0; j < path_len; ++j) parent.push_back(j == 0 ? -1 : j - 1);
  for (const int ti : exponents) {
    const Vertex anchor = t1 - ti;  // v_{t1 - ti + 1}
    append_perfect_tree(parent, ti, anchor);
  }
  return parent;
}

RootedTree root_edges(Vertex n, const std::vector<Edge>& edges, Vertex root) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  parent[root] = -1;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Vertex v : adj[u]) {
      if (parent[v] == -2) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return RootedTree(std::move(parent), root);
}

std::vector<Vertex> tree_leaves(const std::vector<Vertex>& parent) {
  std::vector<bool> has_child(parent.size(), false);
  for (const Vertex p : parent) {
    if (p >= 0) has_child[p] = true;
  }
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (!has_child[v]) leaves.push_back(static_cast<Vertex>(v));
  }
  return leaves;
}

}  // namespace

RootedTree::RootedTree(std::vector<Vertex> parent, Vertex root)
    : parent_(std::move(parent)), root_(root) {
  const auto n = static_cast<Vertex>(parent_.size());
  if (root < 0 || root >= n) throw InvalidArgument("tree root out of range");
  if (parent_[root] != -1) throw InvalidArgument("root must have parent -1");
  children_.resize(parent_.size());
  for (Vertex v = 0; v < n; ++v) {
    if (v == root) continue;
    const Vertex p = parent_[v];
    if (p < 0 || p >= n || p == v) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has no valid parent");
    }
    children_[p].push_back(v);
  }
  depth_.assign(parent_.size(), -1);
  depth_[root] = 0;
  std::deque<Vertex> queue{root};
  Vertex reached = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    ++reached;
    for (const Vertex c : children_[u]) {
      depth_[c] = depth_[u] + 1;
      queue.push_back(c);
    }
  }
  if (reached != n) throw InvalidArgument("parent array contains a cycle");
}

std::int32_t RootedTree::height() const {
  return *std::max_element(depth_.begin(), depth_.end());
}

std::vector<Vertex> RootedTree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (children_[v].empty()) out.push_back(v);
  }
  return out;
}

std::size_t RootedTree::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    best = std::max(best, children_[v].size() + (parent_[v] >= 0 ? 1 : 0));
  }
  return best;
}

void RootedTree::set_designated_leaves(std::vector<Vertex> left, std::vector<Vertex> right) {
  for (const auto* set : {&left, &right}) {
    for (const Vertex v : *set) {
      if (v < 0 || v >= vertex_count()) throw InvalidArgument("designated leaf out of range");
    }
  }
  left_leaves_ = std::move(left);
  right_leaves_ = std::move(right);
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (parent_[v] >= 0) edges.push_back({parent_[v], v});
  }
  return Graph(vertex_count(), std::move(edges));
}

std::vector<int> binary_decomposition(std::int64_t n) {
  if (n < 1) throw InvalidArgument("binary_decomposition: n must be >= 1");
  std::vector<int> exponents;
  for (int bit = 62; bit >= 0; --bit) {
    if ((static_cast<std::uint64_t>(n) >> bit) & 1u) exponents.push_back(bit);
  }
  return exponents;
}

RootedTree build_leaf_tree(std::int64_t n) {
  if (n < 2) throw InvalidArgument("build_leaf_tree: n must be >= 2");
  if (n > (std::int64_t{1} << 28)) throw InvalidArgument("build_leaf_tree: n too large");
  return RootedTree(leaf_tree_parents(n), 0);
}

RootedTree build_connector_tree(std::int64_t m1, std::int64_t m2, std::int64_t n) {
  if (m1 < 1 || m2 < 1) throw InvalidArgument("build_connector_tree: m1, m2 must be >= 1");
  if (m1 > (std::int64_t{1} << 24) || m2 > (std::int64_t{1} << 24)) {
    throw InvalidArgument("build_connector_tree: m1, m2 too large");
  }
  const std::int64_t path_length =
      n - 1 - ceil_log2(static_cast<std::uint64_t>(m1)) - ceil_log2(static_cast<std::uint64_t>(m2));
  if (path_length < 1) {
    throw InvalidArgument("build_connector_tree: connecting path length " +
                          std::to_string(path_length) + " < 1 for n = " + std::to_string(n));
  }

  const auto left = leaf_tree_parents(m1);
  const auto right = leaf_tree_parents(m2);
  std::vector<Edge> edges;
  Vertex next = 0;
  auto append = [&](const std::vector<Vertex>& parents) {
    const Vertex offset = next;
    for (std::size_t v = 0; v < parents.size(); ++v) {
      if (parents[v] >= 0) edges.push_back({offset + parents[v], offset + static_cast<Vertex>(v)});
    }
    next += static_cast<Vertex>(parents.size());
    return offset;
  };

  const Vertex left_root = append(left);
  // Interior path vertices between the two roots.
  Vertex prev = left_root;
  for (std::int64_t i = 1; i < path_length; ++i) {
    edges.push_back({prev, next});
    prev = next++;
  }
  const Vertex right_root = append(right);
  edges.push_back({prev, right_root});

  RootedTree tree = root_edges(next, edges, left_root);
  std::vector<Vertex> left_leaves = tree_leaves(left);
  std::vector<Vertex> right_leaves = tree_leaves(right);
  for (auto& v : right_leaves) v += right_root;
  tree.set_designated_leaves(std::move(left_leaves), std::move(right_leaves));
  return tree;
}

ExpansionCheck fp_condition_check(const Graph& g, std::int64_t tree_size, std::int64_t d,
                                  Vertex cap) {
  const Vertex n = g.vertex_count();
  if (n > cap || n > 63) {
    throw CapExceeded("fp_condition_check: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(std::min<Vertex>(cap, 63)));
  }
  if (tree_size < 1) throw InvalidArgument("fp_condition_check: tree size must be >= 1");
  if (d < 0) throw InvalidArgument("fp_condition_check: d must be >= 0");

  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  // nT = 1 would leave the range empty; singletons are still checked.
  const std::int64_t max_size = std::min<std::int64_t>(std::max<std::int64_t>(1, 2 * tree_size - 2), n);
  std::vector<Vertex> pick;
  for (std::int64_t size = 1; size <= max_size; ++size) {
    const auto need = static_cast<std::int64_t>((d + 1) * size);
    // Lexicographic combinations of `size` vertices.
    pick.resize(static_cast<std::size_t>(size));
    for (std::int64_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      std::uint64_t covered = 0;
      for (const Vertex v : pick) covered |= nbr[v];
      if (std::popcount(covered) < need) return ExpansionCheck{false, pick};
      std::int64_t i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::int64_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return ExpansionCheck{true, std::nullopt};
}

namespace {

struct EmbedSearch {
  const Graph& host;
  const RootedTree& tree;
  std::vector<Vertex> order;
  std::vector<Vertex> image;
  std::vector<bool> used;
  std::uint64_t nodes = 0;

  std::size_t tree_degree(Vertex v) const {
    return tree.children(v).size() + (tree.parent(v) >= 0 ? 1 : 0);
  }

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    const Vertex v = order[k];
    auto try_vertex = [&](Vertex h) {
      if (used[h] || host.degree(h) < tree_degree(v)) return false;
      ++nodes;
      used[h] = true;
      image[v] = h;
      if (extend(k + 1)) return true;
      used[h] = false;
      image[v] = -1;
      return false;
    };
    if (tree.parent(v) < 0) {
      for (Vertex h = 0; h < host.vertex_count(); ++h) {
        if (try_vertex(h)) return true;
      }
      return false;
    }
    for (const Vertex h : host.neighbors(image[tree.parent(v)])) {
      if (try_vertex(h)) return true;
    }
    return false;
  }
};

}  // namespace

EmbeddingResult embed_tree_backtracking(const Graph& g, const RootedTree& tree, Vertex cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("embed_tree_backtracking: " + std::to_string(g.vertex_count()) +
                      " host vertices exceeds cap " + std::to_string(cap));
  }
  EmbeddingResult result;
  if (tree.vertex_count() > g.vertex_count()) return result;

  EmbedSearch search{g, tree, {}, {}, {}, 0};
  std::deque<Vertex> queue{tree.root()};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    search.order.push_back(u);
    for (const Vertex c : tree.children(u)) queue.push_back(c);
  }
  search.image.assign(static_cast<std::size_t>(tree.vertex_count()), -1);
  search.used.assign(static_cast<std::size_t>(g.vertex_count()), false);
  if (search.extend(0)) result.image = std::move(search.image);
  result.nodes_explored = search.nodes;
  return result;
}

Graph build_complete_multipartite(std::span<const std::int64_t> sizes) {
  if (sizes.empty()) throw InvalidArgument("build_complete_multipartite: no classes");
  std::vector<int> parts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InvalidArgument("build_complete_multipartite: class size must be >= 1");
    parts.insert(parts.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  }
  const auto n = static_cast<Vertex>(parts.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (parts[u] != parts[v]) edges.push_back({u, v});
    }
  }
  Graph g(n, std::move(edges));
  g.set_parts(std::move(parts));
  return g;
}

}  // namespace ramsey_lab
