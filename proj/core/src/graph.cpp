#include "ramsey_lab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ramsey_lab/errors.hpp"

namespace ramsey_lab {
namespace {

Edge normalized(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph::Graph(Vertex vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvalidArgument("vertex count must be >= 0");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(Vertex vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            "} out of range");
    }
    edges_.push_back(normalized(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw InvalidArgument("edge endpoint out of range");
  }
  if (has_edge(u, v)) return false;
  if (has_parts() && parts_[u] == parts_[v]) {
    throw InvalidArgument("edge inside part " + std::to_string(parts_[u]));
  }
  const Edge e = normalized(u, v);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
  adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  return true;
}

int Graph::part_count() const {
  if (parts_.empty()) return 0;
  return *std::max_element(parts_.begin(), parts_.end()) + 1;
}

void Graph::set_parts(std::vector<int> parts) {
  if (parts.empty()) {
    parts_.clear();
    return;
  }
  if (parts.size() != static_cast<std::size_t>(vertex_count_)) {
    throw InvalidArgument("part labeling has " + std::to_string(parts.size()) +
                          " entries for " + std::to_string(vertex_count_) + " vertices");
  }
  for (const int p : parts) {
    if (p < 0) throw InvalidArgument("part labels must be >= 0");
  }
  for (const auto& e : edges_) {
    if (parts[e.u] == parts[e.v]) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            "} lies inside part " + std::to_string(parts[e.u]));
    }
  }
  parts_ = std::move(parts);
}

bool Graph::is_bipartitioned() const { return has_parts() && part_count() == 2; }

Graph Graph::complement(bool respect_parts) const {
  if (respect_parts && !is_bipartitioned()) {
    throw InvalidArgument("bipartite complement needs a two-part labeling");
  }
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count_; ++u) {
    for (Vertex v = u + 1; v < vertex_count_; ++v) {
      if (respect_parts && parts_[u] == parts_[v]) continue;
      if (!has_edge(u, v)) out.push_back({u, v});
    }
  }
  Graph g(vertex_count_, std::move(out));
  if (respect_parts) g.set_parts(parts_);
  return g;
}

Multigraph::Multigraph(Vertex vertex_count)
    : degree_(static_cast<std::size_t>(std::max<Vertex>(vertex_count, 0)), 0) {
  if (vertex_count < 0) throw InvalidArgument("vertex count must be >= 0");
}

void Multigraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
    throw InvalidArgument("edge endpoint out of range");
  }
  edges_.push_back(normalized(u, v));
  degree_[u] += 1;
  degree_[v] += 1;
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; }));
}

std::size_t Multigraph::parallel_edge_count() const {
  std::vector<Edge> sorted;
  for (const auto& e : edges_) {
    if (e.u != e.v) sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end());
  std::size_t extra = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) ++extra;
  }
  return extra;
}

Graph Multigraph::to_simple() const {
  if (!is_simple()) throw InvalidArgument("multigraph has loops or parallel edges");
  return Graph(vertex_count(), edges_);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  Graph g(a + b, std::move(edges));
  std::vector<int> parts(static_cast<std::size_t>(a + b), 1);
  std::fill(parts.begin(), parts.begin() + a, 0);
  g.set_parts(std::move(parts));
  return g;
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace ramsey_lab
