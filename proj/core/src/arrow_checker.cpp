#include "ramsey_lab/arrow_checker.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <string>

#include "ramsey_lab/errors.hpp"

namespace ramsey_lab {
namespace {

using Mask = std::uint64_t;

constexpr Vertex kMaskVertexLimit = 64;

Mask bit(Vertex v) { return Mask{1} << v; }

void check_vertex_cap(const Graph& g, Vertex cap, const char* what) {
  const Vertex limit = std::min(cap, kMaskVertexLimit);
  if (g.vertex_count() > limit) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                      " vertices exceeds cap " + std::to_string(limit));
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

// Simple path from `at` to `target` with exactly `remaining` more edges,
// avoiding `visited`.
bool path_of_length(const std::vector<Mask>& adj, Vertex at, Vertex target,
                    std::int64_t remaining, Mask visited) {
  if (remaining == 1) return (adj[at] & bit(target)) != 0;
  Mask next = adj[at] & ~visited & ~bit(target);
  while (next != 0) {
    const auto w = static_cast<Vertex>(std::countr_zero(next));
    next &= next - 1;
    if (path_of_length(adj, w, target, remaining - 1, visited | bit(w))) return true;
  }
  return false;
}

// Cycles of length n whose minimum vertex is `start`: paths through vertices
// above `start` only.
bool cycle_from(const std::vector<Mask>& adj, Vertex start, Vertex at, std::int64_t remaining,
                Mask visited, Mask allowed) {
  if (remaining == 0) return (adj[at] & bit(start)) != 0;
  Mask next = adj[at] & allowed & ~visited;
  while (next != 0) {
    const auto w = static_cast<Vertex>(std::countr_zero(next));
    next &= next - 1;
    if (cycle_from(adj, start, w, remaining - 1, visited | bit(w), allowed)) return true;
  }
  return false;
}

bool masks_have_cycle(const std::vector<Mask>& adj, std::int64_t n) {
  const auto count = static_cast<Vertex>(adj.size());
  if (n > count) return false;
  for (Vertex s = 0; s < count; ++s) {
    const Mask above = (s + 1 >= 64) ? 0 : ~((Mask{2} << s) - 1);
    if (std::popcount(adj[s] & above) < 2) continue;
    if (cycle_from(adj, s, s, n - 1, bit(s), above)) return true;
  }
  return false;
}

// Calls fn(subset_mask) for each k-subset of `pool`; stops when fn returns true.
template <typename Fn>
bool for_each_subset(Mask pool, std::int64_t k, Mask acc, const Fn& fn) {
  if (k == 0) return fn(acc);
  if (std::popcount(pool) < k) return false;
  while (pool != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(pool));
    pool &= pool - 1;
    if (std::popcount(pool) < k - 1) return false;
    if (for_each_subset(pool, k - 1, acc | bit(v), fn)) return true;
  }
  return false;
}

Mask common_neighbors(const std::vector<Mask>& adj, Mask set) {
  Mask common = ~Mask{0};
  while (set != 0) {
    common &= adj[std::countr_zero(set)];
    set &= set - 1;
  }
  return common;
}

// Biclique A-B (|A| = m1, |B| = m2) with A drawn from `a_pool`, B from
// `b_pool`.
bool masks_have_biclique(const std::vector<Mask>& adj, std::int64_t m1, std::int64_t m2,
                         Mask a_pool, Mask b_pool) {
  return for_each_subset(a_pool, m1, 0, [&](Mask a) {
    return std::popcount(common_neighbors(adj, a) & b_pool & ~a) >= m2;
  });
}

// Biclique with x in A and y in B (x adjacent to y).
bool biclique_through(const std::vector<Mask>& adj, std::int64_t m1, std::int64_t m2, Vertex x,
                      Vertex y) {
  const Mask a_rest_pool = adj[y] & ~bit(x);
  return for_each_subset(a_rest_pool, m1 - 1, bit(x), [&](Mask a) {
    const Mask common = common_neighbors(adj, a) & ~a;
    return (common & bit(y)) != 0 && std::popcount(common) >= m2;
  });
}

bool target_through_edge(const std::vector<Mask>& adj, const Target& target, Vertex u, Vertex v) {
  if (target.kind == Target::Kind::kCycle) {
    if (target.length > static_cast<std::int64_t>(adj.size())) return false;
    return path_of_length(adj, u, v, target.length - 1, bit(u) | bit(v));
  }
  return biclique_through(adj, target.m1, target.m2, u, v) ||
         biclique_through(adj, target.m1, target.m2, v, u);
}

std::size_t parse_number(std::string_view text, std::size_t& pos, std::size_t token_start,
                         std::string_view whole) {
  const std::size_t begin = pos;
  std::size_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
    if (value > 1'000'000) break;
    ++pos;
  }
  if (pos == begin) {
    throw InvalidArgument("malformed target '" + std::string(whole) + "' at position " +
                          std::to_string(token_start + pos + 1) + ": expected a number");
  }
  return value;
}

struct ColoringSearch {
  const Graph& host;
  const TargetSpec& targets;
  std::vector<std::size_t> order;  // host edge indices in search order
  std::vector<std::vector<Mask>> classes;
  std::vector<int> colors;  // by host edge index
  std::uint64_t nodes = 0;
  bool fix_first = false;

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t edge_index = order[depth];
    const Edge e = host.edges()[edge_index];
    const int k = static_cast<int>(targets.color_count());
    const int last_color = (depth == 0 && fix_first) ? 1 : k;
    for (int color = 1; color <= last_color; ++color) {
      ++nodes;
      auto& adj = classes[static_cast<std::size_t>(color - 1)];
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
      const bool completes = target_through_edge(adj, targets[color - 1], e.u, e.v);
      if (!completes) {
        colors[edge_index] = color;
        if (search(depth + 1)) return true;
        colors[edge_index] = 0;
      }
      adj[e.u] &= ~bit(e.v);
      adj[e.v] &= ~bit(e.u);
    }
    return false;
  }
};

ArrowResult run_arrow_search(const Graph& host, const TargetSpec& targets,
                             const ArrowOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  check_vertex_cap(host, options.max_vertices, "arrows");
  if (host.edge_count() > options.max_edges) {
    throw CapExceeded("arrows: " + std::to_string(host.edge_count()) +
                      " edges exceeds cap " + std::to_string(options.max_edges));
  }

  ColoringSearch search{host, targets, {}, {}, {}, 0, targets.all_equal()};
  search.order.resize(host.edge_count());
  std::iota(search.order.begin(), search.order.end(), std::size_t{0});
  const auto edges = host.edges();
  std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b) {
    return host.degree(edges[a].u) + host.degree(edges[a].v) >
           host.degree(edges[b].u) + host.degree(edges[b].v);
  });
  search.classes.assign(targets.color_count(),
                        std::vector<Mask>(static_cast<std::size_t>(host.vertex_count()), 0));
  search.colors.assign(host.edge_count(), 0);

  ArrowResult result;
  if (search.search(0)) {
    result.arrows = false;
    result.witness = EdgeColoring{std::vector<Edge>(edges.begin(), edges.end()), search.colors};
  } else {
    result.arrows = true;
  }
  result.colorings_examined = search.nodes;
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace

Target Target::cycle(std::int64_t length) {
  if (length < 3) throw InvalidArgument("cycle target needs length >= 3");
  Target t;
  t.kind = Kind::kCycle;
  t.length = length;
  return t;
}

Target Target::biclique(std::int64_t m1, std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw InvalidArgument("biclique target needs sides >= 1");
  Target t;
  t.kind = Kind::kBiclique;
  t.m1 = m1;
  t.m2 = m2;
  return t;
}

TargetSpec::TargetSpec(std::vector<Target> targets) : targets_(std::move(targets)) {
  if (targets_.empty()) throw InvalidArgument("target list must name at least one color");
}

TargetSpec TargetSpec::parse(std::string_view text) {
  std::vector<Target> out;
  std::size_t token_start = 0;
  while (true) {
    const std::size_t comma = text.find(',', token_start);
    const std::string_view token =
        text.substr(token_start, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - token_start);
    auto fail = [&](std::size_t offset, const std::string& why) -> TargetSpec {
      throw InvalidArgument("malformed target '" + std::string(token) + "' at position " +
                            std::to_string(token_start + offset + 1) + ": " + why);
    };
    if (token.empty()) return fail(0, "empty target");
    std::size_t pos = 1;
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (kind == 'C') {
      const auto n = parse_number(token, pos, token_start, token);
      if (pos != token.size()) return fail(pos, "unexpected character");
      if (n < 3) return fail(1, "cycle length must be >= 3");
      out.push_back(Target::cycle(static_cast<std::int64_t>(n)));
    } else if (kind == 'K') {
      const auto m1 = parse_number(token, pos, token_start, token);
      if (pos >= token.size() || (token[pos] != 'x' && token[pos] != 'X')) {
        return fail(pos, "expected 'x' between biclique sides");
      }
      ++pos;
      const auto m2 = parse_number(token, pos, token_start, token);
      if (pos != token.size()) return fail(pos, "unexpected character");
      if (m1 < 1 || m2 < 1) return fail(1, "biclique sides must be >= 1");
      out.push_back(Target::biclique(static_cast<std::int64_t>(m1), static_cast<std::int64_t>(m2)));
    } else {
      return fail(0, "expected 'C<n>' or 'K<m1>x<m2>'");
    }
    if (comma == std::string_view::npos) break;
    token_start = comma + 1;
  }
  return TargetSpec(std::move(out));
}

bool TargetSpec::all_equal() const {
  return std::all_of(targets_.begin(), targets_.end(),
                     [&](const Target& t) { return t == targets_.front(); });
}

std::string TargetSpec::to_string() const {
  std::string out;
  for (const auto& t : targets_) {
    if (!out.empty()) out += ',';
    if (t.kind == Target::Kind::kCycle) {
      out += "C" + std::to_string(t.length);
    } else {
      out += "K" + std::to_string(t.m1) + "x" + std::to_string(t.m2);
    }
  }
  return out;
}

Graph EdgeColoring::color_class(Vertex vertex_count, int color) const {
  std::vector<Edge> selected;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (colors[i] == color) selected.push_back(edges[i]);
  }
  return Graph(vertex_count, std::move(selected));
}

bool has_cycle_length(const Graph& g, std::int64_t n, Vertex cap) {
  if (n < 3) throw InvalidArgument("has_cycle_length: n must be >= 3");
  check_vertex_cap(g, cap, "has_cycle_length");
  return masks_have_cycle(adjacency_masks(g), n);
}

bool has_biclique(const Graph& g, std::int64_t m1, std::int64_t m2, bool respect_bipartition,
                  Vertex cap) {
  if (m1 < 1 || m2 < 1) throw InvalidArgument("has_biclique: sides must be >= 1");
  check_vertex_cap(g, cap, "has_biclique");
  const auto adj = adjacency_masks(g);
  const Vertex n = g.vertex_count();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  if (!respect_bipartition) return masks_have_biclique(adj, m1, m2, all, all);
  if (!g.has_parts()) throw InvalidArgument("has_biclique: host has no part labels");
  std::vector<Mask> part_mask(static_cast<std::size_t>(g.part_count()), 0);
  for (Vertex v = 0; v < n; ++v) part_mask[static_cast<std::size_t>(g.part(v))] |= bit(v);
  for (std::size_t pa = 0; pa < part_mask.size(); ++pa) {
    for (std::size_t pb = 0; pb < part_mask.size(); ++pb) {
      if (pa == pb) continue;
      if (masks_have_biclique(adj, m1, m2, part_mask[pa], part_mask[pb])) return true;
    }
  }
  return false;
}

bool contains_target(const Graph& g, const Target& target, bool respect_bipartition, Vertex cap) {
  if (target.kind == Target::Kind::kCycle) return has_cycle_length(g, target.length, cap);
  return has_biclique(g, target.m1, target.m2, respect_bipartition, cap);
}

ArrowResult arrows(const Graph& host, const TargetSpec& targets, const ArrowOptions& options) {
  return run_arrow_search(host, targets, options);
}

ArrowResult bipartite_arrows(const Graph& host, const TargetSpec& targets,
                             const ArrowOptions& options) {
  if (!host.is_bipartitioned()) {
    throw InvalidArgument("bipartite_arrows: host must carry a two-class bipartition");
  }
  // In a bipartite host every biclique already has its sides in different
  // classes, so the unrestricted search is the class-respecting one.
  return run_arrow_search(host, targets, options);
}

std::optional<EdgeColoring> find_good_coloring(const Graph& host, const TargetSpec& targets,
                                               const ArrowOptions& options) {
  return run_arrow_search(host, targets, options).witness;
}

bool is_good_coloring(const Graph& host, const EdgeColoring& coloring, const TargetSpec& targets,
                      bool respect_bipartition) {
  if (coloring.colors.size() != host.edge_count()) return false;
  if (!std::equal(coloring.edges.begin(), coloring.edges.end(), host.edges().begin(),
                  host.edges().end())) {
    return false;
  }
  const int k = static_cast<int>(targets.color_count());
  for (const int c : coloring.colors) {
    if (c < 1 || c > k) return false;
  }
  for (int color = 1; color <= k; ++color) {
    Graph cls = coloring.color_class(host.vertex_count(), color);
    if (respect_bipartition && host.has_parts()) {
      cls.set_parts(std::vector<int>(host.parts().begin(), host.parts().end()));
    }
    if (contains_target(cls, targets[color - 1], respect_bipartition && host.has_parts(),
                        std::min<Vertex>(host.vertex_count(), kMaskVertexLimit))) {
      return false;
    }
  }
  return true;
}

}  // namespace ramsey_lab
