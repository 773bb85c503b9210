#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code with the library beyond Graph.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey_lab/arrow_checker.hpp"
#include "ramsey_lab/graph.hpp"
#include "ramsey_lab/numeric.hpp"

namespace oracle {

using ramsey_lab::BigInt;
using ramsey_lab::Graph;
using ramsey_lab::Rational;
using ramsey_lab::Vertex;

inline BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt pow_big(std::int64_t base, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// X(a) from the fully simplified factorial display (no binomials, no M(i)).
inline Rational first_moment_simplified(std::int64_t m, std::int64_t c, std::int64_t d,
                                        std::int64_t adm) {
  const std::int64_t N = c * m;
  const std::int64_t md = m * d;
  const std::int64_t Nd = N * d;
  const BigInt num = factorial(N) * factorial(md) * factorial(Nd - md - adm) *
                     factorial(Nd / 2) * factorial(Nd - 2 * md) * pow_big(2, adm);
  const BigInt den = factorial(m) * factorial(m) * factorial(adm) * factorial(N - 2 * m) *
                     factorial(Nd - 2 * md - adm) * factorial((md - adm) / 2) *
                     factorial(Nd) * factorial((Nd - md - adm) / 2);
  return Rational(num, den);
}

// Counts perfect matchings of {0..n-1} by recursive pairing of the lowest point.
inline std::int64_t count_matchings(int n) {
  std::vector<bool> used(n, false);
  std::function<std::int64_t()> rec = [&]() -> std::int64_t {
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (!used[i]) {
        first = i;
        break;
      }
    }
    if (first < 0) return 1;
    used[first] = true;
    std::int64_t total = 0;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      total += rec();
      used[j] = false;
    }
    used[first] = false;
    return total;
  };
  return n % 2 == 0 ? rec() : 0;
}

// Direct transcription of the regular-model exponent in double precision.
inline double regular_exponent_direct(double a, double c, double d) {
  auto g = [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); };
  return g(c) + g(d) + g((c - 2) * d) + g((c - 1 - a) * d) / 2 - g(c - 2) - g(a * d) -
         g((c - 2 - a) * d) - g((1 - a) * d) / 2 - g(c * d) / 2;
}

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  for (const Vertex w : g.neighbors(u)) {
    if (w == v) return true;
  }
  return false;
}

// All k-subsets of `pool` (k <= pool.size()), in lexicographic order.
inline void for_each_subset(const std::vector<Vertex>& pool, std::size_t k,
                            const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> current;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) return visit(current);
    for (std::size_t i = start; i + (k - current.size()) <= pool.size(); ++i) {
      current.push_back(pool[i]);
      if (rec(i + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  rec(0);
}

// True iff two disjoint s-sets with no edge between them exist (across the
// bipartition when the graph carries one).
inline bool has_hole_brute(const Graph& g, std::size_t s) {
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  const bool bip = g.has_parts();
  bool found = false;
  for_each_subset(all, s, [&](const std::vector<Vertex>& S) {
    if (bip && std::any_of(S.begin(), S.end(), [&](Vertex v) { return g.part(v) != 0; })) {
      return false;
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(S.begin(), S.end(), v) != S.end()) continue;
      if (bip && g.part(v) != 1) continue;
      bool ok = true;
      for (const Vertex u : S) ok = ok && !adjacent(g, u, v);
      if (ok) rest.push_back(v);
    }
    found = rest.size() >= s;
    return found;
  });
  return found;
}

// Cycle on exactly n vertices by trying every ordered n-tuple starting at its
// minimum vertex.
inline bool has_cycle_brute(const Graph& g, int n) {
  const Vertex V = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<bool> used(V, false);
  std::function<bool()> rec = [&]() {
    if (static_cast<int>(path.size()) == n) return adjacent(g, path.back(), path.front());
    for (Vertex v = path.front() + 1; v < V; ++v) {
      if (used[v] || !adjacent(g, path.back(), v)) continue;
      used[v] = true;
      path.push_back(v);
      if (rec()) return true;
      path.pop_back();
      used[v] = false;
    }
    return false;
  };
  for (Vertex s = 0; s < V; ++s) {
    path = {s};
    used.assign(V, false);
    used[s] = true;
    if (rec()) return true;
  }
  return false;
}

inline bool has_biclique_brute(const Graph& g, std::size_t m1, std::size_t m2, bool respect) {
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  bool found = false;
  for_each_subset(all, m1, [&](const std::vector<Vertex>& A) {
    if (respect && std::any_of(A.begin(), A.end(), [&](Vertex v) { return g.part(v) != g.part(A[0]); })) {
      return false;
    }
    std::vector<Vertex> common;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (std::find(A.begin(), A.end(), v) != A.end()) continue;
      if (respect && g.part(v) == g.part(A[0])) continue;
      bool ok = true;
      for (const Vertex u : A) ok = ok && adjacent(g, u, v);
      if (ok) common.push_back(v);
    }
    found = common.size() >= m2;
    return found;
  });
  return found;
}

inline bool contains_brute(const Graph& g, const ramsey_lab::Target& t, bool respect) {
  if (t.kind == ramsey_lab::Target::Kind::kCycle) {
    return has_cycle_brute(g, static_cast<int>(t.length));
  }
  return has_biclique_brute(g, t.m1, t.m2, respect);
}

// Unpruned enumeration of all k^|E| colorings.
inline bool arrows_brute(const Graph& host, const ramsey_lab::TargetSpec& targets,
                         bool respect = false) {
  const auto edges = host.edges();
  const std::size_t k = targets.color_count();
  std::vector<std::size_t> color(edges.size(), 0);
  while (true) {
    bool some_target = false;
    for (std::size_t c = 0; c < k && !some_target; ++c) {
      Graph cls(host.vertex_count());
      if (host.has_parts()) {
        cls.set_parts(std::vector<int>(host.parts().begin(), host.parts().end()));
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (color[i] == c) cls.add_edge(edges[i].u, edges[i].v);
      }
      some_target = contains_brute(cls, targets[c], respect);
    }
    if (!some_target) return false;
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == k) color[i++] = 0;
    if (i == color.size()) return true;
  }
}

}  // namespace oracle
