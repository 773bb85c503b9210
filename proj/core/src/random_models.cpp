#include "ramsey_lab/random_models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/rng.hpp"

namespace ramsey_lab {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability " + std::to_string(p) + " outside [0, 1]");
  }
}

// Fixed-size bitset over vertex ids; sized once per graph.
class VertexSet {
 public:
  explicit VertexSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

  std::size_t count() const {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  std::size_t count_and(const VertexSet& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
  }
  void subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }
  std::vector<Vertex> members(std::size_t limit) const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < words_.size() && out.size() < limit; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0 && out.size() < limit) {
        out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Closed neighborhoods N(v) + v as bitsets.
std::vector<VertexSet> closed_neighborhoods(const Graph& g) {
  std::vector<VertexSet> out(static_cast<std::size_t>(g.vertex_count()),
                             VertexSet(static_cast<std::size_t>(g.vertex_count())));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[v].set(v);
    for (const Vertex u : g.neighbors(v)) out[v].set(u);
  }
  return out;
}

Graph project_to_simple(const Multigraph& m) {
  std::vector<Edge> edges;
  for (const auto& e : m.edges()) {
    if (e.u != e.v) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(m.vertex_count(), std::move(edges));
}

struct ExactHoleSearch {
  std::vector<std::uint64_t> closed;  // closed neighborhoods
  std::uint64_t s_pool = 0;           // where S may be drawn from
  std::size_t s = 0;
  std::vector<Vertex> chosen;
  std::uint64_t result_t = 0;

  bool grow(std::uint64_t candidates_t, Vertex next_min) {
    if (chosen.size() == s) {
      result_t = candidates_t;
      return true;
    }
    const std::size_t missing = s - chosen.size();
    std::uint64_t pool = s_pool & ~((next_min >= 64) ? ~std::uint64_t{0}
                                                     : ((std::uint64_t{1} << next_min) - 1));
    if (static_cast<std::size_t>(std::popcount(pool)) < missing) return false;
    while (pool != 0) {
      const auto u = static_cast<Vertex>(std::countr_zero(pool));
      pool &= pool - 1;
      const std::uint64_t remaining = candidates_t & ~closed[u];
      if (static_cast<std::size_t>(std::popcount(remaining)) < s) continue;
      chosen.push_back(u);
      if (grow(remaining, u + 1)) return true;
      chosen.pop_back();
      if (static_cast<std::size_t>(std::popcount(pool)) < missing) return false;
    }
    return false;
  }
};

}  // namespace

Graph sample_gnp(Vertex n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_gnp: N must be >= 1");
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph sample_bipartite(Vertex n1, Vertex n2, double p, std::uint64_t seed) {
  if (n1 < 1 || n2 < 1) throw InvalidArgument("sample_bipartite: sides must be >= 1");
  check_probability(p);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = n1; v < n1 + n2; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  Graph g(n1 + n2, std::move(edges));
  std::vector<int> parts(static_cast<std::size_t>(n1 + n2), 1);
  std::fill(parts.begin(), parts.begin() + n1, 0);
  g.set_parts(std::move(parts));
  return g;
}

PairingSample sample_pairing(Vertex n, std::int64_t d, std::uint64_t seed, bool simple_only,
                             std::uint64_t max_attempts) {
  if (n < 1) throw InvalidArgument("sample_pairing: N must be >= 1");
  if (d < 1) throw InvalidArgument("sample_pairing: d must be >= 1");
  const std::int64_t points = static_cast<std::int64_t>(n) * d;
  if (points % 2 != 0) throw InvalidArgument("sample_pairing: N*d must be even");
  Rng rng(seed);
  std::vector<std::int64_t> perm(static_cast<std::size_t>(points));
  for (std::uint64_t attempt = 1;; ++attempt) {
    for (std::int64_t i = 0; i < points; ++i) perm[i] = i;
    for (std::int64_t i = points - 1; i > 0; --i) {
      const auto j = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[i], perm[j]);
    }
    Multigraph g(n);
    for (std::int64_t i = 0; i < points; i += 2) {
      g.add_edge(static_cast<Vertex>(perm[i] / d), static_cast<Vertex>(perm[i + 1] / d));
    }
    if (!simple_only || g.is_simple()) return PairingSample{std::move(g), attempt};
    if (attempt >= max_attempts) {
      throw CapExceeded("sample_pairing: no simple pairing in " + std::to_string(max_attempts) +
                        " attempts");
    }
  }
}

AcceptanceStats pairing_simple_acceptance(Vertex n, std::int64_t d, std::uint64_t attempts,
                                          std::uint64_t seed) {
  AcceptanceStats stats;
  for (std::uint64_t i = 0; i < attempts; ++i) {
    const auto sample = sample_pairing(n, d, derive_seed(seed, i));
    ++stats.attempts;
    if (sample.graph.is_simple()) ++stats.simple;
  }
  return stats;
}

bool verify_hole(const Graph& g, const HoleWitness& witness, std::size_t size) {
  if (witness.s.size() != size || witness.t.size() != size) return false;
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Vertex v : witness.s) {
    if (v < 0 || v >= g.vertex_count() || side[v] != 0) return false;
    side[v] = 1;
  }
  for (const Vertex v : witness.t) {
    if (v < 0 || v >= g.vertex_count() || side[v] != 0) return false;
    side[v] = 2;
  }
  if (g.is_bipartitioned()) {
    const int ps = g.part(witness.s.front());
    for (const Vertex v : witness.s) {
      if (g.part(v) != ps) return false;
    }
    for (const Vertex v : witness.t) {
      if (g.part(v) == ps) return false;
    }
  }
  for (const auto& e : g.edges()) {
    if (side[e.u] != 0 && side[e.v] != 0 && side[e.u] != side[e.v]) return false;
  }
  return true;
}

std::optional<HoleWitness> find_hole_exact(const Graph& g, std::int64_t s, Vertex vertex_cap,
                                           std::int64_t size_cap) {
  if (s < 1) throw InvalidArgument("find_hole_exact: s must be >= 1");
  const Vertex n = g.vertex_count();
  const Vertex cap = std::min<Vertex>(vertex_cap, 64);
  if (n > cap) {
    throw CapExceeded("find_hole_exact: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
  if (s > size_cap) {
    throw CapExceeded("find_hole_exact: s = " + std::to_string(s) + " exceeds cap " +
                      std::to_string(size_cap));
  }
  if (2 * s > n) return std::nullopt;

  ExactHoleSearch search;
  search.s = static_cast<std::size_t>(s);
  search.closed.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    search.closed[v] |= std::uint64_t{1} << v;
    for (const Vertex u : g.neighbors(v)) search.closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bool found = false;
  if (g.is_bipartitioned()) {
    std::uint64_t part0 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.part(v) == 0) part0 |= std::uint64_t{1} << v;
    }
    search.s_pool = part0;
    found = search.grow(all & ~part0, 0);
  } else {
    // Order the pair so that the smallest vertex of S u T lies in S: after
    // fixing the first S vertex v, T is drawn from vertices above v.
    search.s_pool = all;
    for (Vertex first = 0; first < n && !found; ++first) {
      const std::uint64_t above = all & ~((std::uint64_t{2} << first) - 1);
      const std::uint64_t cand = above & ~search.closed[first];
      if (static_cast<std::size_t>(std::popcount(cand)) < search.s) continue;
      search.chosen = {first};
      found = search.grow(cand, first + 1);
    }
  }
  if (!found) return std::nullopt;

  HoleWitness witness;
  witness.s = search.chosen;
  std::uint64_t t = search.result_t;
  while (t != 0 && witness.t.size() < search.s) {
    witness.t.push_back(static_cast<Vertex>(std::countr_zero(t)));
    t &= t - 1;
  }
  return witness;
}

std::optional<HoleWitness> find_hole_heuristic(const Graph& g, std::int64_t s,
                                               std::int64_t iterations, std::uint64_t seed) {
  if (s < 1) throw InvalidArgument("find_hole_heuristic: s must be >= 1");
  const Vertex n = g.vertex_count();
  const auto size = static_cast<std::size_t>(s);
  if (2 * s > n) return std::nullopt;

  const auto closed = closed_neighborhoods(g);
  const bool bipartite = g.is_bipartitioned();
  std::vector<Vertex> s_pool;
  VertexSet t_init(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (!bipartite || g.part(v) == 0) s_pool.push_back(v);
    if (!bipartite || g.part(v) == 1) t_init.set(v);
  }
  if (s_pool.size() < size) return std::nullopt;

  Rng rng(seed);
  std::vector<bool> in_s(static_cast<std::size_t>(n));
  std::vector<Vertex> chosen;
  for (std::int64_t it = 0; it < iterations; ++it) {
    std::fill(in_s.begin(), in_s.end(), false);
    chosen.clear();
    VertexSet candidates = t_init;
    const Vertex start = s_pool[rng.below(s_pool.size())];
    chosen.push_back(start);
    in_s[start] = true;
    candidates.subtract(closed[start]);

    // Greedy growth: add the S vertex that removes fewest T candidates, with
    // random tie-breaking and an occasional near-best pick for diversity.
    const bool noisy = rng.uniform() < 0.5;
    while (chosen.size() < size && candidates.count() >= size) {
      std::size_t best_loss = static_cast<std::size_t>(n) + 1;
      Vertex best = -1;
      std::uint64_t ties = 0;
      for (const Vertex w : s_pool) {
        if (in_s[w]) continue;
        std::size_t loss = candidates.count_and(closed[w]);
        if (noisy) loss += rng.below(2);
        if (loss < best_loss) {
          best_loss = loss;
          best = w;
          ties = 1;
        } else if (loss == best_loss && rng.below(++ties) == 0) {
          best = w;
        }
      }
      if (best < 0) break;
      chosen.push_back(best);
      in_s[best] = true;
      candidates.subtract(closed[best]);
    }
    if (chosen.size() == size && candidates.count() >= size) {
      HoleWitness witness;
      witness.s = chosen;
      std::sort(witness.s.begin(), witness.s.end());
      witness.t = candidates.members(size);
      if (verify_hole(g, witness, size)) return witness;
    }
  }
  return std::nullopt;
}

std::string_view to_string(HoleModel model) {
  switch (model) {
    case HoleModel::kGnp: return "gnp";
    case HoleModel::kBipartite: return "bipartite";
    case HoleModel::kPairing: return "pairing";
  }
  return "unknown";
}

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::kAuto: return "auto";
    case SearchMode::kExact: return "exact";
    case SearchMode::kHeuristic: return "heuristic";
  }
  return "unknown";
}

HoleModel parse_hole_model(std::string_view name) {
  if (name == "gnp") return HoleModel::kGnp;
  if (name == "bipartite") return HoleModel::kBipartite;
  if (name == "pairing" || name == "regular") return HoleModel::kPairing;
  throw InvalidArgument("unknown model '" + std::string(name) +
                        "' (expected gnp, bipartite or pairing)");
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "auto") return SearchMode::kAuto;
  if (name == "exact") return SearchMode::kExact;
  if (name == "heuristic") return SearchMode::kHeuristic;
  throw InvalidArgument("unknown search mode '" + std::string(name) + "'");
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials) {
  if (trials <= 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
  // The endpoints are exact at k = 0 and k = n; the formula only gets there up to rounding.
  const double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {low, high};
}

unsigned configured_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RAMSEY_LAB_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

TrialReport estimate_hole_probability(const HoleExperiment& ex) {
  if (ex.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (ex.n < 1) throw InvalidArgument("N must be >= 1");
  if (ex.s < 1) throw InvalidArgument("s must be >= 1");
  if (ex.model != HoleModel::kPairing) check_probability(ex.p);
  if (ex.model == HoleModel::kPairing) {
    if (ex.d < 1) throw InvalidArgument("pairing model needs d >= 1");
    if ((static_cast<std::int64_t>(ex.n) * ex.d) % 2 != 0) {
      throw InvalidArgument("pairing model needs N*d even");
    }
  }
  const Vertex host_vertices = ex.model == HoleModel::kBipartite ? 2 * ex.n : ex.n;
  SearchMode mode = ex.mode;
  if (mode == SearchMode::kAuto) {
    mode = host_vertices <= kDefaultHoleVertexCap && ex.s <= kDefaultHoleSizeCap
               ? SearchMode::kExact
               : SearchMode::kHeuristic;
  }
  if (mode == SearchMode::kExact &&
      (host_vertices > kDefaultHoleVertexCap || ex.s > kDefaultHoleSizeCap)) {
    throw CapExceeded("exact hole search caps are N <= " + std::to_string(kDefaultHoleVertexCap) +
                      ", s <= " + std::to_string(kDefaultHoleSizeCap));
  }

  struct Outcome {
    bool hole = false;
    std::uint64_t attempts = 0;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(ex.trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(ex.trials));

  auto run_trial_unguarded = [&](std::int64_t i) {
    const std::uint64_t trial_seed = derive_seed(ex.seed, static_cast<std::uint64_t>(i));
    const std::uint64_t graph_seed = derive_seed(trial_seed, 0);
    const std::uint64_t search_seed = derive_seed(trial_seed, 1);
    Graph g;
    Outcome out;
    switch (ex.model) {
      case HoleModel::kGnp:
        g = sample_gnp(ex.n, ex.p, graph_seed);
        break;
      case HoleModel::kBipartite:
        g = sample_bipartite(ex.n, ex.n, ex.p, graph_seed);
        break;
      case HoleModel::kPairing: {
        auto sample = sample_pairing(ex.n, ex.d, graph_seed, ex.simple_only);
        out.attempts = sample.attempts;
        g = project_to_simple(sample.graph);
        break;
      }
    }
    const auto witness = mode == SearchMode::kExact
                             ? find_hole_exact(g, ex.s)
                             : find_hole_heuristic(g, ex.s, ex.heuristic_iterations, search_seed);
    out.hole = witness.has_value();
    outcomes[static_cast<std::size_t>(i)] = out;
  };
  auto run_trial = [&](std::int64_t i) {
    try {
      run_trial_unguarded(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };

  const unsigned threads =
      std::min<unsigned>(configured_threads(ex.threads), static_cast<unsigned>(ex.trials));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < ex.trials; ++i) run_trial(i);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::int64_t i = w; i < ex.trials; i += threads) run_trial(i);
      });
    }
  }

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  TrialReport report;
  report.experiment = ex;
  report.trials = ex.trials;
  report.mode = mode;
  report.version = kRngVersion;
  std::uint64_t attempts = 0;
  for (const auto& o : outcomes) {
    report.holes_found += o.hole ? 1 : 0;
    attempts += o.attempts;
  }
  if (ex.model == HoleModel::kPairing && ex.simple_only) report.pairing_attempts = attempts;
  report.frequency = static_cast<double>(report.holes_found) / static_cast<double>(ex.trials);
  std::tie(report.ci_low, report.ci_high) = wilson_interval(report.holes_found, ex.trials);
  return report;
}

}  // namespace ramsey_lab
