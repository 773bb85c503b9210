#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsey_lab/arrow_checker.hpp"
#include "ramsey_lab/constructions.hpp"
#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/random_models.hpp"

namespace ramsey_lab {
namespace {

TEST(TargetSpec, Parse) {
  const auto spec = TargetSpec::parse("C6,K2x3");
  ASSERT_EQ(spec.color_count(), 2u);
  EXPECT_EQ(spec[0], Target::cycle(6));
  EXPECT_EQ(spec[1], Target::biclique(2, 3));
  EXPECT_EQ(spec.to_string(), "C6,K2x3");
  EXPECT_TRUE(TargetSpec::parse("C3,C3").all_equal());
  EXPECT_FALSE(spec.all_equal());
}

TEST(TargetSpec, ErrorsCarryPosition) {
  try {
    TargetSpec::parse("C3,Q4");
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(TargetSpec::parse("C2"), InvalidArgument);
  EXPECT_THROW(TargetSpec::parse(""), InvalidArgument);
  EXPECT_THROW(TargetSpec::parse("K2x"), InvalidArgument);
}

TEST(HasCycle, Examples) {
  EXPECT_TRUE(has_cycle_length(cycle_graph(5), 5));
  EXPECT_FALSE(has_cycle_length(cycle_graph(5), 4));
  EXPECT_TRUE(has_cycle_length(complete_graph(4), 3));
  EXPECT_TRUE(has_cycle_length(complete_graph(4), 4));
  const Graph p = petersen_graph();
  EXPECT_FALSE(has_cycle_length(p, 3));
  EXPECT_FALSE(has_cycle_length(p, 4));
  EXPECT_TRUE(has_cycle_length(p, 5));
  EXPECT_THROW(has_cycle_length(Graph(21), 3), CapExceeded);
}

TEST(HasCycle, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = sample_gnp(8, 0.35, seed);
    for (int n = 3; n <= 8; ++n) {
      ASSERT_EQ(has_cycle_length(g, n), oracle::has_cycle_brute(g, n)) << seed << " " << n;
    }
  }
}

TEST(HasBiclique, Examples) {
  EXPECT_TRUE(has_biclique(complete_bipartite_graph(2, 3), 2, 3));
  EXPECT_TRUE(has_biclique(complete_bipartite_graph(2, 3), 3, 2, true));
  EXPECT_FALSE(has_biclique(Graph(5), 1, 1));
  EXPECT_TRUE(has_biclique(cycle_graph(6), 1, 2));
  EXPECT_FALSE(has_biclique(cycle_graph(6), 2, 2));
}

TEST(HasBiclique, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = sample_gnp(8, 0.55, seed);
    const Graph b = sample_bipartite(4, 4, 0.6, seed);
    for (int m1 = 1; m1 <= 3; ++m1) {
      for (int m2 = 1; m2 <= 3; ++m2) {
        ASSERT_EQ(has_biclique(g, m1, m2), oracle::has_biclique_brute(g, m1, m2, false));
        ASSERT_EQ(has_biclique(b, m1, m2, true), oracle::has_biclique_brute(b, m1, m2, true));
      }
    }
  }
}

TEST(Arrows, TriangleRamseyNumber) {
  const auto targets = TargetSpec::parse("C3,C3");
  EXPECT_TRUE(arrows(complete_graph(6), targets).arrows);
  const auto k5 = arrows(complete_graph(5), targets);
  EXPECT_FALSE(k5.arrows);
  ASSERT_TRUE(k5.witness.has_value());
  EXPECT_TRUE(is_good_coloring(complete_graph(5), *k5.witness, targets));
  // The only good colorings of K5 are two complementary 5-cycles.
  for (int color = 1; color <= 2; ++color) {
    const Graph cls = k5.witness->color_class(5, color);
    EXPECT_EQ(cls.edge_count(), 5u);
    EXPECT_TRUE(has_cycle_length(cls, 5));
  }
  EXPECT_FALSE(arrows(complete_graph(3), targets).arrows);
}

TEST(Arrows, EdgelessHost) {
  const auto good = find_good_coloring(Graph(4), TargetSpec::parse("C3,C4"));
  ASSERT_TRUE(good.has_value());
  EXPECT_TRUE(good->edges.empty());
  EXPECT_FALSE(find_good_coloring(complete_graph(6), TargetSpec::parse("C3,C3")).has_value());
}

TEST(Arrows, CapFailsLoudly) {
  EXPECT_THROW(arrows(complete_graph(8), TargetSpec::parse("C3,C3")), CapExceeded);
}

TEST(BipartiteArrows, Examples) {
  EXPECT_FALSE(bipartite_arrows(complete_bipartite_graph(2, 2), TargetSpec::parse("C4,C4")).arrows);
  EXPECT_TRUE(bipartite_arrows(complete_bipartite_graph(1, 1), TargetSpec::parse("K1x1,K1x1")).arrows);
  Graph c6 = cycle_graph(6);
  c6.set_parts({0, 1, 0, 1, 0, 1});
  EXPECT_FALSE(bipartite_arrows(c6, TargetSpec::parse("C6,C6")).arrows);
  EXPECT_THROW(bipartite_arrows(complete_graph(3), TargetSpec::parse("C3,C3")), InvalidArgument);
}

// Every graph with at most 10 edges drawn from a fixed corpus.
std::vector<Graph> small_hosts() {
  std::vector<Graph> hosts = {complete_graph(4), complete_graph(5), cycle_graph(5),
                              cycle_graph(7), path_graph(6), star_graph(6),
                              complete_bipartite_graph(2, 3), complete_bipartite_graph(2, 4)};
  const std::int64_t k221[] = {2, 2, 1};
  hosts.push_back(build_complete_multipartite(k221));
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = sample_gnp(6, 0.5, seed);
    if (g.edge_count() <= 10) hosts.push_back(std::move(g));
  }
  return hosts;
}

TEST(Arrows, AgreesWithUnprunedEnumeration) {
  const std::vector<std::string> target_sets = {"C3,C3", "C3,C4", "C4,C4", "C3,K1x2",
                                                "K1x2,K1x2", "C3,C3,C3"};
  for (const Graph& host : small_hosts()) {
    ASSERT_LE(host.edge_count(), 10u);
    for (const auto& text : target_sets) {
      const auto targets = TargetSpec::parse(text);
      const auto r = arrows(host, targets);
      ASSERT_EQ(r.arrows, oracle::arrows_brute(host, targets)) << text;
      ASSERT_EQ(r.arrows, !r.witness.has_value());
      if (r.witness) ASSERT_TRUE(is_good_coloring(host, *r.witness, targets));
    }
  }
}

TEST(BipartiteArrows, AgreesWithUnprunedEnumeration) {
  for (const auto& [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
    const Graph host = complete_bipartite_graph(a, b);
    for (const auto& text : {"C4,C4", "K1x2,K1x2", "K2x2,K1x1", "K1x3,C4"}) {
      const auto targets = TargetSpec::parse(text);
      ASSERT_EQ(bipartite_arrows(host, targets).arrows, oracle::arrows_brute(host, targets, true))
          << a << "," << b << " " << text;
    }
  }
}

TEST(Arrows, MonotoneUnderEdgeAddition) {
  const auto targets = TargetSpec::parse("C3,C4");
  for (const Graph& host : small_hosts()) {
    if (!arrows(host, targets).arrows) continue;
    for (Vertex u = 0; u < host.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < host.vertex_count(); ++v) {
        if (host.has_edge(u, v)) continue;
        Graph bigger = host;
        bigger.add_edge(u, v);
        ASSERT_TRUE(arrows(bigger, targets).arrows);
      }
    }
  }
}

TEST(Arrows, MultipartiteRegression) {
  const std::int64_t sizes[] = {2, 2, 2};
  const Graph host = build_complete_multipartite(sizes);
  const auto targets = TargetSpec::parse("C4,C4");
  const auto r = arrows(host, targets);
  ASSERT_EQ(r.arrows, !r.witness.has_value());
  if (r.witness) EXPECT_TRUE(is_good_coloring(host, *r.witness, targets));
}

}  // namespace
}  // namespace ramsey_lab
