#include <gtest/gtest.h>

#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/graph.hpp"
#include "ramsey_lab/numeric.hpp"
#include "ramsey_lab/serialize.hpp"

namespace ramsey_lab {
namespace {

TEST(Graph, NormalizesAndDeduplicates) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_FALSE(g.add_edge(1, 2));
  EXPECT_THROW(g.add_edge(3, 3), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 4), InvalidArgument);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 1));
}

TEST(Graph, PartsRejectIntraClassEdges) {
  Graph g = path_graph(3);
  EXPECT_THROW(g.set_parts({0, 0, 1}), InvalidArgument);
  g.set_parts({0, 1, 0});
  EXPECT_TRUE(g.is_bipartitioned());
  EXPECT_EQ(g.part_count(), 2);
}

TEST(Graph, Generators) {
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  EXPECT_EQ(complete_bipartite_graph(3, 3).edge_count(), 9u);
  EXPECT_EQ(cycle_graph(7).edge_count(), 7u);
  EXPECT_EQ(path_graph(7).edge_count(), 6u);
  EXPECT_EQ(star_graph(5).max_degree(), 5u);
  const Graph p = petersen_graph();
  EXPECT_EQ(p.vertex_count(), 10);
  EXPECT_EQ(p.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3u);
}

TEST(Graph, ComplementRespectsParts) {
  const Graph k33 = complete_bipartite_graph(3, 3);
  EXPECT_EQ(k33.complement(true).edge_count(), 0u);
  EXPECT_EQ(k33.complement(false).edge_count(), 6u);
}

TEST(Graph, TwoColoringAndDistances) {
  EXPECT_TRUE(two_coloring(cycle_graph(6)).has_value());
  EXPECT_FALSE(two_coloring(cycle_graph(5)).has_value());
  const auto dist = bfs_distances(path_graph(5), 0);
  EXPECT_EQ(dist[4], 4);
}

TEST(EdgeList, Format) {
  const Graph g = complete_bipartite_graph(1, 2);
  const std::string text = write_edge_list(g);
  EXPECT_EQ(text, "3 2 parts 0 1 1\n0 1\n0 2\n");
  const Graph back = read_edge_list("# comment\n\n3 2 parts 0 1 1\n0 2\n0 1\n");
  EXPECT_EQ(write_edge_list(back), text);
  EXPECT_THROW(read_edge_list("3 2\n0 1\n"), InvalidArgument);
  EXPECT_THROW(read_edge_list("2 1\n0 5\n"), InvalidArgument);
  EXPECT_EQ(write_edge_list(path_graph(3)), "3 2\n0 1\n1 2\n");
}

TEST(Numeric, RationalParsingAndLogs) {
  EXPECT_EQ(parse_rational("538002/35"), Rational(538002, 35));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("abc"), InvalidArgument);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(ceil_log2(std::uint64_t{1}), 0);
  EXPECT_EQ(ceil_log2(std::uint64_t{37}), 6);
  EXPECT_EQ(ceil_log2(Rational(538002, 35) * 1000000), 34);
  BigInt big = 1;
  for (int i = 0; i < 400; ++i) big *= 10;
  EXPECT_NEAR(log_of(big), 400 * std::log(10.0), 1e-9);
  EXPECT_NEAR(to_double(Rational(big + 1, big)), 1.0, 1e-15);
}

TEST(Serialize, Sig12AndChecksum) {
  EXPECT_EQ(format_sig12(113483237054.123), "113483237054");
  EXPECT_EQ(format_sig12(0.1), "0.1");
  EXPECT_EQ(checksum(""), "cbf29ce484222325");
  EXPECT_EQ(checksum("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace ramsey_lab
