#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "pcg/cograph.hpp"

using namespace pcg::cograph;
using pcg::graphs::BitRow;

namespace {

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Cotree leaf_pair(Cotree::Kind kind) {
  Cotree t;
  t.nodes = {{kind, 0, {1, 2}}, {Cotree::Kind::Leaf, 0, {}}, {Cotree::Kind::Leaf, 1, {}}};
  return t;
}

}  // namespace

TEST(Decompose, FrozenValues) {
  const auto single = decompose(Graph(1));
  ASSERT_TRUE(std::holds_alternative<Cotree>(single));
  EXPECT_EQ(std::get<Cotree>(single).to_text(), "0");

  const auto p4 = decompose(path(4));
  ASSERT_TRUE(std::holds_alternative<P4Witness>(p4));
  EXPECT_EQ(std::get<P4Witness>(p4).path, (std::array<Vertex, 4>{0, 1, 2, 3}));

  Graph c4 = path(4);
  c4.add_edge(3, 0);
  const auto d = decompose(c4);
  ASSERT_TRUE(std::holds_alternative<Cotree>(d));
  EXPECT_EQ(std::get<Cotree>(d).to_text(), "J(U(0,2),U(1,3))");
  EXPECT_EQ(cotree_eval(std::get<Cotree>(d)), c4);
}

TEST(FindP4, FrozenValues) {
  EXPECT_FALSE(find_p4(complete(5)));
  EXPECT_EQ(find_p4(path(4))->path, (std::array<Vertex, 4>{0, 1, 2, 3}));
  EXPECT_FALSE(find_p4(Graph(0)));
  // Lexicographically least among the P4s of a 5-path.
  EXPECT_EQ(find_p4(path(5))->path, (std::array<Vertex, 4>{0, 1, 2, 3}));
  // Restricting drops vertex 0.
  BitRow subset(5);
  for (std::size_t v = 1; v < 5; ++v) subset.set(v);
  EXPECT_EQ(find_p4(path(5), subset)->path, (std::array<Vertex, 4>{1, 2, 3, 4}));
}

TEST(CotreeEval, FrozenValuesAndValidation) {
  Cotree leaf;
  leaf.nodes = {{Cotree::Kind::Leaf, 0, {}}};
  EXPECT_EQ(cotree_eval(leaf).vertex_count(), 1U);
  EXPECT_EQ(cotree_eval(leaf).edge_count(), 0U);
  const Graph edge = cotree_eval(leaf_pair(Cotree::Kind::Join));
  EXPECT_EQ(edge.edge_count(), 1U);
  EXPECT_EQ(cotree_eval(leaf_pair(Cotree::Kind::Union)).edge_count(), 0U);

  Cotree unary;
  unary.nodes = {{Cotree::Kind::Join, 0, {1}}, {Cotree::Kind::Leaf, 0, {}}};
  EXPECT_THROW(cotree_eval(unary), std::invalid_argument);

  Cotree repeated = leaf_pair(Cotree::Kind::Join);
  repeated.nodes[2].vertex = 0;
  EXPECT_THROW(cotree_eval(repeated), std::invalid_argument);

  Cotree gap = leaf_pair(Cotree::Kind::Join);
  gap.nodes[2].vertex = 5;
  EXPECT_THROW(cotree_eval(gap), std::invalid_argument);

  Cotree same_kind;
  same_kind.nodes = {{Cotree::Kind::Join, 0, {1, 4}},
                     {Cotree::Kind::Join, 0, {2, 3}},
                     {Cotree::Kind::Leaf, 0, {}},
                     {Cotree::Kind::Leaf, 1, {}},
                     {Cotree::Kind::Leaf, 2, {}}};
  EXPECT_THROW(cotree_eval(same_kind), std::invalid_argument);
}

TEST(RandomGraphs, DecomposeAgreesWithFindP4AndRoundTrips) {
  std::mt19937_64 rng(20240601);
  int cographs = 0;
  int total = 0;
  for (double density : {0.2, 0.5, 0.8}) {
    for (int i = 0; i < 400; ++i) {
      const std::size_t n = 1 + rng() % 12;
      const Graph g = pcg::testing::random_graph(n, density, rng);
      const auto d = decompose(g);
      const auto w = find_p4(g);
      ++total;
      ASSERT_EQ(std::holds_alternative<Cotree>(d), !w.has_value());
      ASSERT_EQ(w.has_value(), pcg::testing::has_induced_p4_bruteforce(g));
      if (const auto* t = std::get_if<Cotree>(&d)) {
        ++cographs;
        ASSERT_EQ(cotree_eval(*t), g);
      } else {
        ASSERT_TRUE(is_induced_p4(g, std::get<P4Witness>(d)));
        ASSERT_TRUE(is_induced_p4(g, *w));
      }
      ASSERT_EQ(is_cograph(g), is_cograph(g.complement()));
    }
  }
  EXPECT_GE(total, 1000);
  EXPECT_GT(cographs, 50);
  EXPECT_LT(cographs, total);
}

TEST(RandomGraphs, LargerCographsFromRandomCotrees) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    // Grow a cograph by random disjoint unions and joins.
    std::vector<Graph> parts;
    const std::size_t n = 2 + rng() % 60;
    for (std::size_t v = 0; v < n; ++v) parts.emplace_back(1);
    while (parts.size() > 1) {
      const std::size_t a = rng() % parts.size();
      Graph x = parts[a];
      parts.erase(parts.begin() + static_cast<long>(a));
      const std::size_t b = rng() % parts.size();
      Graph y = parts[b];
      parts.erase(parts.begin() + static_cast<long>(b));
      Graph z(x.vertex_count() + y.vertex_count());
      const auto off = static_cast<Vertex>(x.vertex_count());
      for (Vertex u = 0; u < x.vertex_count(); ++u) {
        for (Vertex v : x.row(u).members()) z.add_edge(u, v);
      }
      for (Vertex u = 0; u < y.vertex_count(); ++u) {
        for (Vertex v : y.row(u).members()) z.add_edge(off + u, off + v);
      }
      if (rng() % 2 == 0) {
        for (Vertex u = 0; u < off; ++u) {
          for (Vertex v = off; v < z.vertex_count(); ++v) z.add_edge(u, v);
        }
      }
      parts.push_back(std::move(z));
    }
    // Scramble vertex labels.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = parts[0].induced(perm);
    const auto d = decompose(g);
    ASSERT_TRUE(std::holds_alternative<Cotree>(d));
    ASSERT_EQ(cotree_eval(std::get<Cotree>(d)), g);
    // One extra edge usually creates a P4; the witness must be valid either way.
    Graph h = g;
    const auto u = static_cast<Vertex>(rng() % n);
    const auto v = static_cast<Vertex>(rng() % n);
    if (u != v) h.add_edge(u, v);
    const auto dh = decompose(h);
    if (const auto* w = std::get_if<P4Witness>(&dh)) {
      ASSERT_TRUE(is_induced_p4(h, *w));
    } else {
      ASSERT_FALSE(find_p4(h));
    }
  }
}

TEST(IsInducedP4, RejectsChordsAndRepeats) {
  Graph g = path(4);
  EXPECT_TRUE(is_induced_p4(g, {{0, 1, 2, 3}}));
  EXPECT_TRUE(is_induced_p4(g, {{3, 2, 1, 0}}));
  EXPECT_FALSE(is_induced_p4(g, {{0, 1, 2, 2}}));
  g.add_edge(0, 2);
  EXPECT_FALSE(is_induced_p4(g, {{0, 1, 2, 3}}));
}
