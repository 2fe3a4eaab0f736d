#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qmax/graph.hpp"
#include "testutil.hpp"

using qmax::Graph;
using qmax::GraphBuilder;

TEST_CASE("order zero graph is legal and empty") {
  Graph g(0);
  CHECK(g.order() == 0);
  CHECK(g.edge_count() == 0);
  CHECK(g.min_degree() == -1);
  CHECK(g.max_degree() == -1);
  CHECK(g.edges().empty());
  CHECK(qmax::components(g).empty());
}

TEST_CASE("construction rejects bad orders") {
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(qmax::kMaxOrder + 1), std::invalid_argument);
  CHECK_NOTHROW(Graph(qmax::kMaxOrder));
}

TEST_CASE("from_edges collapses duplicates and rejects loops and bad endpoints") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("builder and accessors agree on a fixed graph") {
  GraphBuilder b(5);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 4);
  b.add_edge(0, 4);
  Graph g = b.build();
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.neighbors(0) == qmax::VertexSet{1, 4});
  CHECK(g.degrees() == std::vector<int>{2, 2, 2, 2, 2});
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.degree(5), std::invalid_argument);
  CHECK_THROWS_AS((void)g.has_edge(0, -1), std::invalid_argument);
}

TEST_CASE("edges are listed sorted with u < v") {
  Graph g = Graph::from_edges(4, {{3, 1}, {2, 0}, {1, 0}});
  auto e = g.edges();
  REQUIRE(e.size() == 3);
  CHECK(e[0] == std::pair<int, int>{0, 1});
  CHECK(e[1] == std::pair<int, int>{0, 2});
  CHECK(e[2] == std::pair<int, int>{1, 3});
  for (auto [u, v] : e) CHECK(u < v);
}

TEST_CASE("for_each_neighbor visits in ascending order") {
  Graph g = Graph::from_edges(6, {{4, 2}, {4, 0}, {4, 5}, {4, 1}});
  std::vector<int> seen;
  g.for_each_neighbor(4, [&](int u) { seen.push_back(u); });
  CHECK(seen == std::vector<int>{0, 1, 2, 5});
}

TEST_CASE("for_each_edge visits each edge once with u < v") {
  std::mt19937_64 eng(7);
  Graph g = testutil::random_graph(9, 0.4, eng);
  std::vector<std::pair<int, int>> seen;
  g.for_each_edge([&](int u, int v) {
    CHECK(u < v);
    seen.emplace_back(u, v);
  });
  CHECK(seen == g.edges());
  CHECK(static_cast<std::size_t>(g.edge_count()) == seen.size());
}

TEST_CASE("handshake identity on random graphs") {
  std::mt19937_64 eng(11);
  for (int n = 1; n <= 12; ++n) {
    for (double p : {0.15, 0.5, 0.85}) {
      Graph g = testutil::random_graph(n, p, eng);
      long long sum = 0;
      for (int v = 0; v < n; ++v) sum += g.degree(v);
      CHECK(sum == 2LL * g.edge_count());
    }
  }
}

TEST_CASE("with_edge and without_edge are persistent") {
  Graph g = Graph::from_edges(3, {{0, 1}});
  Graph h = g.with_edge(1, 2);
  CHECK(g.edge_count() == 1);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge(1, 2));
  CHECK(h.without_edge(1, 2) == g);
  CHECK(g.without_edge(1, 2) == g);
  CHECK(g.with_edge(0, 1) == g);
  CHECK_THROWS_AS(g.with_edge(0, 0), std::invalid_argument);
}

TEST_CASE("from_upper_bits uses column-major upper triangle") {
  CHECK(Graph::from_upper_bits(3, 0) == Graph(3));
  // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2)
  CHECK(Graph::from_upper_bits(3, 0b001) == Graph::from_edges(3, {{0, 1}}));
  CHECK(Graph::from_upper_bits(3, 0b010) == Graph::from_edges(3, {{0, 2}}));
  CHECK(Graph::from_upper_bits(3, 0b100) == Graph::from_edges(3, {{1, 2}}));
  // bit 3 opens the fourth column at (0,3)
  CHECK(Graph::from_upper_bits(4, 0b1000) == Graph::from_edges(4, {{0, 3}}));
  Graph k4 = Graph::from_upper_bits(4, 0b111111);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.min_degree() == 3);
  CHECK_THROWS_AS(Graph::from_upper_bits(4, 1ull << 6), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_upper_bits(13, 0), std::invalid_argument);
}

TEST_CASE("induced_subgraph relabels to rank order") {
  Graph g = Graph::from_edges(6, {{0, 3}, {3, 5}, {5, 0}, {1, 2}});
  Graph h = qmax::induced_subgraph(g, {5, 0, 3});
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 3);
  // duplicates collapse, order of the selection does not matter
  CHECK(qmax::induced_subgraph(g, {0, 0, 3, 5, 5}) == h);
  CHECK(qmax::induced_subgraph(g, {}).order() == 0);
  CHECK_THROWS_AS(qmax::induced_subgraph(g, {0, 6}), std::invalid_argument);
}

TEST_CASE("induced subgraph edge counts on random graphs") {
  std::mt19937_64 eng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(10, 0.4, eng);
    qmax::VertexSet s{1, 4, 6, 9};
    Graph h = qmax::induced_subgraph(g, s);
    int direct = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (g.has_edge(s[i], s[j])) ++direct;
    CHECK(h.edge_count() == direct);
    CHECK(h.edge_count() == qmax::edges_within(g, s));
  }
}

TEST_CASE("components are sorted and ordered by smallest member") {
  Graph g = Graph::from_edges(7, {{4, 6}, {1, 2}, {2, 0}});
  auto comps = qmax::components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == qmax::VertexSet{0, 1, 2});
  CHECK(comps[1] == qmax::VertexSet{3});
  CHECK(comps[2] == qmax::VertexSet{4, 6});
  CHECK(comps[3] == qmax::VertexSet{5});
}

TEST_CASE("join connects every cross pair") {
  Graph a = Graph::from_edges(2, {{0, 1}});
  Graph b(3);
  Graph j = qmax::join(a, b);
  CHECK(j.order() == 5);
  CHECK(j.edge_count() == a.edge_count() + b.edge_count() + 2 * 3);
  CHECK(j.has_edge(0, 1));
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) CHECK(j.has_edge(u, v));
  CHECK_FALSE(j.has_edge(2, 3));
}

TEST_CASE("join edge count identity on random parts") {
  std::mt19937_64 eng(17);
  for (int trial = 0; trial < 10; ++trial) {
    Graph a = testutil::random_graph(5, 0.5, eng);
    Graph b = testutil::random_graph(7, 0.3, eng);
    Graph j = qmax::join(a, b);
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() + 5 * 7);
    Graph d = qmax::disjoint_union(a, b);
    CHECK(d.edge_count() == a.edge_count() + b.edge_count());
    CHECK(qmax::components(d).size() >= 2);
  }
}

TEST_CASE("disjoint_union keeps both sides intact") {
  Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph b = Graph::from_edges(2, {{0, 1}});
  Graph d = qmax::disjoint_union(a, b);
  CHECK(d.order() == 5);
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(3, 4));
  CHECK_FALSE(d.has_edge(2, 3));
}

TEST_CASE("delete_vertex shifts higher labels down") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph h = qmax::delete_vertex(g, 1);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(1, 2));  // old edge (2,3)
  CHECK_THROWS_AS(qmax::delete_vertex(g, 4), std::invalid_argument);
}

TEST_CASE("edges_within and edges_between partition the edge set") {
  std::mt19937_64 eng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(11, 0.45, eng);
    qmax::VertexSet s{0, 2, 5, 7, 8};
    qmax::VertexSet rest;
    for (int v = 0; v < 11; ++v)
      if (v != 0 && v != 2 && v != 5 && v != 7 && v != 8) rest.push_back(v);
    CHECK(qmax::edges_within(g, s) + qmax::edges_within(g, rest) +
              qmax::edges_between(g, s, rest) ==
          g.edge_count());
  }
  Graph g = testutil::random_graph(6, 0.5, eng);
  CHECK_THROWS_AS(qmax::edges_between(g, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("degree_stats summarizes the degree sequence") {
  Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
  auto st = qmax::degree_stats(g);
  CHECK(st.min == 1);
  CHECK(st.max == 4);
  CHECK(st.degrees == std::vector<int>{4, 2, 2, 1, 1});
}

TEST_CASE("equality distinguishes order and edge sets") {
  CHECK(Graph(3) == Graph(3));
  CHECK_FALSE(Graph(3) == Graph(4));
  CHECK_FALSE(Graph::from_edges(3, {{0, 1}}) == Graph(3));
}
