#include <doctest.h>

#include <random>
#include <sstream>

#include "qmax/graph6.hpp"
#include "testutil.hpp"

using qmax::Graph;
using qmax::ParseError;
using qmax::parse_graph6;
using qmax::write_graph6;

TEST_CASE("fixed encodings round-trip") {
  // complete graph on four vertices
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(write_graph6(k4) == "C~");
  // edgeless graph on five vertices
  Graph e5 = parse_graph6("D??");
  CHECK(e5.order() == 5);
  CHECK(e5.edge_count() == 0);
  CHECK(write_graph6(e5) == "D??");
  // single edge
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));
  CHECK(write_graph6(k2) == "A_");
  // trivial orders
  CHECK(parse_graph6("?").order() == 0);
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(write_graph6(Graph(1)) == "@");
}

TEST_CASE("round-trip is the identity for every graph up to order 5") {
  for (int n = 0; n <= 5; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
      Graph g = Graph::from_upper_bits(n, mask);
      std::string s = write_graph6(g);
      Graph back = parse_graph6(s);
      CHECK(back == g);
      CHECK(write_graph6(back) == s);
    }
  }
}

TEST_CASE("long form covers orders beyond 62") {
  std::mt19937_64 eng(23);
  Graph g = testutil::random_graph(63, 0.2, eng);
  std::string s = write_graph6(g);
  REQUIRE(s.size() >= 4);
  CHECK(s[0] == '~');
  CHECK(s[1] != '~');
  CHECK(parse_graph6(s) == g);
  Graph h = testutil::random_graph(100, 0.1, eng);
  CHECK(parse_graph6(write_graph6(h)) == h);
}

TEST_CASE("optional header and trailing carriage return are tolerated") {
  CHECK(parse_graph6(">>graph6<<C~") == parse_graph6("C~"));
  CHECK(parse_graph6("C~\r") == parse_graph6("C~"));
}

TEST_CASE("invalid bytes are rejected with their offset") {
  try {
    parse_graph6(std::string("C") + '\x07' + "~");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
    CHECK(std::string(e.what()).find("0x07") != std::string::npos);
  }
}

TEST_CASE("truncated records are rejected") {
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);    // order 4 needs one data byte
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);   // order 5 needs two
  CHECK_THROWS_AS(parse_graph6(""), ParseError);     // no order byte
  CHECK_THROWS_AS(parse_graph6("~A"), ParseError);   // truncated long order field
}

TEST_CASE("trailing bytes are rejected") {
  try {
    parse_graph6("C~?");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("trailing") != std::string::npos);
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("nonzero padding bits are rejected") {
  // order 2 has one adjacency bit; the remaining five bits must be zero
  CHECK_THROWS_AS(parse_graph6("A~"), ParseError);
  CHECK_NOTHROW(parse_graph6("A_"));
}

TEST_CASE("orders beyond the supported cap are rejected") {
  try {
    parse_graph6("~~????");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("beyond the supported range") != std::string::npos);
  }
  // order 4097 exceeds the cap even though the encoding is well-formed
  std::string big = "~@?@";
  CHECK_THROWS_AS(parse_graph6(big), ParseError);
}

TEST_CASE("stream reading skips blank lines and numbers records") {
  std::istringstream in("C~\n\nD??\nA_\n");
  auto graphs = qmax::read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0].order() == 4);
  CHECK(graphs[1].order() == 5);
  CHECK(graphs[2].order() == 2);
}

TEST_CASE("stream errors carry the record index") {
  std::istringstream in("C~\nA_\nC\n");
  try {
    qmax::read_graph6_stream(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.record() == 3);
    CHECK(std::string(e.what()).find("record 3") != std::string::npos);
  }
}

TEST_CASE("edge list parsing matches the documented format") {
  Graph k3 = qmax::parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
  CHECK(k3 == Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  Graph e2 = qmax::parse_edge_list("2 0");
  CHECK(e2.order() == 2);
  CHECK(e2.edge_count() == 0);
}

TEST_CASE("edge list errors name the line") {
  CHECK_THROWS_AS(qmax::parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(qmax::parse_edge_list("x"), ParseError);
  try {
    qmax::parse_edge_list("3 1\n0 5\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("out of range [0, 3)") != std::string::npos);
  }
  CHECK_THROWS_AS(qmax::parse_edge_list("3 1\n0 0\n"), ParseError);     // loop
  CHECK_THROWS_AS(qmax::parse_edge_list("3 2\n0 1\n"), ParseError);     // too few
  CHECK_THROWS_AS(qmax::parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);  // too many
}

TEST_CASE("edge list writing round-trips") {
  std::mt19937_64 eng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = testutil::random_graph(8, 0.4, eng);
    CHECK(qmax::parse_edge_list(qmax::write_edge_list(g)) == g);
  }
  CHECK(qmax::write_edge_list(Graph::from_edges(3, {{2, 1}, {1, 0}})) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("auto detection distinguishes the two formats") {
  std::istringstream el("3 3\n0 1\n1 2\n0 2\n");
  CHECK(qmax::read_graph_auto(el) == qmax::parse_edge_list("3 3\n0 1\n1 2\n0 2"));
  std::istringstream g6("C~\n");
  CHECK(qmax::read_graph_auto(g6) == parse_graph6("C~"));
  std::istringstream multi("C~\nA_\n");
  try {
    qmax::read_graph_auto(multi);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("exactly one record") != std::string::npos);
  }
}
