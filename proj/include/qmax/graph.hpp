#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace qmax {

// sorted list of distinct vertex ids
using VertexSet = std::vector<int>;

// hard cap on graph order; keeps bitset rows and O(n^2) helpers honest
inline constexpr int kMaxOrder = 4096;

// simple undirected graph on vertices 0..n-1, packed adjacency rows
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  // builds from an edge list; duplicate edges collapse, loops and
  // out-of-range endpoints throw std::invalid_argument
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // decodes the upper triangle from a bit mask in column-major pair order
  // (0,1),(0,2),(1,2),(0,3),...; requires n(n-1)/2 <= 64
  static Graph from_upper_bits(int n, std::uint64_t bits);

  int order() const { return n_; }
  long long edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& degrees() const { return deg_; }
  int min_degree() const;  // -1 on the empty graph
  int max_degree() const;  // -1 on the empty graph

  VertexSet neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

  // raw row access for word-parallel scans
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  int row_words() const { return words_; }

  // visits neighbors of v in ascending order
  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  // visits each edge once as (u, v) with u < v
  template <typename F>
  void for_each_edge(F&& f) const {
    for (int u = 0; u < n_; ++u) {
      for_each_neighbor(u, [&](int v) {
        if (u < v) f(u, v);
      });
    }
  }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

private:
  friend class GraphBuilder;
  void check_vertex(int v, const char* what) const;
  void set_edge(int u, int v);
  void clear_edge(int u, int v);

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> adj_;  // n_ rows of words_ words
  std::vector<int> deg_;
};

// incremental construction without per-edge copies
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  void add_edge(int u, int v) { g_.set_edge(u, v); }
  Graph build() { return std::move(g_); }

private:
  Graph g_;
};

struct DegreeStats {
  std::vector<int> degrees;
  int min = -1;
  int max = -1;
};

DegreeStats degree_stats(const Graph& g);

// subgraph induced by s (deduplicated); vertex i of the result is the
// i-th smallest member of s
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// connected components ordered by smallest member, each sorted
std::vector<VertexSet> components(const Graph& g);

// join: both vertex sets kept (b shifted by a.order()), all cross edges added
Graph join(const Graph& a, const Graph& b);

Graph disjoint_union(const Graph& a, const Graph& b);

// removes v; vertices above v shift down by one
Graph delete_vertex(const Graph& g, int v);

long long edges_within(const Graph& g, const VertexSet& s);

// a and b must be disjoint
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace qmax
