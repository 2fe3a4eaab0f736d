#include "qmax/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qmax {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in [0, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(n));
  n_ = n;
  words_ = words_for(n);
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
  deg_.assign(n_, 0);
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
}

void Graph::set_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++deg_[u];
  ++deg_[v];
  ++m_;
}

void Graph::clear_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --deg_[u];
  --deg_[v];
  --m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.set_edge(u, v);
  return g;
}

Graph Graph::from_upper_bits(int n, std::uint64_t bits) {
  if (n < 0 || static_cast<long long>(n) * (n - 1) / 2 > 64)
    throw std::invalid_argument("from_upper_bits: order too large for a 64-bit mask");
  Graph g(n);
  int t = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++t)
      if ((bits >> t) & 1) g.set_edge(u, v);
  if (n * (n - 1) / 2 < 64 && (bits >> (n * (n - 1) / 2)) != 0)
    throw std::invalid_argument("from_upper_bits: bits beyond the upper triangle");
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, "has_edge");
  check_vertex(v, "has_edge");
  return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v, "degree");
  return deg_[v];
}

int Graph::min_degree() const {
  if (n_ == 0) return -1;
  return *std::min_element(deg_.begin(), deg_.end());
}

int Graph::max_degree() const {
  if (n_ == 0) return -1;
  return *std::max_element(deg_.begin(), deg_.end());
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  VertexSet out;
  out.reserve(deg_[v]);
  for_each_neighbor(v, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for_each_edge([&](int u, int v) { out.emplace_back(u, v); });
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.set_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u, "without_edge");
  check_vertex(v, "without_edge");
  Graph g = *this;
  g.clear_edge(u, v);
  return g;
}

DegreeStats degree_stats(const Graph& g) {
  return DegreeStats{g.degrees(), g.min_degree(), g.max_degree()};
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet v = s;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int x : v)
    if (x < 0 || x >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(x) +
                                  " out of range");
  GraphBuilder b(static_cast<int>(v.size()));
  for (std::size_t j = 1; j < v.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.has_edge(v[i], v[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
  int n = g.order();
  std::vector<VertexSet> out;
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    queue.assign(1, s);
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      comp.push_back(u);
      g.for_each_neighbor(u, [&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  long long n = static_cast<long long>(a.order()) + b.order();
  if (n > kMaxOrder) throw std::invalid_argument("join: combined order exceeds the cap");
  GraphBuilder g(static_cast<int>(n));
  a.for_each_edge([&](int u, int v) { g.add_edge(u, v); });
  int off = a.order();
  b.for_each_edge([&](int u, int v) { g.add_edge(u + off, v + off); });
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, v + off);
  return g.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  long long n = static_cast<long long>(a.order()) + b.order();
  if (n > kMaxOrder)
    throw std::invalid_argument("disjoint_union: combined order exceeds the cap");
  GraphBuilder g(static_cast<int>(n));
  a.for_each_edge([&](int u, int v) { g.add_edge(u, v); });
  int off = a.order();
  b.for_each_edge([&](int u, int v) { g.add_edge(u + off, v + off); });
  return g.build();
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("delete_vertex: vertex " + std::to_string(v) + " out of range");
  VertexSet keep;
  keep.reserve(g.order() - 1);
  for (int u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

namespace {

// packed membership mask over g's word layout
std::vector<std::uint64_t> make_mask(const Graph& g, const VertexSet& s, const char* what) {
  std::vector<std::uint64_t> mask(g.row_words(), 0);
  for (int x : s) {
    if (x < 0 || x >= g.order())
      throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(x) +
                                  " out of range");
    mask[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return mask;
}

}  // namespace

long long edges_within(const Graph& g, const VertexSet& s) {
  auto mask = make_mask(g, s, "edges_within");
  long long twice = 0;
  for (int u : s) {
    const std::uint64_t* r = g.row(u);
    for (int w = 0; w < g.row_words(); ++w) twice += std::popcount(r[w] & mask[w]);
  }
  return twice / 2;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  auto ma = make_mask(g, a, "edges_between");
  auto mb = make_mask(g, b, "edges_between");
  for (int w = 0; w < g.row_words(); ++w)
    if (ma[w] & mb[w]) throw std::invalid_argument("edges_between: sets are not disjoint");
  long long total = 0;
  for (int u : a) {
    const std::uint64_t* r = g.row(u);
    for (int w = 0; w < g.row_words(); ++w) total += std::popcount(r[w] & mb[w]);
  }
  return total;
}

}  // namespace qmax
