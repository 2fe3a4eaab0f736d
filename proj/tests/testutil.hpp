#pragma once

// shared helpers for the unit suites: naive reference oracles (no pruning, no
// shared code paths with the library) and deterministic random graphs

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "qmax/graph.hpp"

namespace testutil {

// every injective vertex sequence of the given length, checked directly
inline bool naive_sequence_exists(const qmax::Graph& g, int len,
                                  const std::function<bool(const std::vector<int>&)>& accept) {
  int n = g.order();
  if (len > n || len < 1) return false;
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == len) return accept(seq);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (!seq.empty() && !g.has_edge(seq.back(), v)) continue;
      used[v] = 1;
      seq.push_back(v);
      if (rec()) return true;
      seq.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec();
}

inline bool naive_has_path(const qmax::Graph& g, int order) {
  return naive_sequence_exists(g, order, [](const std::vector<int>&) { return true; });
}

// first path sequence in lexicographic order, if any
inline std::optional<std::vector<int>> naive_first_path(const qmax::Graph& g, int order) {
  std::optional<std::vector<int>> found;
  naive_sequence_exists(g, order, [&](const std::vector<int>& s) {
    found = s;
    return true;
  });
  return found;
}

inline bool naive_has_cycle(const qmax::Graph& g, int len) {
  if (len < 3) return false;
  return naive_sequence_exists(
      g, len, [&](const std::vector<int>& s) { return g.has_edge(s.back(), s.front()); });
}

inline bool naive_path_between(const qmax::Graph& g, int u, int v, int order) {
  if (u == v) return order == 1;
  return naive_sequence_exists(g, order, [&](const std::vector<int>& s) {
    return s.front() == u && s.back() == v;
  });
}

inline bool naive_path_through_edge(const qmax::Graph& g, int u, int v, int order) {
  return naive_sequence_exists(g, order, [&](const std::vector<int>& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if ((s[i] == u && s[i + 1] == v) || (s[i] == v && s[i + 1] == u)) return true;
    }
    return false;
  });
}

inline int naive_circumference(const qmax::Graph& g) {
  for (int len = g.order(); len >= 3; --len)
    if (naive_has_cycle(g, len)) return len;
  return 0;
}

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// platform-stable uniform double in [0, 1)
inline double unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline qmax::Graph random_graph(int n, double p, std::mt19937_64& eng) {
  qmax::GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (unit_double(eng) < p) b.add_edge(u, v);
  return b.build();
}

inline qmax::Graph random_graph_no_isolated(int n, double p, std::mt19937_64& eng) {
  for (;;) {
    qmax::Graph g = random_graph(n, p, eng);
    if (n == 0 || g.min_degree() >= 1) return g;
  }
}

// permutation-based isomorphism test; factorial cost, n <= 8
inline bool brute_isomorphic(const qmax::Graph& a, const qmax::Graph& b) {
  int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 1; v < n && ok; ++v)
      for (int u = 0; u < v && ok; ++u)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline qmax::Graph relabel(const qmax::Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  g.for_each_edge([&](int u, int v) { edges.emplace_back(perm[u], perm[v]); });
  return qmax::Graph::from_edges(g.order(), edges);
}

inline qmax::Graph random_relabel(const qmax::Graph& g, std::mt19937_64& eng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[eng() % i]);
  return relabel(g, perm);
}

}  // namespace testutil
