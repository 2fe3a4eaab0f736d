#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmax/graph.hpp"

namespace qmax {

enum class WitnessKind { path, cycle };

struct SubgraphWitness {
  WitnessKind kind;
  std::vector<int> vertices;  // in traversal order; for cycles the last is
                              // adjacent to the first
};

// exact backtracking searcher with reusable scratch; all queries leave the
// scratch clean for the next call
class PathSearcher {
public:
  PathSearcher() = default;

  // path on `order` vertices (order >= 1); witness = lexicographically
  // first found under ascending start and neighbor order
  std::optional<SubgraphWitness> find_path(const Graph& g, int order);

  // cycle on exactly `length` vertices (length >= 3); anchored at its
  // smallest vertex, reflections suppressed
  std::optional<SubgraphWitness> find_cycle(const Graph& g, int length);

  // path on `order` vertices with endpoints u and v
  bool path_exists_between(const Graph& g, int u, int v, int order);

  // path on `order` vertices using edge (u, v); order >= 2
  bool path_exists_through_edge(const Graph& g, int u, int v, int order);

private:
  void bind(const Graph& g);
  bool vis(int v) const { return (visited_[v >> 6] >> (v & 63)) & 1; }
  void mark(int v) { visited_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void unmark(int v) { visited_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  // unvisited vertices (ids > floor) reachable from v through unvisited ones
  int reachable(int v, int floor);
  bool dfs_path(int v, int remaining);
  bool dfs_cycle(int v, int remaining, int s);
  bool dfs_between(int v, int remaining, int target);
  bool dfs_anchor(int v, int count, int other, int order);

  const Graph* g_ = nullptr;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> visited_;
  std::vector<std::uint64_t> reach_;
  std::vector<int> queue_;
  std::vector<int> path_;
};

std::optional<SubgraphWitness> has_path(const Graph& g, int order);
std::optional<SubgraphWitness> has_cycle(const Graph& g, int length);
bool path_exists_between(const Graph& g, int u, int v, int order);
bool path_exists_through_edge(const Graph& g, int u, int v, int order);

// length of a longest cycle; 0 when acyclic
int circumference(const Graph& g);

// sorted cycle lengths present in 3..max_length; requires max_length <= order
std::vector<int> cycle_spectrum(const Graph& g, int max_length);

}  // namespace qmax
