#include "qmax/detectors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qmax {

void PathSearcher::bind(const Graph& g) {
  g_ = &g;
  n_ = g.order();
  words_ = g.row_words();
  visited_.assign(words_, 0);
  reach_.assign(words_, 0);
  path_.clear();
}

int PathSearcher::reachable(int v, int floor) {
  // bfs over unvisited vertices with id > floor, starting from v's neighbors
  std::copy(visited_.begin(), visited_.end(), reach_.begin());
  for (int x = 0; x <= floor; ++x) reach_[x >> 6] |= std::uint64_t{1} << (x & 63);
  int count = 0;
  queue_.clear();
  std::size_t head = 0;
  auto expand = [&](int u) {
    const std::uint64_t* r = g_->row(u);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t fresh = r[w] & ~reach_[w];
      while (fresh) {
        int b = std::countr_zero(fresh);
        fresh &= fresh - 1;
        reach_[w] |= std::uint64_t{1} << b;
        ++count;
        queue_.push_back(w * 64 + b);
      }
    }
  };
  expand(v);
  while (head < queue_.size()) expand(queue_[head++]);
  return count;
}

bool PathSearcher::dfs_path(int v, int remaining) {
  // remaining counts v itself
  path_.push_back(v);
  mark(v);
  if (remaining == 1) return true;  // marks stay; bind() resets before reuse
  if (remaining >= 4 && reachable(v, -1) < remaining - 1) {
    unmark(v);
    path_.pop_back();
    return false;
  }
  const std::uint64_t* r = g_->row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t cand = r[w] & ~visited_[w];
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (dfs_path(w * 64 + b, remaining - 1)) return true;
      cand = r[w] & ~visited_[w];
      cand &= ~((std::uint64_t{2} << b) - 1);  // resume past b
    }
  }
  unmark(v);
  path_.pop_back();
  return false;
}

bool PathSearcher::dfs_cycle(int v, int remaining, int s) {
  path_.push_back(v);
  mark(v);
  if (remaining == 0) {
    if (g_->has_edge(v, s) && path_[1] < v) return true;  // reflection suppressed
    unmark(v);
    path_.pop_back();
    return false;
  }
  if (remaining >= 3 && reachable(v, s) < remaining) {
    unmark(v);
    path_.pop_back();
    return false;
  }
  const std::uint64_t* r = g_->row(v);
  int wlo = (s + 1) >> 6;
  for (int w = wlo; w < words_; ++w) {
    std::uint64_t cand = r[w] & ~visited_[w];
    if (w == wlo) cand &= ~((std::uint64_t{1} << ((s + 1) & 63)) - 1);  // ids > s only
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (dfs_cycle(w * 64 + b, remaining - 1, s)) return true;
      cand = r[w] & ~visited_[w];
      if (w == wlo) cand &= ~((std::uint64_t{1} << ((s + 1) & 63)) - 1);
      cand &= ~((std::uint64_t{2} << b) - 1);
    }
  }
  unmark(v);
  path_.pop_back();
  return false;
}

bool PathSearcher::dfs_between(int v, int remaining, int target) {
  // remaining counts the target but not v; target stays marked as a barrier
  mark(v);
  if (remaining == 1) {
    bool ok = g_->has_edge(v, target);
    if (!ok) unmark(v);
    return ok;
  }
  if (remaining >= 4 && reachable(v, -1) < remaining - 1) {
    unmark(v);
    return false;
  }
  const std::uint64_t* r = g_->row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t cand = r[w] & ~visited_[w];
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      if (dfs_between(w * 64 + b, remaining - 1, target)) return true;
      cand = r[w] & ~visited_[w];
      cand &= ~((std::uint64_t{2} << b) - 1);
    }
  }
  unmark(v);
  return false;
}

bool PathSearcher::dfs_anchor(int v, int count, int other, int order) {
  // extends the first leg backwards from its anchor; `other` is the second
  // leg's start, kept marked as a barrier while this leg grows
  unmark(other);
  bool done = dfs_path(other, order - count);
  if (done) return true;
  mark(other);
  if (count == order - 1) return false;
  const std::uint64_t* r = g_->row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t cand = r[w] & ~visited_[w];
    while (cand) {
      int b = std::countr_zero(cand);
      cand &= cand - 1;
      int x = w * 64 + b;
      mark(x);
      if (dfs_anchor(x, count + 1, other, order)) return true;
      unmark(x);
      cand = r[w] & ~visited_[w];
      cand &= ~((std::uint64_t{2} << b) - 1);
    }
  }
  return false;
}

std::optional<SubgraphWitness> PathSearcher::find_path(const Graph& g, int order) {
  if (order < 1) throw std::invalid_argument("find_path: order must be >= 1");
  if (order > g.order()) return std::nullopt;
  bind(g);
  for (int s = 0; s < n_; ++s) {
    if (dfs_path(s, order)) return SubgraphWitness{WitnessKind::path, path_};
    // dfs_path unwinds its own marks on failure
  }
  return std::nullopt;
}

std::optional<SubgraphWitness> PathSearcher::find_cycle(const Graph& g, int length) {
  if (length < 3) throw std::invalid_argument("find_cycle: length must be >= 3");
  if (length > g.order()) return std::nullopt;
  bind(g);
  for (int s = 0; s < n_; ++s) {
    if (g_->degree(s) < 2) continue;
    path_.clear();
    if (dfs_cycle(s, length - 1, s)) return SubgraphWitness{WitnessKind::cycle, path_};
  }
  return std::nullopt;
}

bool PathSearcher::path_exists_between(const Graph& g, int u, int v, int order) {
  if (order < 1) throw std::invalid_argument("path_exists_between: order must be >= 1");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::invalid_argument("path_exists_between: endpoint out of range");
  if (u == v) return order == 1;
  if (order == 1) return false;
  if (order > g.order()) return false;
  bind(g);
  mark(v);
  return dfs_between(u, order - 1, v);
}

bool PathSearcher::path_exists_through_edge(const Graph& g, int u, int v, int order) {
  if (order < 2) throw std::invalid_argument("path_exists_through_edge: order must be >= 2");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
    throw std::invalid_argument("path_exists_through_edge: bad endpoints");
  if (!g.has_edge(u, v))
    throw std::invalid_argument("path_exists_through_edge: (u, v) is not an edge");
  if (order > g.order()) return false;
  bind(g);
  mark(u);
  mark(v);
  return dfs_anchor(u, 1, v, order);
}

std::optional<SubgraphWitness> has_path(const Graph& g, int order) {
  PathSearcher s;
  return s.find_path(g, order);
}

std::optional<SubgraphWitness> has_cycle(const Graph& g, int length) {
  PathSearcher s;
  return s.find_cycle(g, length);
}

bool path_exists_between(const Graph& g, int u, int v, int order) {
  PathSearcher s;
  return s.path_exists_between(g, u, v, order);
}

bool path_exists_through_edge(const Graph& g, int u, int v, int order) {
  PathSearcher s;
  return s.path_exists_through_edge(g, u, v, order);
}

int circumference(const Graph& g) {
  PathSearcher s;
  for (int len = g.order(); len >= 3; --len)
    if (s.find_cycle(g, len)) return len;
  return 0;
}

std::vector<int> cycle_spectrum(const Graph& g, int max_length) {
  if (max_length > g.order())
    throw std::invalid_argument("cycle_spectrum: max_length exceeds the order");
  PathSearcher s;
  std::vector<int> out;
  for (int len = 3; len <= max_length; ++len)
    if (s.find_cycle(g, len)) out.push_back(len);
  return out;
}

}  // namespace qmax
