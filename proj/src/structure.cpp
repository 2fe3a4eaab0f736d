#include "qmax/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "qmax/detectors.hpp"

namespace qmax {

PeelTrace peel(const Graph& g, int threshold) {
  int n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<int> deg = g.degrees();
  PeelTrace trace;
  int alive_count = n;
  while (alive_count > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;  // ties keep the lowest id
    if (deg[pick] >= threshold) break;
    alive[pick] = 0;
    --alive_count;
    trace.removed.emplace_back(pick, deg[pick]);
    g.for_each_neighbor(pick, [&](int u) {
      if (alive[u]) --deg[u];
    });
  }
  for (int v = 0; v < n; ++v)
    if (alive[v]) trace.survivor.push_back(v);
  return trace;
}

namespace {

struct CoverSearch {
  const Graph* g;
  int words;
  std::vector<std::uint64_t> chosen_mask;
  std::vector<int> chosen;
  std::optional<VertexSet> best;

  bool chosen_has(int v) const {
    return (chosen_mask[v >> 6] >> (v & 63)) & 1;
  }
  void choose(int v) {
    chosen_mask[v >> 6] |= std::uint64_t{1} << (v & 63);
    chosen.push_back(v);
  }
  void unchoose(int v) {
    chosen_mask[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    chosen.pop_back();
  }

  // smallest-endpoint uncovered edge, or nullopt when everything is covered
  std::optional<std::pair<int, int>> first_uncovered() const {
    for (int u = 0; u < g->order(); ++u) {
      if (chosen_has(u)) continue;
      const std::uint64_t* r = g->row(u);
      for (int w = 0; w < words; ++w) {
        std::uint64_t free_nbr = r[w] & ~chosen_mask[w];
        if (free_nbr) return std::make_pair(u, w * 64 + std::countr_zero(free_nbr));
      }
    }
    return std::nullopt;
  }

  void record() {
    VertexSet c = chosen;
    std::sort(c.begin(), c.end());
    if (!best || c.size() < best->size() || (c.size() == best->size() && c < *best))
      best = std::move(c);
  }

  void run(int budget) {
    auto edge = first_uncovered();
    if (!edge) {
      record();
      return;
    }
    if (budget == 0) return;
    choose(edge->first);
    run(budget - 1);
    unchoose(edge->first);
    choose(edge->second);
    run(budget - 1);
    unchoose(edge->second);
  }
};

}  // namespace

std::optional<VertexSet> vertex_cover_le(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("vertex_cover_le: need k >= 0");
  CoverSearch s;
  s.g = &g;
  s.words = g.row_words();
  s.chosen_mask.assign(g.row_words(), 0);
  s.run(k);
  return s.best;
}

namespace {

// one hub adjacent to everything, the rest splitting into complete blocks
// of t equal orders after hub removal
bool is_hub_of_cliques(const Graph& g, int k) {
  int n = g.order();
  if (n < 2 || k < 1 || (n - 1) % k != 0) return false;
  for (int hub = 0; hub < n; ++hub) {
    if (g.degree(hub) != n - 1) continue;
    Graph rest = delete_vertex(g, hub);
    bool ok = true;
    for (const auto& comp : components(rest)) {
      if (static_cast<int>(comp.size()) != k ||
          edges_within(rest, comp) != static_cast<long long>(k) * (k - 1) / 2) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

StructureClass classify(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("classify: need k >= 1");
  int n = g.order();
  if (components(g).size() != 1)
    throw std::invalid_argument("classify: hypothesis failed: graph is not connected");
  if (g.min_degree() < k)
    throw std::invalid_argument("classify: hypothesis failed: minimum degree " +
                                std::to_string(g.min_degree()) + " < k = " + std::to_string(k));
  if (n < 2 * k + 1)
    throw std::invalid_argument("classify: hypothesis failed: order " + std::to_string(n) +
                                " < 2k+1 = " + std::to_string(2 * k + 1));

  if (auto w = has_path(g, 2 * k + 2)) return HasLongPath{w->vertices};
  if ((n - 1) % k == 0 && is_hub_of_cliques(g, k)) return IsLtk{(n - 1) / k};
  if (auto cover = vertex_cover_le(g, k)) return SubgraphOfSnk{*cover};
  throw StructureError("no structure class applies at order " + std::to_string(n) +
                       ", k = " + std::to_string(k));
}

DominationDiagnostic domination_diagnostic(const Graph& g, int w, int k) {
  if (w < 0 || w >= g.order())
    throw std::invalid_argument("domination_diagnostic: vertex out of range");
  if (k < 1) throw std::invalid_argument("domination_diagnostic: need k >= 1");

  DominationDiagnostic d;
  d.a = g.neighbors(w);
  for (int v = 0; v < g.order(); ++v)
    if (v != w && !g.has_edge(v, w)) d.b.push_back(v);

  int words = g.row_words();
  std::vector<std::uint64_t> mask_a(words, 0), mask_b(words, 0);
  for (int x : d.a) mask_a[x >> 6] |= std::uint64_t{1} << (x & 63);
  for (int x : d.b) mask_b[x >> 6] |= std::uint64_t{1} << (x & 63);

  for (int a : d.a) {
    const std::uint64_t* r = g.row(a);
    bool all = true;
    for (int i = 0; i < words; ++i)
      if ((r[i] & mask_b[i]) != mask_b[i]) {
        all = false;
        break;
      }
    if (all) d.a_prime.push_back(a);
  }
  for (int b : d.b) {
    const std::uint64_t* r = g.row(b);
    bool all = true;
    for (int i = 0; i < words; ++i)
      if ((r[i] & mask_a[i]) != mask_a[i]) {
        all = false;
        break;
      }
    if (all) {
      d.some_b_dominates_a = true;
      break;
    }
  }

  d.edges_a = edges_within(g, d.a);
  d.edges_ab = edges_between(g, d.a, d.b);
  long long kk = 2LL * k * k;
  d.b_small = static_cast<long long>(d.b.size()) < kk;
  d.a_prime_large =
      static_cast<long long>(d.a_prime.size()) > static_cast<long long>(d.a.size()) - kk;
  return d;
}

}  // namespace qmax
