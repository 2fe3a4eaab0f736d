#include "qmax/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "qmax/detectors.hpp"
#include "qmax/families.hpp"
#include "qmax/graph6.hpp"
#include "qmax/spectra.hpp"

namespace qmax {

namespace {

constexpr double kTieSlack = 1e-8;

// iterated neighborhood-color refinement; returns stable colors (ranked,
// isomorphism-invariant)
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n);
  {
    std::vector<int> degs = g.degrees();
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) -
                                  sorted.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      g.for_each_neighbor(v, [&](int w) { sig[v].second.push_back(color[w]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                 uniq.begin());
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

struct CanonSearch {
  const Graph* g = nullptr;
  int n = 0;
  std::vector<int> pos_color;           // required color at each position
  std::vector<int> perm;                // position -> vertex
  std::vector<char> used;
  std::vector<std::uint8_t> cur, best;  // upper-triangle bits, pair order
  bool have_best = false;
  std::vector<int> color;

  bool twins(int u, int w) const {
    int words = g->row_words();
    const std::uint64_t* ru = g->row(u);
    const std::uint64_t* rw = g->row(w);
    for (int i = 0; i < words; ++i) {
      std::uint64_t mu = ru[i], mw = rw[i];
      for (int x : {u, w}) {
        if ((x >> 6) == i) {
          std::uint64_t m = ~(std::uint64_t{1} << (x & 63));
          mu &= m;
          mw &= m;
        }
      }
      if (mu != mw) return false;
    }
    return true;
  }

  void dfs(int p) {
    if (p == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != pos_color[p]) continue;
      bool dup = false;
      for (int w : tried)
        if (twins(v, w)) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(v);

      int base = p * (p - 1) / 2;
      for (int i = 0; i < p; ++i)
        cur[base + i] = g->has_edge(perm[i], v) ? 1 : 0;
      // prune on the whole prefix; cheap at this scale
      if (have_best) {
        bool worse = false, better = false;
        for (int t = 0; t < base + p; ++t) {
          if (cur[t] != best[t]) {
            worse = cur[t] > best[t];
            better = !worse;
            break;
          }
        }
        if (worse) continue;
        (void)better;
      }
      perm[p] = v;
      used[v] = 1;
      dfs(p + 1);
      used[v] = 0;
    }
  }
};

}  // namespace

std::string canonical_graph6(const Graph& g) {
  int n = g.order();
  if (n > 12) throw std::invalid_argument("canonical_graph6: order above 12 unsupported");
  if (n <= 1) return write_graph6(g);

  CanonSearch s;
  s.g = &g;
  s.n = n;
  s.color = refine_colors(g);
  std::vector<int> order_ids(n);
  for (int v = 0; v < n; ++v) order_ids[v] = v;
  std::stable_sort(order_ids.begin(), order_ids.end(),
                   [&](int a, int b) { return s.color[a] < s.color[b]; });
  s.pos_color.resize(n);
  for (int p = 0; p < n; ++p) s.pos_color[p] = s.color[order_ids[p]];
  s.perm.assign(n, -1);
  s.used.assign(n, 0);
  s.cur.assign(n * (n - 1) / 2, 0);
  s.dfs(0);

  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (s.best[j * (j - 1) / 2 + i]) b.add_edge(i, j);
  return write_graph6(b.build());
}

bool is_isomorphic_to_snk(const Graph& g, int k) {
  int n = g.order();
  if (k < 0 || k > n) return false;
  if (k >= n - 1)  // degenerates to the complete graph
    return g.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
  if (k == 0) return g.edge_count() == 0;
  // k dominating vertices force the rest independent when low degrees equal k
  int full = 0, low = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++full;
    else if (g.degree(v) == k)
      ++low;
  }
  return full == k && low == n - k;
}

namespace {

struct ShardResult {
  std::uint64_t free_count = 0;
  double qmax = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::uint64_t, double>> near;  // (mask, q) within slack of qmax
};

void scan_range(int n, int cycle_len, std::uint64_t lo, std::uint64_t hi, ShardResult& out) {
  PathSearcher searcher;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g = Graph::from_upper_bits(n, mask);
    if (cycle_len <= n && searcher.find_cycle(g, cycle_len)) continue;
    ++out.free_count;
    double q = q_index(g).q;
    if (q > out.qmax) {
      out.qmax = q;
      std::erase_if(out.near, [&](const auto& e) { return e.second < q - kTieSlack; });
    }
    if (q >= out.qmax - kTieSlack) out.near.emplace_back(mask, q);
  }
}

}  // namespace

VerifyOutcome verify_exhaustive(int n, int k, int jobs) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "verify_exhaustive: order must be in [1, 7]; use the stream mode for larger orders");
  if (k < 1) throw std::invalid_argument("verify_exhaustive: need k >= 1");
  int nbits = n * (n - 1) / 2;
  std::uint64_t total = std::uint64_t{1} << nbits;
  int cycle_len = 2 * k + 1;

  // fixed shard split keeps results byte-identical for any worker count
  constexpr int kShards = 64;
  std::vector<ShardResult> shards(kShards);
  int workers = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, kShards);
  auto shard_lo = [&](int i) { return total / kShards * i + std::min<std::uint64_t>(i, total % kShards); };
  if (workers <= 1) {
    for (int i = 0; i < kShards; ++i) scan_range(n, cycle_len, shard_lo(i), shard_lo(i + 1), shards[i]);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        int i;
        while ((i = next.fetch_add(1)) < kShards)
          scan_range(n, cycle_len, shard_lo(i), shard_lo(i + 1), shards[i]);
      });
    for (auto& th : pool) th.join();
  }

  double qmax = -std::numeric_limits<double>::infinity();
  std::uint64_t free_total = 0;
  for (const auto& s : shards) {
    free_total += s.free_count;
    if (s.qmax > qmax) qmax = s.qmax;
  }

  std::set<std::string> tie_canon;
  for (const auto& s : shards)
    for (const auto& [mask, q] : s.near) {
      if (q < qmax - kTieSlack) continue;
      tie_canon.insert(canonical_graph6(Graph::from_upper_bits(n, mask)));
    }
  // ties resolve to the smaller canonical string
  std::string maximizer = tie_canon.empty() ? std::string() : *tie_canon.begin();

  VerifyOutcome out;
  out.report.n = n;
  out.report.k = k;
  out.report.total_graphs = total;
  out.report.free_graphs = free_total;
  out.report.max_q = qmax;
  out.report.maximizer = maximizer;
  out.report.ties.assign(tie_canon.begin(), tie_canon.end());
  out.report.mode = "exhaustive-labeled";
  out.report.maximizer_is_snk = k <= n && maximizer == canonical_graph6(snk(n, k));

  if (k <= n) {
    double closed = snk_q_closed_form(n, k);
    if (!(qmax >= closed - kTieSlack))
      out.violations.push_back("max_q " + std::to_string(qmax) +
                               " fell below the construction value " + std::to_string(closed));
  }
  if (!maximizer.empty()) {
    Graph mg = parse_graph6(maximizer);
    if (cycle_len <= mg.order() && has_cycle(mg, cycle_len))
      out.violations.push_back("recorded maximizer contains a forbidden cycle");
  }
  return out;
}

VerifyOutcome verify_stream(std::istream& in, int k) {
  if (k < 1) throw std::invalid_argument("verify_stream: need k >= 1");
  std::vector<Graph> graphs = read_graph6_stream(in);
  int cycle_len = 2 * k + 1;
  int n = graphs.empty() ? 0 : graphs.front().order();
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (graphs[i].order() != n)
      throw ParseError("record " + std::to_string(i + 1) + ": order " +
                           std::to_string(graphs[i].order()) + " differs from the first record (" +
                           std::to_string(n) + ")",
                       0, i + 1);

  PathSearcher searcher;
  double qmax = -std::numeric_limits<double>::infinity();
  std::uint64_t free_count = 0;
  std::vector<std::pair<std::size_t, double>> near;
  bool snk_seen = false;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (is_isomorphic_to_snk(g, k)) snk_seen = true;
    if (cycle_len <= n && searcher.find_cycle(g, cycle_len)) continue;
    ++free_count;
    double q = q_index(g).q;
    if (q > qmax) {
      qmax = q;
      std::erase_if(near, [&](const auto& e) { return e.second < q - kTieSlack; });
    }
    if (q >= qmax - kTieSlack) near.emplace_back(i, q);
  }

  bool small = n <= 12;
  auto name_of = [&](const Graph& g) { return small ? canonical_graph6(g) : write_graph6(g); };
  std::set<std::string> ties;
  for (const auto& [idx, q] : near) {
    if (q < qmax - kTieSlack) continue;
    ties.insert(name_of(graphs[idx]));
  }
  std::string maximizer = ties.empty() ? std::string() : *ties.begin();

  VerifyOutcome out;
  out.report.n = n;
  out.report.k = k;
  out.report.total_graphs = graphs.size();
  out.report.free_graphs = free_count;
  out.report.max_q = free_count ? qmax : std::numeric_limits<double>::quiet_NaN();
  out.report.maximizer = maximizer;
  out.report.ties.assign(ties.begin(), ties.end());
  out.report.mode = "stream";
  out.report.maximizer_is_snk = false;
  if (!maximizer.empty()) {
    Graph mg = parse_graph6(maximizer);
    out.report.maximizer_is_snk = is_isomorphic_to_snk(mg, k);
    if (cycle_len <= mg.order() && has_cycle(mg, cycle_len))
      out.violations.push_back("recorded maximizer contains a forbidden cycle");
  }
  if (snk_seen && k <= n && free_count) {
    double closed = snk_q_closed_form(n, k);
    if (!(qmax >= closed - kTieSlack))
      out.violations.push_back("max_q " + std::to_string(qmax) +
                               " fell below the construction value " + std::to_string(closed) +
                               " although the construction was present");
  }
  return out;
}

namespace {

// deterministic shuffle; std::shuffle is implementation-defined
template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& eng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[eng() % i]);
}

Graph random_maximal_free(int n, int cycle_len, std::mt19937_64& eng, PathSearcher& searcher) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  fisher_yates(pairs, eng);
  Graph g(n);
  for (auto [u, v] : pairs) {
    // adding an edge can only create the forbidden cycle through that edge
    if (cycle_len <= n && searcher.path_exists_between(g, u, v, cycle_len)) continue;
    g = g.with_edge(u, v);
  }
  return g;
}

}  // namespace

SearchOutcome local_search(const SearchConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("local_search: need n >= 1");
  if (cfg.k < 1 || cfg.k > cfg.n) throw std::invalid_argument("local_search: need 1 <= k <= n");
  if (cfg.moves.empty()) throw std::invalid_argument("local_search: move set is empty");
  int n = cfg.n;
  int cycle_len = 2 * cfg.k + 1;
  double closed = snk_q_closed_form(n, cfg.k);

  std::mt19937_64 master(cfg.seed);
  std::vector<std::uint64_t> sub_seeds(cfg.restarts + 1);
  for (auto& s : sub_seeds) s = master();

  SearchOutcome out;
  out.best_q_trace.reserve(static_cast<std::size_t>(cfg.iterations) * (cfg.restarts + 1));
  PathSearcher searcher;
  double best_q = -std::numeric_limits<double>::infinity();
  Graph best_g;
  std::uint64_t examined = 0, passed = 0;

  std::vector<std::pair<int, int>> edge_buf, non_edge_buf;
  for (int r = 0; r <= cfg.restarts; ++r) {
    std::mt19937_64 eng(sub_seeds[r]);
    Graph g = r == 0 ? snk(n, cfg.k) : random_maximal_free(n, cycle_len, eng, searcher);
    double qc = q_index(g).q;
    ++examined;
    ++passed;
    if (qc > best_q) {
      best_q = qc;
      best_g = g;
    }
    for (std::uint64_t it = 0; it < cfg.iterations; ++it) {
      Move mv = cfg.moves[eng() % cfg.moves.size()];
      edge_buf.clear();
      non_edge_buf.clear();
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
          (g.has_edge(u, v) ? edge_buf : non_edge_buf).emplace_back(u, v);

      bool evaluated = false;
      Graph cand;
      if (mv == Move::add && !non_edge_buf.empty()) {
        auto [u, v] = non_edge_buf[eng() % non_edge_buf.size()];
        ++examined;
        if (!(cycle_len <= n && searcher.path_exists_between(g, u, v, cycle_len))) {
          cand = g.with_edge(u, v);
          evaluated = true;
        }
      } else if (mv == Move::remove && !edge_buf.empty()) {
        auto [u, v] = edge_buf[eng() % edge_buf.size()];
        ++examined;
        cand = g.without_edge(u, v);
        evaluated = true;
      } else if (mv == Move::swap && !edge_buf.empty() && !non_edge_buf.empty()) {
        auto [a, b] = edge_buf[eng() % edge_buf.size()];
        auto [u, v] = non_edge_buf[eng() % non_edge_buf.size()];
        ++examined;
        Graph g2 = g.without_edge(a, b);
        if (!(cycle_len <= n && searcher.path_exists_between(g2, u, v, cycle_len))) {
          cand = g2.with_edge(u, v);
          evaluated = true;
        }
      }
      if (evaluated) {
        ++passed;
        double qn = q_index(cand).q;
        if (qn >= qc) {
          g = std::move(cand);
          qc = qn;
          if (qc > best_q) {
            best_q = qc;
            best_g = g;
          }
        }
      }
      out.best_q_trace.push_back(best_q);
    }
  }

  out.report.n = n;
  out.report.k = cfg.k;
  out.report.total_graphs = examined;
  out.report.free_graphs = passed;
  out.report.max_q = best_q;
  out.report.maximizer = write_graph6(best_g);
  out.report.maximizer_is_snk = is_isomorphic_to_snk(best_g, cfg.k);
  out.report.mode = "search";
  out.report.seed = cfg.seed;
  out.finding = best_q > closed + kTieSlack;
  if (out.finding) out.finding_graph6 = out.report.maximizer;
  return out;
}

HarnessRecord lemma8_harness(int k, long long n, int t) {
  if (k < 3) throw std::invalid_argument("lemma8_harness: need k >= 3");
  if (n < 110LL * k * k)
    throw std::invalid_argument("lemma8_harness: need n >= 110k^2 = " +
                                std::to_string(110LL * k * k));
  if (t < 1 || t > k * k + k - 3)
    throw std::invalid_argument("lemma8_harness: need 1 <= t <= k^2+k-3");
  if (n > kMaxOrder) throw std::invalid_argument("lemma8_harness: order exceeds the cap");

  int inner = static_cast<int>(n) - 1 - t;
  Graph g = join(complete_graph(1), disjoint_union(snk(inner, k - 1), complete_graph(t)));
  HarnessRecord rec;
  rec.k = k;
  rec.n = n;
  rec.parts = {inner, t};
  rec.lhs = q_index(g).q;
  rec.rhs = snk_q_closed_form(static_cast<int>(n), k);
  rec.margin = rec.rhs - rec.lhs;
  rec.holds = rec.lhs < rec.rhs - kTieSlack;
  return rec;
}

HarnessRecord lemma9_harness(int k, const std::vector<int>& parts) {
  if (k < 3) throw std::invalid_argument("lemma9_harness: need k >= 3");
  if (parts.size() < 2) throw std::invalid_argument("lemma9_harness: need at least two parts");
  long long total = 1;
  for (int p : parts) {
    if (p < k)
      throw std::invalid_argument("lemma9_harness: every part must have order >= k");
    total += p;
  }
  if (total > kMaxOrder) throw std::invalid_argument("lemma9_harness: order exceeds the cap");

  Graph u = snk(parts[0], k - 1);
  for (std::size_t i = 1; i < parts.size(); ++i)
    u = disjoint_union(u, snk(parts[i], k - 1));
  Graph g = join(complete_graph(1), u);

  HarnessRecord rec;
  rec.k = k;
  rec.n = total;
  rec.parts = parts;
  rec.lhs = q_index(g).q;
  rec.rhs = snk_q_closed_form(static_cast<int>(total), k);
  rec.margin = rec.rhs - rec.lhs;
  rec.holds = rec.lhs < rec.rhs - kTieSlack;
  return rec;
}

CycleSpanRecord theorem1_harness(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("theorem1_harness: need k >= 2");
  CycleSpanRecord rec;
  rec.n = g.order();
  rec.k = k;
  if (rec.n < 1) throw std::invalid_argument("theorem1_harness: graph has no vertices");
  rec.q = q_index(g).q;
  rec.threshold = static_cast<double>(rec.n) + 2.0 * k - 2.0;
  rec.applicable = rec.q >= rec.threshold - kTieSlack;
  rec.asserted = rec.applicable && rec.n > 6LL * k * k;
  int maxl = std::min(rec.n, 2 * k + 2);
  rec.spectrum = cycle_spectrum(g, maxl);
  std::set<int> present(rec.spectrum.begin(), rec.spectrum.end());
  for (int len = 3; len <= maxl; ++len)
    if (!present.count(len)) rec.missing.push_back(len);
  rec.ok = !rec.asserted || rec.missing.empty();
  return rec;
}

}  // namespace qmax
