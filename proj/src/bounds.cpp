#include "qmax/bounds.hpp"

#include <stdexcept>

#include "qmax/spectra.hpp"

namespace qmax {

std::optional<double> merris_bound(const Graph& g) {
  std::optional<double> best;
  for (int u = 0; u < g.order(); ++u) {
    int d = g.degree(u);
    if (d == 0) continue;  // isolated vertices have no neighborhood average
    long long nbr_sum = 0;
    g.for_each_neighbor(u, [&](int v) { nbr_sum += g.degree(v); });
    double val = d + static_cast<double>(nbr_sum) / d;
    if (!best || val > *best) best = val;
  }
  return best;
}

double das_bound(const Graph& g) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("das_bound: order must be >= 2");
  return 2.0 * static_cast<double>(g.edge_count()) / (n - 1) + n - 2;
}

long long eg_path_max_edges(long long n, int p) {
  if (p < 2) throw std::invalid_argument("eg_path_max_edges: forbidden order must be >= 2");
  if (n < 0) throw std::invalid_argument("eg_path_max_edges: order must be >= 0");
  return static_cast<long long>(p - 2) * n / 2;
}

long long eg_cycle_max_edges(long long n, int c) {
  if (c < 2) throw std::invalid_argument("eg_cycle_max_edges: circumference cap must be >= 2");
  if (n < 1) throw std::invalid_argument("eg_cycle_max_edges: order must be >= 1");
  return static_cast<long long>(c) * (n - 1) / 2;
}

double snk_lb(long long n, int k) {
  if (k < 1) throw std::invalid_argument("snk_lb: need k >= 1");
  if (n + 2 * k - 3 <= 0) throw std::invalid_argument("snk_lb: need n + 2k - 3 > 0");
  double b = static_cast<double>(n) + 2.0 * k - 2.0;
  return b - 2.0 * k * (k - 1.0) / (b - 1.0);
}

long long min_edges_required(long long n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("min_edges_required: need 0 <= k <= n");
  return static_cast<long long>(k) * n - static_cast<long long>(k) * k + 1;
}

BoundReport check_bounds(const Graph& g, int k, double tol) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("check_bounds: order must be >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("check_bounds: need 1 <= k <= n");

  BoundReport r;
  r.n = n;
  r.e = g.edge_count();
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.k = k;
  r.q = q_index(g, tol).q;

  auto merris = merris_bound(g);
  r.merris_defined = merris.has_value();
  r.merris_skipped_isolated = (r.min_degree == 0);
  r.merris = merris.value_or(0.0);
  r.das = das_bound(g);
  r.eg_path_limit[2 * k] = eg_path_max_edges(n, 2 * k);
  r.eg_path_limit[2 * k + 2] = eg_path_max_edges(n, 2 * k + 2);
  r.eg_cycle_limit = eg_cycle_max_edges(n, 2 * k);
  r.snk_lower = snk_lb(n, k);
  r.min_edges = min_edges_required(n, k);

  r.relations.q_le_merris = !r.merris_defined || r.q <= r.merris + kBoundSlack;
  r.relations.q_le_das = r.q <= r.das + kBoundSlack;
  double threshold = static_cast<double>(n) + 2.0 * k - 2.0;
  r.relations.min_edges_applicable = r.q >= threshold - kBoundSlack;
  r.relations.min_edges_ok = !r.relations.min_edges_applicable || r.e >= r.min_edges;
  return r;
}

}  // namespace qmax
