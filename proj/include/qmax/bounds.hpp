#pragma once

#include <map>
#include <optional>

#include "qmax/graph.hpp"

namespace qmax {

// slack for >=/<= comparisons between computed eigenvalues and bounds
inline constexpr double kBoundSlack = 1e-8;

// max over non-isolated u of d(u) + avg degree of its neighborhood;
// isolated vertices are skipped; empty when every vertex is isolated
std::optional<double> merris_bound(const Graph& g);

// 2m/(n-1) + n - 2; requires n >= 2
double das_bound(const Graph& g);

// edge maximum for graphs with no path on p vertices: floor((p-2)n/2)
long long eg_path_max_edges(long long n, int p);

// edge maximum for circumference <= c: floor(c(n-1)/2); requires c >= 2
long long eg_cycle_max_edges(long long n, int c);

// n + 2k - 2 - 2k(k-1)/(n+2k-3); lower bound for q(snk(n,k))
double snk_lb(long long n, int k);

// minimum edge count forced by q >= n + 2k - 2: kn - k^2 + 1
long long min_edges_required(long long n, int k);

struct BoundRelations {
  bool q_le_merris = true;       // vacuous when merris is undefined
  bool q_le_das = true;
  bool min_edges_applicable = false;  // q >= n + 2k - 2 (within slack)
  bool min_edges_ok = true;           // e >= kn - k^2 + 1 when applicable
};

struct BoundReport {
  int n = 0;
  long long e = 0;
  int min_degree = -1;
  int max_degree = -1;
  int k = 0;
  double q = 0.0;
  bool merris_defined = false;
  bool merris_skipped_isolated = false;
  double merris = 0.0;
  double das = 0.0;
  std::map<int, long long> eg_path_limit;  // keyed by forbidden path order
  long long eg_cycle_limit = 0;            // circumference cap 2k
  double snk_lower = 0.0;
  long long min_edges = 0;
  BoundRelations relations;
};

// evaluates every bound on one graph; requires n >= 2 and 1 <= k <= n
BoundReport check_bounds(const Graph& g, int k, double tol = 1e-10);

}  // namespace qmax
