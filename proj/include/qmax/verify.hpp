#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qmax/graph.hpp"

namespace qmax {

// canonical graph6 string: minimum over a class-respecting relabeling search
// seeded by iterated degree refinement; exact, n <= 12
std::string canonical_graph6(const Graph& g);

// structural test: exactly k vertices of degree n-1 and n-k of degree k
// (complete and edgeless cases handled directly); exact at any order
bool is_isomorphic_to_snk(const Graph& g, int k);

struct VerificationReport {
  int n = 0;
  int k = 0;
  std::uint64_t total_graphs = 0;  // graphs examined
  std::uint64_t free_graphs = 0;   // graphs passing the cycle constraint
  double max_q = 0.0;
  std::string maximizer;           // graph6 of a maximum-q free graph
  bool maximizer_is_snk = false;
  std::vector<std::string> ties;   // all maximizers within 1e-8, deduplicated
                                   // up to isomorphism, sorted
  std::string mode;                // "exhaustive-labeled" | "stream" | "search"
  std::optional<std::uint64_t> seed;
};

struct VerifyOutcome {
  VerificationReport report;
  std::vector<std::string> violations;  // empty when every check passed
};

// scans every labeled graph on n vertices (n <= 7) for the largest q-index
// among graphs with no cycle on 2k+1 vertices; jobs picks worker threads
// (0 = hardware); results are byte-identical for any worker count
VerifyOutcome verify_exhaustive(int n, int k, int jobs = 0);

// same reduction over an explicit graph6 stream; all records must share
// one order
VerifyOutcome verify_stream(std::istream& in, int k);

enum class Move { add, remove, swap };

struct SearchConfig {
  int n = 0;
  int k = 0;
  std::uint64_t iterations = 0;  // proposals per start
  int restarts = 0;              // random starts after the constructed one
  std::uint64_t seed = 0;
  std::vector<Move> moves = {Move::add, Move::remove, Move::swap};
};

struct SearchOutcome {
  VerificationReport report;
  std::vector<double> best_q_trace;  // non-decreasing, one entry per proposal
  bool finding = false;              // best exceeded the predicted maximum
  std::string finding_graph6;
};

// seeded stochastic hill climb over constraint-respecting edge edits;
// start 0 is the constructed extremal graph, further starts are random
// maximal constraint-free graphs; identical config => identical outcome
SearchOutcome local_search(const SearchConfig& cfg);

struct HarnessRecord {
  int k = 0;
  long long n = 0;
  std::vector<int> parts;  // block orders (one entry per attached block)
  double lhs = 0.0;        // q of the composed graph
  double rhs = 0.0;        // q of the comparison extremal graph
  double margin = 0.0;     // rhs - lhs
  bool holds = false;      // lhs < rhs with slack
};

// q(K_1 join (snk(n-1-t, k-1) union K_t)) vs q(snk(n, k));
// requires k >= 3, n >= 110k^2, 1 <= t <= k^2+k-3
HarnessRecord lemma8_harness(int k, long long n, int t);

// q(K_1 join union of snk(n_i, k-1)) vs q(snk(1 + sum n_i, k));
// requires k >= 3 and at least two parts, each of order >= k
HarnessRecord lemma9_harness(int k, const std::vector<int>& parts);

struct CycleSpanRecord {
  int n = 0;
  int k = 0;
  double q = 0.0;
  double threshold = 0.0;        // n + 2k - 2
  bool applicable = false;       // q >= threshold within slack
  bool asserted = false;         // applicable and n > 6k^2
  std::vector<int> spectrum;     // cycle lengths present up to min(n, 2k+2)
  std::vector<int> missing;      // lengths in 3..min(n, 2k+2) absent
  bool ok = true;                // no asserted length missing
};

// checks that a high-q graph carries cycles of every length 3..2k+2
CycleSpanRecord theorem1_harness(const Graph& g, int k);

}  // namespace qmax
