#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmax/graph.hpp"

namespace qmax {

// raised when classification finds no structure class for a graph that
// passed the hypothesis checks
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct PeelTrace {
  // (original vertex id, degree at removal time), in removal order
  std::vector<std::pair<int, int>> removed;
  VertexSet survivor;  // induced subgraph of survivors has min degree >= threshold
};

// repeatedly removes a minimum-degree vertex while that degree < threshold;
// ties break to the lowest id
PeelTrace peel(const Graph& g, int threshold);

// smallest vertex cover of size <= k if one exists; deterministic bounded
// branching on the first uncovered edge; among minimum covers returns the
// lexicographically least the branching produces
std::optional<VertexSet> vertex_cover_le(const Graph& g, int k);

struct HasLongPath {
  std::vector<int> witness;  // path on 2k+2 vertices
};
struct SubgraphOfSnk {
  VertexSet cover;  // <= k vertices covering every edge
};
struct IsLtk {
  int t;  // hub plus t disjoint k-cliques
};

using StructureClass = std::variant<HasLongPath, IsLtk, SubgraphOfSnk>;

// trichotomy for connected graphs with min degree >= k and n >= 2k+1:
// a path on 2k+2 vertices, or the hub-of-cliques shape, or a k-cover.
// hypothesis violations raise std::invalid_argument naming the failed
// hypothesis; a graph matching no class raises StructureError
StructureClass classify(const Graph& g, int k);

struct DominationDiagnostic {
  VertexSet a;        // neighborhood of w
  VertexSet b;        // everything else except w
  VertexSet a_prime;  // members of a adjacent to all of b
  long long edges_a = 0;       // edges inside a
  long long edges_ab = 0;      // edges between a and b
  bool some_b_dominates_a = false;  // some b-vertex adjacent to all of a
  bool b_small = false;             // |b| < 2k^2
  bool a_prime_large = false;       // |a'| > |a| - 2k^2
};

DominationDiagnostic domination_diagnostic(const Graph& g, int w, int k);

}  // namespace qmax
