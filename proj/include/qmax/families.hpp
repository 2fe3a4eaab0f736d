#pragma once

#include <string>

#include "qmax/graph.hpp"

namespace qmax {

enum class Family { complete, empty, path, cycle, snk, snk_plus, ltk };

struct FamilySpec {
  Family family;
  int n = 0;  // order for all families except ltk, where order is t*k+1
  int k = 0;  // snk/snk_plus/ltk parameter
  int t = 0;  // ltk block count
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);   // n >= 1
Graph cycle_graph(int n);  // n >= 3

// k dominating centers 0..k-1 forming a clique, joined to an independent set
Graph snk(int n, int k);  // 0 <= k <= n

// snk plus one edge between the first two non-center vertices
Graph snk_plus(int n, int k);  // needs n >= k+2

// one hub (vertex 0) joined to t disjoint k-cliques
Graph ltk(int t, int k);  // t >= 1, k >= 1

Graph construct(const FamilySpec& spec);

// the dominating clique 0..k-1; only defined for the snk family
VertexSet center_vertices(const FamilySpec& spec);

std::string family_name(Family f);

}  // namespace qmax
