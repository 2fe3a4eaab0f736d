#include "qmax/families.hpp"

#include <stdexcept>

namespace qmax {

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) b.add_edge(u, v);
  return b.build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: order must be >= 1");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: order must be >= 3");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
  b.add_edge(n - 1, 0);
  return b.build();
}

Graph snk(int n, int k) {
  if (k < 0 || k > n)
    throw std::invalid_argument("snk: need 0 <= k <= n");
  GraphBuilder b(n);
  // clique on the centers, each center joined to everything above it
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph snk_plus(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("snk_plus: need 0 <= k <= n");
  if (n < k + 2)
    throw std::invalid_argument("snk_plus: need n >= k+2 for the extra edge");
  return snk(n, k).with_edge(k, k + 1);
}

Graph ltk(int t, int k) {
  if (t < 1 || k < 1) throw std::invalid_argument("ltk: need t >= 1 and k >= 1");
  long long n = static_cast<long long>(t) * k + 1;
  if (n > kMaxOrder) throw std::invalid_argument("ltk: order exceeds the cap");
  GraphBuilder b(static_cast<int>(n));
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  for (int block = 0; block < t; ++block) {
    int base = 1 + block * k;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) b.add_edge(base + u, base + v);
  }
  return b.build();
}

Graph construct(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::empty: return empty_graph(spec.n);
    case Family::path: return path_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::snk: return snk(spec.n, spec.k);
    case Family::snk_plus: return snk_plus(spec.n, spec.k);
    case Family::ltk: return ltk(spec.t, spec.k);
  }
  throw std::invalid_argument("construct: unknown family");
}

VertexSet center_vertices(const FamilySpec& spec) {
  if (spec.family != Family::snk)
    throw std::invalid_argument("center_vertices: only defined for the snk family");
  if (spec.k < 0 || spec.k > spec.n)
    throw std::invalid_argument("center_vertices: need 0 <= k <= n");
  VertexSet out;
  out.reserve(spec.k);
  for (int v = 0; v < spec.k; ++v) out.push_back(v);
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::empty: return "empty";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::snk: return "snk";
    case Family::snk_plus: return "snk_plus";
    case Family::ltk: return "ltk";
  }
  return "unknown";
}

}  // namespace qmax
