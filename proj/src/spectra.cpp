#include "qmax/spectra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace qmax {

namespace {

// y = (D + A) x
void apply_q(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    double acc = g.degree(u) * x[u];
    g.for_each_neighbor(u, [&](int v) { acc += x[v]; });
    y[u] = acc;
  }
}

// power iteration on a connected graph; the all-ones start has full overlap
// with the positive top eigenvector, so convergence is monotone in practice
QResult power_connected(const Graph& g, double tol, int cap) {
  int n = g.order();
  QResult res;
  if (n == 1) {
    res.q = 0.0;
    res.vector = {1.0};
    res.iterations = 0;
    res.residual = 0.0;
    return res;
  }
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (int it = 1; it <= cap; ++it) {
    apply_q(g, x, y);
    double q = 0.0;
    for (int i = 0; i < n; ++i) q += x[i] * y[i];
    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
      double d = y[i] - q * x[i];
      rr += d * d;
    }
    double r = std::sqrt(rr);
    res.q = q;
    res.iterations = it;
    res.residual = r;
    if (r <= tol) {
      res.vector = x;
      return res;
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += y[i] * y[i];
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  res.vector = x;
  throw SolverError("power iteration did not reach residual " + std::to_string(tol) + " in " +
                        std::to_string(cap) + " iterations",
                    res);
}

}  // namespace

Eigen::MatrixXd q_matrix(const Graph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("q_matrix: graph has no vertices");
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) q(u, u) = g.degree(u);
  g.for_each_edge([&](int u, int v) {
    q(u, v) = 1.0;
    q(v, u) = 1.0;
  });
  return q;
}

QResult q_index(const Graph& g, double tol, int max_iterations) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("q_index: graph has no vertices");
  int cap = max_iterations > 0 ? max_iterations : 200 * n;
  auto comps = components(g);
  if (comps.size() == 1) return power_connected(g, tol, cap);
  // per-component maxima; ties keep the lower component index
  QResult best;
  const VertexSet* where = nullptr;
  for (const auto& comp : comps) {
    Graph sub = induced_subgraph(g, comp);
    QResult r = power_connected(sub, tol, cap);
    if (where == nullptr || r.q > best.q) {
      best = std::move(r);
      where = &comp;
    }
  }
  std::vector<double> full(n, 0.0);
  for (std::size_t i = 0; i < where->size(); ++i) full[(*where)[i]] = best.vector[i];
  best.vector = std::move(full);
  return best;
}

QResult q_index_dense(const Graph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("q_index_dense: graph has no vertices");
  Eigen::MatrixXd q = q_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
  double lam = es.eigenvalues()(n - 1);
  Eigen::VectorXd v = es.eigenvectors().col(n - 1);
  if (v.sum() < 0) v = -v;
  double residual = (q * v - lam * v).norm();
  QResult res;
  res.q = lam;
  res.vector.assign(v.data(), v.data() + n);
  res.iterations = 0;
  res.residual = residual;
  return res;
}

double rayleigh_edge_sum(const Graph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.order())
    throw std::invalid_argument("rayleigh_edge_sum: vector length must equal the order");
  double acc = 0.0;
  g.for_each_edge([&](int u, int v) {
    double s = x[u] + x[v];
    acc += s * s;
  });
  return acc;
}

double snk_q_closed_form(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("snk_q_closed_form: need 1 <= k <= n");
  if (n == 1) return 0.0;  // single vertex; the quadratic's root overshoots here
  double b = static_cast<double>(n) + 2.0 * k - 2.0;
  double disc = b * b - 8.0 * k * (k - 1.0);
  return (b + std::sqrt(disc)) / 2.0;
}

}  // namespace qmax
