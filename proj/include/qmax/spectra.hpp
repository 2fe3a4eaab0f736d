#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "qmax/graph.hpp"

namespace qmax {

struct QResult {
  double q = 0.0;                  // largest eigenvalue of D + A
  std::vector<double> vector;      // nonnegative unit eigenvector
  int iterations = 0;
  double residual = 0.0;           // ||Qx - qx||_2 at exit
};

// thrown when power iteration exhausts its budget; carries the best estimate
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, QResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const QResult& best() const { return best_; }

private:
  QResult best_;
};

// dense signless laplacian D + A; n >= 1
Eigen::MatrixXd q_matrix(const Graph& g);

// largest eigenvalue via deterministic power iteration (all-ones start),
// run per component, winner embedded into an n-vector (zeros elsewhere);
// component ties resolve to the lower smallest-member index;
// max_iterations 0 means 200 * order
QResult q_index(const Graph& g, double tol = 1e-10, int max_iterations = 0);

// full-spectrum oracle route (Eigen dense solver); iterations reported as 0;
// the vector is only meaningful when the top eigenvalue is simple
QResult q_index_dense(const Graph& g);

// sum over edges of (x_u + x_v)^2; equals the rayleigh quotient of D + A
// for unit x
double rayleigh_edge_sum(const Graph& g, const std::vector<double>& x);

// largest root of x^2 - (n+2k-2)x + 2k(k-1) for n >= 2, and 0 at n == 1;
// matches q(snk(n,k)) exactly; requires 1 <= k <= n
double snk_q_closed_form(int n, int k);

}  // namespace qmax
