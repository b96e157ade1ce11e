#pragma once

#include <vector>

#include "qk/algebra.hpp"

namespace qk {

// Symmetric nonnegative edge weights gamma_ij on n vertices, zero diagonal.
class WeightedGraph {
 public:
  WeightedGraph(int n, RMat weights);
  static WeightedGraph empty(int n);
  static WeightedGraph complete(int n, double w = 1.0);

  int size() const { return n_; }
  const RMat& weights() const { return w_; }
  double weight(int i, int j) const { return w_(i, j); }
  double max_row_sum() const;  // ||Gamma||_inf
  bool connected() const;

 private:
  int n_;
  RMat w_;
};

// Band weights (gamma_1, ..., gamma_K), K <= floor(n/2); expands to
// gamma_ij = gamma_k with k = min(|i-j|, n-|i-j|).
struct CirculantSpec {
  int n = 0;
  std::vector<double> bands;
};

WeightedGraph circulant(const CirculantSpec& spec);

// gamma_k = 1 for k < floor(alpha*n), else 0.
WeightedGraph alpha_graph(double alpha, int n);
std::vector<double> alpha_graph_bands(double alpha, int n);

// Off-diagonal (i,j) = gamma_ij, diagonal = -sum_{k != i} gamma_ik. Negative
// semidefinite with nonpositive spectrum (diagonal carries the minus sign).
RMat laplacian(const WeightedGraph& graph);

// Moore-Penrose pseudoinverse of the Laplacian; requires a connected graph.
RMat laplacian_pseudoinverse(const WeightedGraph& graph);

}  // namespace qk
