#include "qk/graph.hpp"

#include <cmath>

namespace qk {

WeightedGraph::WeightedGraph(int n, RMat weights) : n_(n), w_(std::move(weights)) {
  if (n_ < 1) throw DomainError("WeightedGraph: n must be positive");
  if (w_.rows() != n_ || w_.cols() != n_)
    throw DimensionError("WeightedGraph: weight matrix shape mismatch");
  if (!w_.allFinite()) throw NumericError("WeightedGraph: non-finite weights");
  for (int i = 0; i < n_; ++i) {
    if (w_(i, i) != 0.0) throw ConsistencyError("WeightedGraph: nonzero diagonal");
    for (int j = 0; j < n_; ++j) {
      if (w_(i, j) < 0.0) throw ConsistencyError("WeightedGraph: negative weight");
      if (w_(i, j) != w_(j, i)) throw ConsistencyError("WeightedGraph: weights not symmetric");
    }
  }
}

WeightedGraph WeightedGraph::empty(int n) { return WeightedGraph(n, RMat::Zero(n, n)); }

WeightedGraph WeightedGraph::complete(int n, double w) {
  RMat m = RMat::Constant(n, n, w);
  m.diagonal().setZero();
  return WeightedGraph(n, std::move(m));
}

double WeightedGraph::max_row_sum() const {
  return w_.cwiseAbs().rowwise().sum().maxCoeff();
}

bool WeightedGraph::connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < n_; ++j) {
      if (!seen[j] && w_(v, j) > 0.0) {
        seen[j] = 1;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n_;
}

WeightedGraph circulant(const CirculantSpec& spec) {
  const int n = spec.n;
  const int K = static_cast<int>(spec.bands.size());
  if (n < 2) throw DomainError("circulant: n must be >= 2");
  if (K > n / 2) throw DomainError("circulant: bandwidth exceeds floor(n/2)");
  RMat w = RMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int diff = std::abs(i - j);
      const int k = std::min(diff, n - diff);
      if (k >= 1 && k <= K) w(i, j) = spec.bands[k - 1];
    }
  }
  return WeightedGraph(n, std::move(w));
}

std::vector<double> alpha_graph_bands(double alpha, int n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha_graph: alpha must lie in (0,1)");
  const int cutoff = static_cast<int>(std::floor(alpha * n));
  if (cutoff < 2) throw DomainError("alpha_graph: floor(alpha*n) must be >= 2");
  return std::vector<double>(static_cast<std::size_t>(cutoff - 1), 1.0);
}

WeightedGraph alpha_graph(double alpha, int n) {
  return circulant({n, alpha_graph_bands(alpha, n)});
}

RMat laplacian(const WeightedGraph& graph) {
  RMat L = graph.weights();
  for (int i = 0; i < graph.size(); ++i) {
    L(i, i) = -L.row(i).sum();
  }
  return L;
}

RMat laplacian_pseudoinverse(const WeightedGraph& graph) {
  if (!graph.connected())
    throw RankError("laplacian_pseudoinverse: graph is disconnected");
  const RMat L = laplacian(graph);
  Eigen::SelfAdjointEigenSolver<RMat> es(L);
  const RVec& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  const double cut = 1e-10 * std::max(scale, 1.0);
  RVec inv = RVec::Zero(ev.size());
  for (int k = 0; k < ev.size(); ++k)
    if (std::abs(ev[k]) > cut) inv[k] = 1.0 / ev[k];
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace qk
