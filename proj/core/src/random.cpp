#include "qk/random.hpp"

namespace qk {

AlgebraElement random_so_algebra(int d, double scale, Rng& rng) {
  RMat Q = RMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double v = rng.normal(scale);
      Q(i, j) = v;
      Q(j, i) = -v;
    }
  return AlgebraElement::so(Q);
}

GroupElement random_so_group(int d, double scale, Rng& rng) {
  return exp_map(random_so_algebra(d, scale, rng));
}

Configuration random_so_configuration(int n, int d, double scale, Rng& rng) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) elems.push_back(random_so_group(d, scale, rng));
  return Configuration(std::move(elems));
}

ForcingVector random_zero_sum_forcing(int n, int d, GroupTag tag, double scale, Rng& rng) {
  if (n < 2) throw DomainError("random_zero_sum_forcing: n must be >= 2");
  std::vector<AlgebraElement> elems;
  elems.reserve(static_cast<std::size_t>(n));
  Mat total = Mat::Zero(d, d);
  for (int i = 0; i + 1 < n; ++i) {
    AlgebraElement q = tag == GroupTag::U1 ? AlgebraElement::u1(rng.normal(scale))
                                           : random_so_algebra(d, scale, rng);
    total += q.entries();
    elems.push_back(std::move(q));
  }
  elems.emplace_back(Mat(-total), tag);
  return ForcingVector(std::move(elems));
}

WeightedGraph random_connected_graph(int n, Rng& rng, double extra_edge_prob) {
  RMat w = RMat::Zero(n, n);
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.uniform(0.0, static_cast<double>(v)));
    const double g = rng.uniform(0.2, 1.0);
    w(u, v) = w(v, u) = g;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w(i, j) == 0.0 && rng.uniform() < extra_edge_prob) {
        const double g = rng.uniform(0.2, 1.0);
        w(i, j) = w(j, i) = g;
      }
    }
  return WeightedGraph(n, std::move(w));
}

std::vector<double> random_bands(int K, Rng& rng, double lo, double hi) {
  std::vector<double> bands(static_cast<std::size_t>(K));
  for (auto& b : bands) b = rng.uniform(lo, hi);
  return bands;
}

}  // namespace qk
