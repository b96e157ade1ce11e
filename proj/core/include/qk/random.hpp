#pragma once

#include <cstdint>
#include <random>

#include "qk/dynamics.hpp"

namespace qk {

// All sampling goes through one explicitly seeded generator so runs are
// reproducible; callers own and pass the generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}
  std::uint64_t seed() const { return seed_; }
  double normal(double sigma = 1.0) { return sigma * normal_(eng_); }
  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * unit_(eng_);
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

AlgebraElement random_so_algebra(int d, double scale, Rng& rng);
GroupElement random_so_group(int d, double scale, Rng& rng);
Configuration random_so_configuration(int n, int d, double scale, Rng& rng);

// n-tuple of algebra elements summing to zero exactly (the last entry
// balances the rest).
ForcingVector random_zero_sum_forcing(int n, int d, GroupTag tag, double scale, Rng& rng);

// Spanning tree plus Bernoulli extra edges, uniform weights in (0.2, 1).
WeightedGraph random_connected_graph(int n, Rng& rng, double extra_edge_prob = 0.3);

std::vector<double> random_bands(int K, Rng& rng, double lo = 0.1, double hi = 1.0);

}  // namespace qk
