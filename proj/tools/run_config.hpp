#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qk/io.hpp"

namespace qk::cli {

// One JSON file plus flag overrides (flags win). Sections: group, graph,
// coupling, forcing, frustration, initial, perturbation, integrate, scan,
// seed.
struct RunConfig {
  std::uint64_t seed = 0;
  GroupTag tag = GroupTag::SOd;
  int d = 3;

  std::optional<WeightedGraph> graph;
  std::optional<std::vector<double>> circulant_bands;  // set when given as circulant
  CouplingSeries f = CouplingSeries::identity();
  json forcing_spec;  // resolved against (n, d, tag, seed)
  std::optional<FrustrationPair> frustration;
  json initial_spec;
  double perturbation = 0.0;

  double t_end = 10.0;
  IntegrateOptions integrate_opts;

  json raw;

  ForcingVector forcing(int n) const;
  Configuration initial() const;  // applies the perturbation
  std::optional<TwistSpec> initial_twist() const;
};

RunConfig load_run_config(const std::string& path, std::optional<std::uint64_t> seed_override);

}  // namespace qk::cli
