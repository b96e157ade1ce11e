#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qk/bounds.hpp"
#include "qk/dynamics.hpp"
#include "qk/linearization.hpp"
#include "qk/spectra.hpp"

namespace qk {

using json = nlohmann::json;

// 17 significant digits; round-trip exact.
std::string format_double(double v);

// {"n": int, "circulant": [g_1, ..., g_K]} or {"n": int, "edges": [[i,j,w], ...]}
WeightedGraph graph_from_json(const json& j);
json graph_to_json(const WeightedGraph& graph);

// {"n":..., "d":..., "group":"so", "matrices":[[[...]]]}, the twist shorthand
// {"twist": {"n":..., "d":..., "l":[...]}}, or {"group":"u1", "angles":[...]}.
Configuration configuration_from_json(const json& j);
json configuration_to_json(const Configuration& X);

// "zero", {"random_zero_sum": scale}, {"matrices": [...]}, or {"u1": [omega...]}.
ForcingVector forcing_from_json(const json& j, int n, int d, GroupTag tag, std::uint64_t seed);

// header `t, i, row, col, value`, one block per stored step
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, std::uint64_t seed);

// header `family,l1,l2,m,re,im,multiplicity,source`
void write_spectrum_csv(std::ostream& os, std::uint64_t seed,
                        const std::optional<TwistSpectrum>& closed,
                        const Eigen::VectorXcd* numeric,
                        const Eigen::VectorXcd* fd_oracle);

json bounds_report_to_json(const AdmissibilityReport& rep);

}  // namespace qk
