#pragma once

#include <limits>
#include <vector>

#include "qk/dynamics.hpp"

namespace qk {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

// Necessary consistency condition for fixed points: ||sum_i Omega_i||_F <= tol.
bool zero_sum_check(const ForcingVector& omega, double tol = 1e-10);

// (C/2) * max_i sum_j |gamma_ij|, valid whenever ||f(Z) - f(Z^{-1})||_* <= C
// on the whole group; every coupling drift then satisfies
// ||F(X)||_{*,linf} <= bound.
double drift_bound(const WeightedGraph& graph, double C);

// sup_{x in R^3} ||x||_p / ||x||_2 = 3^{max(0, 1/p - 1/2)}.
double cp_constant(double p);

// max_i of the entrywise l^p norm of Omega_i (p = inf allowed).
double lp_linf_norm(const ForcingVector& omega, double p);

// SO(3), f(x) = x: sup_Z ||Z - Z^{-1}||_p = 2^{1+1/p} c_p, so a forcing that
// admits a fixed point must lie in every ball of radius
// 2^{1+1/p} c_p ||Gamma||_inf / 2.
struct AdmissibilityReport {
  bool inadmissible = false;  // some margin < 0: no fixed point exists
  std::vector<double> p_grid;
  std::vector<double> margins;  // radius_p - ||Omega||_{lp,linf}
  double binding_p = 2.0;       // p with the smallest margin
  const char* verdict() const { return inadmissible ? "inadmissible" : "possibly-admissible"; }
};

AdmissibilityReport so3_admissibility(const ForcingVector& omega, const WeightedGraph& graph,
                                      const std::vector<double>& p_grid = {1.0, 1.5, 2.0, 4.0,
                                                                           kInfP});

}  // namespace qk
