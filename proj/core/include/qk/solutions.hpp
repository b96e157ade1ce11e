#pragma once

#include <vector>

#include "qk/dynamics.hpp"

namespace qk {

// All entries equal to Z; a fixed point of the zero-forcing flow.
Configuration sync_configuration(int n, const GroupElement& Z);

// Y_i = exp(eps * Q_i) with Q = -(1/s) Lap^+(Gamma) Omega applied
// componentwise through the block structure, s the coupling slope at the
// identity. Requires sum Omega_i = 0, a connected graph, and s > 0. The
// residual of the eps-scaled flow is O(eps^2).
Configuration near_sync(const WeightedGraph& graph, const ForcingVector& omega, double eps,
                        const CouplingSeries& f = CouplingSeries::identity());

// Twist generated by T = Tw(2*pi*l_1/n, ...): X_i = T^i. On a circulant
// graph with zero forcing every twist configuration is stationary.
struct TwistSpec {
  int n = 0;
  int d = 0;
  std::vector<int> winding;  // l_q, length floor(d/2)
};
Configuration twist_configuration(const TwistSpec& spec);
GroupElement twist_generator(const TwistSpec& spec);

// Nearest-neighbor chains where each axis either continues with a uniform
// step (the B = A^{-1} branch) or flips across the angle axis at designated
// edges (the B = -A branch at both endpoints of a flipped edge). Per axis:
// the uniform step is s = (2*pi*w - |F|*pi) / (n - 2|F|), flipped edges carry
// pi - s. An all-empty flip set reproduces the twist configuration.
struct TwistFlipAxis {
  int winding = 0;
  std::vector<int> flip_edges;  // edge e joins sites e and e+1 mod n
};
struct TwistFlipSpec {
  int n = 0;
  int d = 0;
  std::vector<TwistFlipAxis> axes;  // length floor(d/2)
};
Configuration twist_flip_configuration(const TwistFlipSpec& spec);

// max over sites of || (A - A^{-1}) + (B - B^{-1}) ||_F with A = X_{i+1} X_i^{-1},
// B = X_{i-1} X_i^{-1} (cyclic); zero exactly at nearest-neighbor fixed points
// of the f(x) = x flow.
double neighbor_balance_residual(const Configuration& X);

// max_i ||Omega_i + F_i(X)||_F.
double fixed_point_residual(const Configuration& X, const ForcingVector& omega,
                            const WeightedGraph& graph, const CouplingSeries& f);

// Distance proxy to the right-translate class of sync: max_i ||X_i - Z*||_F
// with Z* the retracted mean. For twist orbits, pass the generator so the
// state is untwisted first.
double sync_class_distance(const Configuration& X);
double twist_orbit_distance(const Configuration& X, const GroupElement& generator);

}  // namespace qk
