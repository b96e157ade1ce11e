#pragma once

#include <optional>

#include "qk/solutions.hpp"

namespace qk {

// Dense matrix realization of the linearized flow in a chosen so(d) basis:
// x' = J x with x laid out block-major, x[alpha*n + i] the M_alpha coordinate
// at node i. J is a dim(g) x dim(g) grid of n x n zero-row-sum blocks
// subordinate to the coupling graph.
struct JacobianMatrix {
  RMat matrix;
  int n = 0;
  int dim_g = 0;
  SoBasis basis;

  Eigen::Block<const RMat> block(int alpha, int beta) const {
    return matrix.block(alpha * n, beta * n, n, n);
  }
};

// (L_Y Q)_i = sum_j gamma_ij L_{Y,ij}(Q_j - Q_i), the two-sided power-sum
// operator of the flow linearized at the fixed point Y. Throws when Y is not
// stationary (residual above precondition_tol) for the given forcing.
ForcingVector apply_linearization(const Configuration& Y, const ForcingVector& Q,
                                  const WeightedGraph& graph, const CouplingSeries& f,
                                  const std::optional<ForcingVector>& omega = std::nullopt,
                                  double precondition_tol = 1e-8);

JacobianMatrix jacobian_matrix(const Configuration& Y, const WeightedGraph& graph,
                               const CouplingSeries& f, const SoBasis& basis,
                               const std::optional<ForcingVector>& omega = std::nullopt,
                               double precondition_tol = 1e-8);

// Frustrated variant; A = B = I reduces to jacobian_matrix. Generally
// non-symmetric with complex spectrum.
JacobianMatrix frustrated_linearization(const Configuration& Y, const WeightedGraph& graph,
                                        const CouplingSeries& f, const FrustrationPair& frustration,
                                        const SoBasis& basis,
                                        const std::optional<ForcingVector>& omega = std::nullopt,
                                        double precondition_tol = 1e-8);

// Independent verification oracle: central differences of the coordinate
// vector field x -> coords(Y_i^{-1} rhs_i(Y exp(sum x M)) Y_i) around x = 0.
// Agrees with the analytic Jacobian to O(eps^2).
JacobianMatrix fd_jacobian_oracle(const Configuration& Y, const Flow& flow, double eps = 1e-5);

Eigen::VectorXcd jacobian_eigenvalues(const JacobianMatrix& J);

enum class Stability { Stable, Marginal, Unstable };
const char* stability_name(Stability s);

struct StabilityVerdict {
  Stability tag = Stability::Stable;
  int n_positive = 0;
  int n_zero = 0;
  int n_negative = 0;
  double zero_tol_used = 0.0;
};

// Classify by eigenvalue real parts: any above the tolerance is unstable;
// exactly dim_g near-zero ones (the right-invariance nullspace) is stable;
// extra zeros are marginal. zero_tol is scaled by the matrix 1-norm when
// scale_by_norm is set.
StabilityVerdict classify_stability(const JacobianMatrix& J, int dim_g, double zero_tol = 1e-7,
                                    bool scale_by_norm = true);

}  // namespace qk
