#include "qk/linearization.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>

namespace qk {

namespace {

std::vector<RMat> real_powers(const RMat& Z, int pmax) {
  std::vector<RMat> pw;
  pw.reserve(static_cast<std::size_t>(pmax) + 1);
  pw.push_back(RMat::Identity(Z.rows(), Z.cols()));
  for (int p = 1; p <= pmax; ++p) pw.push_back(pw.back() * Z);
  return pw;
}

// L_{Y,ij} W = 1/2 sum_p a_p sum_{q=0}^{p-1} (Z^{q+1} W Z^{p-q-1} + Zi^q W Zi^{p-q}),
// Z = Y_i^{-1} Y_j.
RMat plain_transfer_apply(const std::vector<RMat>& Zp, const std::vector<RMat>& Zip,
                          const std::vector<double>& a, const RMat& W) {
  RMat out = RMat::Zero(W.rows(), W.cols());
  for (std::size_t p1 = 1; p1 <= a.size(); ++p1) {
    if (a[p1 - 1] == 0.0) continue;
    const int p = static_cast<int>(p1);
    RMat term = RMat::Zero(W.rows(), W.cols());
    for (int q = 0; q < p; ++q)
      term += Zp[static_cast<std::size_t>(q + 1)] * W * Zp[static_cast<std::size_t>(p - q - 1)] +
              Zip[static_cast<std::size_t>(q)] * W * Zip[static_cast<std::size_t>(p - q)];
    out += 0.5 * a[p1 - 1] * term;
  }
  return out;
}

// Frustrated transfer with P = Y_i^{-1} A^{-1} B Y_j, R = Y_i^{-1} B Y_j,
// S = Y_i^{-1} A^{-1} Y_i and the mirrored factors Pt = P^{-1}, Rt = S^{-1},
// St = R^{-1}:
//   L_{Y,ij} W = 1/2 sum_p a_p sum_q (R P^q W P^{p-q-1} S + Rt Pt^q W Pt^{p-q-1} St).
// Pairing q with p-q-1 is the infinitesimal closure form U W V + V^{-1} W U^{-1}.
struct FrustratedEdgeOps {
  RMat R, S, Rt, St;
  std::vector<RMat> Pp, Ptp;
};

FrustratedEdgeOps frustrated_edge_ops(const RMat& Yi, const RMat& Yj, const RMat& A,
                                      const RMat& B, int pmax) {
  FrustratedEdgeOps ops;
  const RMat Yit = Yi.transpose();
  const RMat Yjt = Yj.transpose();
  const RMat P = Yit * A.transpose() * B * Yj;
  ops.R = Yit * B * Yj;
  ops.S = Yit * A.transpose() * Yi;
  ops.Rt = ops.S.transpose();
  ops.St = ops.R.transpose();
  ops.Pp = real_powers(P, pmax);
  ops.Ptp = real_powers(P.transpose(), pmax);
  return ops;
}

RMat frustrated_transfer_apply(const FrustratedEdgeOps& ops, const std::vector<double>& a,
                               const RMat& W) {
  RMat out = RMat::Zero(W.rows(), W.cols());
  for (std::size_t p1 = 1; p1 <= a.size(); ++p1) {
    if (a[p1 - 1] == 0.0) continue;
    const int p = static_cast<int>(p1);
    RMat term = RMat::Zero(W.rows(), W.cols());
    for (int q = 0; q < p; ++q)
      term += ops.R * ops.Pp[static_cast<std::size_t>(q)] * W *
                  ops.Pp[static_cast<std::size_t>(p - q - 1)] * ops.S +
              ops.Rt * ops.Ptp[static_cast<std::size_t>(q)] * W *
                  ops.Ptp[static_cast<std::size_t>(p - q - 1)] * ops.St;
    out += 0.5 * a[p1 - 1] * term;
  }
  return out;
}

void require_so(const Configuration& Y, const char* where) {
  if (Y.tag() != GroupTag::SOd)
    throw UnsupportedError(std::string(where) + ": spectra machinery requires the SO(d) tag");
}

void require_fixed_point(const Configuration& Y, const WeightedGraph& graph,
                         const CouplingSeries& f, const std::optional<ForcingVector>& omega,
                         const std::optional<FrustrationPair>& fr, double tol,
                         const char* where) {
  const ForcingVector om =
      omega ? *omega : ForcingVector::zero(Y.size(), Y.dim(), Y.tag());
  const double r = fr ? frustrated_rhs(Y, om, graph, f, *fr).max_norm()
                      : qk_rhs(Y, om, graph, f).max_norm();
  if (r > tol)
    throw ConsistencyError(std::string(where) +
                           ": linearization point is not stationary (residual " +
                           std::to_string(r) + ")");
}

JacobianMatrix assemble(const Configuration& Y, const WeightedGraph& graph,
                        const SoBasis& basis,
                        const std::function<RMat(int, int, const RMat&)>& edge_apply) {
  const int n = Y.size();
  const int D = basis.dim();
  JacobianMatrix J;
  J.n = n;
  J.dim_g = D;
  J.basis = basis;
  J.matrix = RMat::Zero(n * D, n * D);
  // transfer coefficients per ordered edge: column beta of C_ij expands
  // L_{Y,ij} M_beta in the basis
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || graph.weight(i, j) == 0.0) continue;
      for (int b = 0; b < D; ++b) {
        const RVec col = algebra_coords(edge_apply(i, j, basis.elems[static_cast<std::size_t>(b)]),
                                        basis);
        for (int a = 0; a < D; ++a) {
          const double c = graph.weight(i, j) * col[a];
          J.matrix(a * n + i, b * n + j) += c;
          J.matrix(a * n + i, b * n + i) -= c;  // diagonal completes zero row sums
        }
      }
    }
  }
  return J;
}

}  // namespace

ForcingVector apply_linearization(const Configuration& Y, const ForcingVector& Q,
                                  const WeightedGraph& graph, const CouplingSeries& f,
                                  const std::optional<ForcingVector>& omega,
                                  double precondition_tol) {
  require_so(Y, "apply_linearization");
  if (Q.size() != Y.size() || Q.dim() != Y.dim())
    throw DimensionError("apply_linearization: perturbation shape mismatch");
  require_fixed_point(Y, graph, f, omega, std::nullopt, precondition_tol,
                      "apply_linearization");
  const int n = Y.size();
  const auto& a = f.coefficients();
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RMat acc = RMat::Zero(Y.dim(), Y.dim());
    const RMat Yi = Y[i].real_entries();
    for (int j = 0; j < n; ++j) {
      if (i == j || graph.weight(i, j) == 0.0) continue;
      const RMat Z = Yi.transpose() * Y[j].real_entries();
      const auto Zp = real_powers(Z, f.order());
      const auto Zip = real_powers(Z.transpose(), f.order());
      const RMat W = Q[j].real_entries() - Q[i].real_entries();
      acc += graph.weight(i, j) * plain_transfer_apply(Zp, Zip, a, W);
    }
    out.push_back(AlgebraElement::so(acc));
  }
  return ForcingVector(std::move(out));
}

JacobianMatrix jacobian_matrix(const Configuration& Y, const WeightedGraph& graph,
                               const CouplingSeries& f, const SoBasis& basis,
                               const std::optional<ForcingVector>& omega,
                               double precondition_tol) {
  require_so(Y, "jacobian_matrix");
  if (basis.d != Y.dim()) throw DimensionError("jacobian_matrix: basis dimension mismatch");
  require_fixed_point(Y, graph, f, omega, std::nullopt, precondition_tol, "jacobian_matrix");
  const auto& a = f.coefficients();
  const int P = f.order();
  return assemble(Y, graph, basis, [&](int i, int j, const RMat& W) {
    const RMat Z = Y[i].real_entries().transpose() * Y[j].real_entries();
    const auto Zp = real_powers(Z, P);
    const auto Zip = real_powers(Z.transpose(), P);
    return plain_transfer_apply(Zp, Zip, a, W);
  });
}

JacobianMatrix frustrated_linearization(const Configuration& Y, const WeightedGraph& graph,
                                        const CouplingSeries& f,
                                        const FrustrationPair& frustration, const SoBasis& basis,
                                        const std::optional<ForcingVector>& omega,
                                        double precondition_tol) {
  require_so(Y, "frustrated_linearization");
  if (frustration.A.tag() != GroupTag::SOd)
    throw UnsupportedError("frustrated_linearization: frustration pair must be SO(d)");
  if (basis.d != Y.dim())
    throw DimensionError("frustrated_linearization: basis dimension mismatch");
  require_fixed_point(Y, graph, f, omega, frustration, precondition_tol,
                      "frustrated_linearization");
  const auto& a = f.coefficients();
  const int P = f.order();
  const RMat A = frustration.A.real_entries();
  const RMat B = frustration.B.real_entries();
  return assemble(Y, graph, basis, [&](int i, int j, const RMat& W) {
    const auto ops =
        frustrated_edge_ops(Y[i].real_entries(), Y[j].real_entries(), A, B, P);
    return frustrated_transfer_apply(ops, a, W);
  });
}

JacobianMatrix fd_jacobian_oracle(const Configuration& Y, const Flow& flow, double eps) {
  require_so(Y, "fd_jacobian_oracle");
  if (eps < 1e-7 || eps > 1e-3)
    throw DomainError("fd_jacobian_oracle: eps must lie in [1e-7, 1e-3]");
  const int n = Y.size();
  const int d = Y.dim();
  const SoBasis basis = so_basis(d);
  const int D = basis.dim();
  const int N = n * D;

  const std::vector<Mat> base = Y.matrices();
  std::vector<RMat> Yr(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) Yr[static_cast<std::size_t>(i)] = Y[i].real_entries();

  // single-coordinate perturbations only need exp(+-eps M_alpha), cached per alpha
  std::vector<Mat> Eplus, Eminus;
  for (int a = 0; a < D; ++a) {
    const RMat M = basis.elems[static_cast<std::size_t>(a)];
    const RMat Ep = RMat(eps * M).exp();
    const RMat Em = RMat(-eps * M).exp();
    Eplus.push_back(Ep.cast<std::complex<double>>());
    Eminus.push_back(Em.cast<std::complex<double>>());
  }

  auto field = [&](int node, const Mat& E) {
    std::vector<Mat> X = base;
    X[static_cast<std::size_t>(node)] = X[static_cast<std::size_t>(node)] * E;
    const auto V = flow.rhs_raw(X, GroupTag::SOd);
    RVec out(N);
    for (int i = 0; i < n; ++i) {
      const RMat body = Yr[static_cast<std::size_t>(i)].transpose() *
                        V[static_cast<std::size_t>(i)].real() * Yr[static_cast<std::size_t>(i)];
      const RVec c = algebra_coords(body, basis);
      for (int a = 0; a < D; ++a) out[a * n + i] = c[a];
    }
    return out;
  };

  JacobianMatrix J;
  J.n = n;
  J.dim_g = D;
  J.basis = basis;
  J.matrix = RMat::Zero(N, N);
  for (int a = 0; a < D; ++a) {
    for (int i = 0; i < n; ++i) {
      const RVec hi = field(i, Eplus[static_cast<std::size_t>(a)]);
      const RVec lo = field(i, Eminus[static_cast<std::size_t>(a)]);
      J.matrix.col(a * n + i) = (hi - lo) / (2.0 * eps);
    }
  }
  return J;
}

Eigen::VectorXcd jacobian_eigenvalues(const JacobianMatrix& J) {
  Eigen::EigenSolver<RMat> es(J.matrix, /*computeEigenvectors=*/false);
  return es.eigenvalues();
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Marginal: return "marginal";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

StabilityVerdict classify_stability(const JacobianMatrix& J, int dim_g, double zero_tol,
                                    bool scale_by_norm) {
  const Eigen::VectorXcd ev = jacobian_eigenvalues(J);
  StabilityVerdict v;
  v.zero_tol_used = zero_tol;
  if (scale_by_norm) {
    const double norm1 = J.matrix.cwiseAbs().colwise().sum().maxCoeff();
    v.zero_tol_used *= std::max(1.0, norm1);
  }
  for (int k = 0; k < ev.size(); ++k) {
    const double re = ev[k].real();
    if (re > v.zero_tol_used)
      ++v.n_positive;
    else if (re < -v.zero_tol_used)
      ++v.n_negative;
    else
      ++v.n_zero;
  }
  if (v.n_positive > 0)
    v.tag = Stability::Unstable;
  else if (v.n_zero > dim_g)
    v.tag = Stability::Marginal;
  else
    v.tag = Stability::Stable;
  return v;
}

}  // namespace qk
