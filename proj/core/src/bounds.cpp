#include "qk/bounds.hpp"

#include <cmath>

namespace qk {

bool zero_sum_check(const ForcingVector& omega, double tol) {
  return omega.sum().norm() <= tol;
}

double drift_bound(const WeightedGraph& graph, double C) {
  if (C < 0.0) throw DomainError("drift_bound: C must be nonnegative");
  return 0.5 * C * graph.max_row_sum();
}

double cp_constant(double p) {
  if (p < 1.0) throw DomainError("cp_constant: p must be >= 1");
  if (std::isinf(p) || p >= 2.0) return 1.0;
  return std::pow(3.0, 1.0 / p - 0.5);
}

double lp_linf_norm(const ForcingVector& omega, double p) {
  if (p < 1.0) throw DomainError("lp_linf_norm: p must be >= 1");
  double worst = 0.0;
  for (const auto& q : omega.elements()) {
    const Mat& m = q.entries();
    double norm;
    if (std::isinf(p)) {
      norm = m.cwiseAbs().maxCoeff();
    } else {
      norm = std::pow(m.cwiseAbs().array().pow(p).sum(), 1.0 / p);
    }
    worst = std::max(worst, norm);
  }
  return worst;
}

AdmissibilityReport so3_admissibility(const ForcingVector& omega, const WeightedGraph& graph,
                                      const std::vector<double>& p_grid) {
  if (omega.tag() != GroupTag::SOd || omega.dim() != 3)
    throw UnsupportedError("so3_admissibility: requires an so(3) forcing");
  if (omega.size() != graph.size())
    throw DimensionError("so3_admissibility: forcing/graph size mismatch");
  if (p_grid.empty()) throw DomainError("so3_admissibility: empty p grid");

  AdmissibilityReport rep;
  rep.p_grid = p_grid;
  const double gamma_inf = graph.max_row_sum();
  double worst_margin = std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    const double radius = std::pow(2.0, 1.0 + (std::isinf(p) ? 0.0 : 1.0 / p)) *
                          cp_constant(p) * 0.5 * gamma_inf;
    const double margin = radius - lp_linf_norm(omega, p);
    rep.margins.push_back(margin);
    if (margin < worst_margin) {
      worst_margin = margin;
      rep.binding_p = p;
    }
  }
  rep.inadmissible = worst_margin < 0.0;
  return rep;
}

}  // namespace qk
