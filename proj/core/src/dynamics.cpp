#include "qk/dynamics.hpp"

#include <cmath>

namespace qk {

Configuration::Configuration(std::vector<GroupElement> elems) : x_(std::move(elems)) {
  if (x_.empty()) throw DomainError("Configuration: empty tuple");
  for (const auto& e : x_) {
    if (e.tag() != x_.front().tag() || e.dim() != x_.front().dim())
      throw DimensionError("Configuration: mixed tags or dimensions");
  }
}

std::vector<Mat> Configuration::matrices() const {
  std::vector<Mat> out;
  out.reserve(x_.size());
  for (const auto& e : x_) out.push_back(e.entries());
  return out;
}

Configuration Configuration::from_matrices(const std::vector<Mat>& mats, GroupTag tag,
                                           double tol) {
  std::vector<GroupElement> elems;
  elems.reserve(mats.size());
  for (const auto& m : mats) elems.emplace_back(m, tag, tol);
  return Configuration(std::move(elems));
}

ForcingVector::ForcingVector(std::vector<AlgebraElement> elems) : w_(std::move(elems)) {
  if (w_.empty()) throw DomainError("ForcingVector: empty tuple");
  for (const auto& e : w_) {
    if (e.tag() != w_.front().tag() || e.dim() != w_.front().dim())
      throw DimensionError("ForcingVector: mixed tags or dimensions");
  }
}

ForcingVector ForcingVector::zero(int n, int d, GroupTag tag) {
  std::vector<AlgebraElement> elems(static_cast<std::size_t>(n), AlgebraElement::zero(d, tag));
  return ForcingVector(std::move(elems));
}

Mat ForcingVector::sum() const {
  Mat s = Mat::Zero(dim(), dim());
  for (const auto& e : w_) s += e.entries();
  return s;
}

double ForcingVector::max_norm() const {
  double m = 0.0;
  for (const auto& e : w_) m = std::max(m, e.norm());
  return m;
}

ForcingVector ForcingVector::scaled(double s) const {
  std::vector<AlgebraElement> elems;
  elems.reserve(w_.size());
  for (const auto& e : w_) elems.emplace_back(Mat(s * e.entries()), e.tag());
  return ForcingVector(std::move(elems));
}

FrustrationPair::FrustrationPair(GroupElement a, GroupElement b)
    : A(std::move(a)), B(std::move(b)) {
  if (A.tag() != B.tag() || A.dim() != B.dim())
    throw DimensionError("FrustrationPair: A and B must share tag and dimension");
}

FrustrationPair FrustrationPair::identity(int d, GroupTag tag) {
  return FrustrationPair(GroupElement::identity(d, tag), GroupElement::identity(d, tag));
}

bool FrustrationPair::is_identity(double tol) const {
  const Mat I = Mat::Identity(A.dim(), A.dim());
  return (A.entries() - I).norm() <= tol && (B.entries() - I).norm() <= tol;
}

namespace {

void check_flow_shapes(const Configuration& X, const WeightedGraph& graph) {
  if (graph.size() != X.size())
    throw DimensionError("flow: graph size does not match configuration size");
}

std::vector<Mat> coupling_drift_raw(const std::vector<Mat>& X, GroupTag tag,
                                    const WeightedGraph& graph, const CouplingSeries& f) {
  const int n = static_cast<int>(X.size());
  const auto d = X.front().rows();
  std::vector<Mat> F(X.size(), Mat::Zero(d, d));
  for (int i = 0; i < n; ++i) {
    const Mat Xi_inv = group_inverse(X[static_cast<std::size_t>(i)], tag);
    for (int j = i + 1; j < n; ++j) {
      const double w = graph.weight(i, j);
      if (w == 0.0) continue;
      const Mat Z = X[static_cast<std::size_t>(j)] * Xi_inv;
      const Mat G = 0.5 * w * f.odd_part(Z, group_inverse(Z, tag));
      F[static_cast<std::size_t>(i)] += G;
      F[static_cast<std::size_t>(j)] -= G;
    }
  }
  return F;
}

std::vector<Mat> frustrated_drift_raw(const std::vector<Mat>& X, GroupTag tag,
                                      const WeightedGraph& graph, const CouplingSeries& f,
                                      const FrustrationPair& fr) {
  const int n = static_cast<int>(X.size());
  const auto d = X.front().rows();
  const Mat& A = fr.A.entries();
  const Mat& B = fr.B.entries();
  const Mat A_inv = group_inverse(A, tag);
  const Mat BA_inv = B * A_inv;
  const Mat g_bias = f.odd_part(BA_inv, group_inverse(BA_inv, tag));
  std::vector<Mat> F(X.size(), Mat::Zero(d, d));
  for (int i = 0; i < n; ++i) {
    const Mat Xi_inv = group_inverse(X[static_cast<std::size_t>(i)], tag);
    for (int j = 0; j < n; ++j) {
      const double w = graph.weight(i, j);
      if (w == 0.0 || i == j) continue;
      const Mat Z = B * X[static_cast<std::size_t>(j)] * Xi_inv * A_inv;
      F[static_cast<std::size_t>(i)] +=
          0.5 * w * (f.odd_part(Z, group_inverse(Z, tag)) - g_bias);
    }
  }
  return F;
}

ForcingVector wrap_algebra(std::vector<Mat> mats, GroupTag tag) {
  std::vector<AlgebraElement> elems;
  elems.reserve(mats.size());
  // drift of a Lohe-closed flow lands in the algebra; construction re-checks
  for (auto& m : mats) elems.emplace_back(std::move(m), tag, 1e-9);
  return ForcingVector(std::move(elems));
}

}  // namespace

ForcingVector coupling_drift(const Configuration& X, const WeightedGraph& graph,
                             const CouplingSeries& f) {
  check_flow_shapes(X, graph);
  return wrap_algebra(coupling_drift_raw(X.matrices(), X.tag(), graph, f), X.tag());
}

ForcingVector qk_rhs(const Configuration& X, const ForcingVector& omega,
                     const WeightedGraph& graph, const CouplingSeries& f) {
  check_flow_shapes(X, graph);
  if (omega.size() != X.size() || omega.dim() != X.dim())
    throw DimensionError("qk_rhs: forcing shape mismatch");
  auto F = coupling_drift_raw(X.matrices(), X.tag(), graph, f);
  for (int i = 0; i < X.size(); ++i) F[static_cast<std::size_t>(i)] += omega[i].entries();
  return wrap_algebra(std::move(F), X.tag());
}

ForcingVector frustrated_rhs(const Configuration& X, const ForcingVector& omega,
                             const WeightedGraph& graph, const CouplingSeries& f,
                             const FrustrationPair& frustration) {
  check_flow_shapes(X, graph);
  if (omega.size() != X.size() || omega.dim() != X.dim())
    throw DimensionError("frustrated_rhs: forcing shape mismatch");
  auto F = frustrated_drift_raw(X.matrices(), X.tag(), graph, f, frustration);
  for (int i = 0; i < X.size(); ++i) F[static_cast<std::size_t>(i)] += omega[i].entries();
  return wrap_algebra(std::move(F), X.tag());
}

ForcingVector Flow::rhs(const Configuration& X) const {
  if (frustration) return frustrated_rhs(X, omega, graph, f, *frustration);
  return qk_rhs(X, omega, graph, f);
}

std::vector<Mat> Flow::rhs_raw(const std::vector<Mat>& X, GroupTag tag) const {
  auto F = frustration ? frustrated_drift_raw(X, tag, graph, f, *frustration)
                       : coupling_drift_raw(X, tag, graph, f);
  for (std::size_t i = 0; i < X.size(); ++i) F[i] += omega[static_cast<int>(i)].entries();
  return F;
}

double Trajectory::max_drift() const {
  double m = 0.0;
  for (double d : drift) m = std::max(m, d);
  return m;
}

Trajectory integrate(const Configuration& X0, const Flow& flow, double t_end,
                     const IntegrateOptions& opts) {
  if (opts.step <= 0.0) throw DomainError("integrate: step must be positive");
  if (t_end < 0.0) throw DomainError("integrate: t_end must be nonnegative");
  if (opts.store_every < 1) throw DomainError("integrate: store_every must be >= 1");
  if (flow.graph.size() != X0.size() || flow.omega.size() != X0.size())
    throw DimensionError("integrate: flow/configuration size mismatch");

  const GroupTag tag = X0.tag();
  const int n = X0.size();
  std::vector<Mat> X = X0.matrices();

  const long steps = static_cast<long>(std::ceil(t_end / opts.step - 1e-12));

  Trajectory traj;
  auto record = [&](double t) {
    double defect = 0.0;
    for (auto& x : X) defect = std::max(defect, group_defect(x, tag));
    traj.times.push_back(t);
    traj.drift.push_back(defect);
    traj.states.push_back(Configuration::from_matrices(X, tag, 10.0 * opts.closure_tol));
  };
  record(0.0);

  for (long s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * opts.step;
    const double h = std::min(opts.step, t_end - t);
    std::vector<Mat> V = flow.rhs_raw(X, tag);
    if (opts.scheme == Scheme::ExpMidpoint) {
      std::vector<Mat> Xmid(X.size());
      for (std::size_t i = 0; i < X.size(); ++i)
        Xmid[i] = exp_map(Mat(0.5 * h * V[i])) * X[i];
      V = flow.rhs_raw(Xmid, tag);
    }
    for (std::size_t i = 0; i < X.size(); ++i) X[i] = exp_map(Mat(h * V[i])) * X[i];

    for (int i = 0; i < n; ++i) {
      auto& x = X[static_cast<std::size_t>(i)];
      if (x.cwiseAbs().maxCoeff() > opts.blowup_threshold)
        throw BlowUpError("integrate: blow-up detected", t + h);
      if (tag != GroupTag::Generic && group_defect(x, tag) > opts.closure_tol)
        x = retract_matrix(x, tag);
    }
    if ((s + 1) % opts.store_every == 0 || s + 1 == steps) record(t + h);
  }
  return traj;
}

RVec classical_rhs(const RVec& theta, const RVec& omega, const WeightedGraph& graph,
                   const CouplingSeries& f, double alpha) {
  const int n = static_cast<int>(theta.size());
  if (omega.size() != n) throw DimensionError("classical_rhs: omega length mismatch");
  if (graph.size() != n) throw DimensionError("classical_rhs: graph size mismatch");
  const auto& a = f.coefficients();
  RVec out = omega;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double w = graph.weight(i, j);
      if (w == 0.0) continue;
      double h = 0.0;
      for (std::size_t p = 0; p < a.size(); ++p) {
        const double pp = static_cast<double>(p + 1);
        h += a[p] * (std::sin(pp * (theta[j] - theta[i] - alpha)) + std::sin(pp * alpha));
      }
      acc += w * h;
    }
    out[i] += acc;
  }
  return out;
}

RVec integrate_classical(RVec theta, const RVec& omega, const WeightedGraph& graph,
                         const CouplingSeries& f, double alpha, double t_end, double h) {
  if (h <= 0.0) throw DomainError("integrate_classical: step must be positive");
  const long steps = static_cast<long>(std::ceil(t_end / h - 1e-12));
  for (long s = 0; s < steps; ++s) {
    const double t = static_cast<double>(s) * h;
    const double hs = std::min(h, t_end - t);
    const RVec k1 = classical_rhs(theta, omega, graph, f, alpha);
    const RVec k2 = classical_rhs(theta + 0.5 * hs * k1, omega, graph, f, alpha);
    theta += hs * k2;
  }
  return theta;
}

}  // namespace qk
