#include "qk/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qk {

namespace {
constexpr double kPi = std::numbers::pi;
}

Configuration sync_configuration(int n, const GroupElement& Z) {
  if (n < 1) throw DomainError("sync_configuration: n must be positive");
  return Configuration(std::vector<GroupElement>(static_cast<std::size_t>(n), Z));
}

Configuration near_sync(const WeightedGraph& graph, const ForcingVector& omega, double eps,
                        const CouplingSeries& f) {
  const int n = graph.size();
  if (omega.size() != n) throw DimensionError("near_sync: forcing length mismatch");
  if (omega.sum().norm() > 1e-10)
    throw ConsistencyError("near_sync: forcing does not sum to zero");
  const double slope = f.slope_at_identity();
  if (!(slope > 0.0)) throw DomainError("near_sync: coupling slope at identity must be positive");
  const RMat Lp = laplacian_pseudoinverse(graph);  // throws RankError when disconnected

  const int d = omega.dim();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Mat Q = Mat::Zero(d, d);
    for (int j = 0; j < n; ++j) Q += Lp(i, j) * omega[j].entries();
    Q *= -eps / slope;
    out.push_back(exp_map(AlgebraElement(std::move(Q), omega.tag())));
  }
  return Configuration(std::move(out));
}

GroupElement twist_generator(const TwistSpec& spec) {
  if (spec.n < 1) throw DomainError("twist_configuration: n must be positive");
  if (spec.d < 2) throw DomainError("twist_configuration: d must be >= 2");
  const int z = spec.d / 2;
  if (static_cast<int>(spec.winding.size()) != z)
    throw DimensionError("twist_configuration: winding length must be floor(d/2)");
  RVec angles(z);
  for (int q = 0; q < z; ++q)
    angles[q] = 2.0 * kPi * static_cast<double>(spec.winding[static_cast<std::size_t>(q)]) /
                static_cast<double>(spec.n);
  return canonical_twist(angles, spec.d);
}

Configuration twist_configuration(const TwistSpec& spec) {
  const GroupElement T = twist_generator(spec);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(spec.n));
  RMat acc = RMat::Identity(spec.d, spec.d);
  for (int i = 0; i < spec.n; ++i) {
    out.push_back(GroupElement::so(acc));
    acc = T.real_entries() * acc;
  }
  return Configuration(std::move(out));
}

Configuration twist_flip_configuration(const TwistFlipSpec& spec) {
  const int n = spec.n;
  const int d = spec.d;
  if (n < 3) throw DomainError("twist_flip_configuration: n must be >= 3");
  if (d < 2) throw DomainError("twist_flip_configuration: d must be >= 2");
  const int z = d / 2;
  if (static_cast<int>(spec.axes.size()) != z)
    throw DimensionError("twist_flip_configuration: need floor(d/2) axis specs");

  // per axis: cumulative angles from the step sequence
  std::vector<std::vector<double>> phase(static_cast<std::size_t>(z),
                                         std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int q = 0; q < z; ++q) {
    const auto& axis = spec.axes[static_cast<std::size_t>(q)];
    std::vector<char> flipped(static_cast<std::size_t>(n), 0);
    for (int e : axis.flip_edges) {
      if (e < 0 || e >= n) throw ConstructionError("twist_flip_configuration: flip edge out of range");
      if (flipped[static_cast<std::size_t>(e)])
        throw ConstructionError("twist_flip_configuration: duplicate flip edge");
      flipped[static_cast<std::size_t>(e)] = 1;
    }
    const int nf = static_cast<int>(axis.flip_edges.size());
    if (n == 2 * nf)
      throw ConstructionError("twist_flip_configuration: flip pattern cannot close the cycle");
    const double s =
        (2.0 * kPi * axis.winding - kPi * nf) / static_cast<double>(n - 2 * nf);
    double acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      acc += flipped[static_cast<std::size_t>(i)] ? kPi - s : s;
      phase[static_cast<std::size_t>(q)][static_cast<std::size_t>(i + 1)] = acc;
    }
  }

  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RVec angles(z);
    for (int q = 0; q < z; ++q)
      angles[q] = phase[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
    out.push_back(canonical_twist(angles, d));
  }
  Configuration X(std::move(out));
  if (neighbor_balance_residual(X) > 1e-10)
    throw ConstructionError("twist_flip_configuration: branch equation residual too large");
  return X;
}

double neighbor_balance_residual(const Configuration& X) {
  const int n = X.size();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Mat Xi_inv = group_inverse(X[i].entries(), X.tag());
    const Mat A = X[(i + 1) % n].entries() * Xi_inv;
    const Mat B = X[(i + n - 1) % n].entries() * Xi_inv;
    const Mat r = (A - group_inverse(A, X.tag())) + (B - group_inverse(B, X.tag()));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double fixed_point_residual(const Configuration& X, const ForcingVector& omega,
                            const WeightedGraph& graph, const CouplingSeries& f) {
  return qk_rhs(X, omega, graph, f).max_norm();
}

double sync_class_distance(const Configuration& X) {
  Mat mean = Mat::Zero(X.dim(), X.dim());
  for (const auto& e : X.elements()) mean += e.entries();
  mean /= static_cast<double>(X.size());
  Mat center;
  try {
    center = retract_matrix(mean, X.tag());
  } catch (const RankError&) {
    // spread-out states can average to a singular matrix; any element then
    // anchors a within-factor-2 distance proxy
    center = X[0].entries();
  }
  double worst = 0.0;
  for (const auto& e : X.elements()) worst = std::max(worst, (e.entries() - center).norm());
  return worst;
}

double twist_orbit_distance(const Configuration& X, const GroupElement& generator) {
  const Mat Tinv = group_inverse(generator.entries(), generator.tag());
  std::vector<GroupElement> untwisted;
  untwisted.reserve(static_cast<std::size_t>(X.size()));
  Mat acc = Mat::Identity(X.dim(), X.dim());
  for (int i = 0; i < X.size(); ++i) {
    untwisted.emplace_back(Mat(acc * X[i].entries()), X.tag(), 1e-6);
    acc = Tinv * acc;
  }
  return sync_class_distance(Configuration(std::move(untwisted)));
}

}  // namespace qk
