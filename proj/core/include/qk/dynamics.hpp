#pragma once

#include <optional>
#include <vector>

#include "qk/coupling.hpp"
#include "qk/graph.hpp"

namespace qk {

// Ordered n-tuple of group elements, all with the same tag and dimension.
class Configuration {
 public:
  explicit Configuration(std::vector<GroupElement> elems);

  int size() const { return static_cast<int>(x_.size()); }
  int dim() const { return x_.front().dim(); }
  GroupTag tag() const { return x_.front().tag(); }
  const GroupElement& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<GroupElement>& elements() const { return x_; }

  std::vector<Mat> matrices() const;
  static Configuration from_matrices(const std::vector<Mat>& mats, GroupTag tag,
                                     double tol = kClosureTol);

 private:
  std::vector<GroupElement> x_;
};

// n-tuple of algebra elements; carries forcings Omega as well as algebra
// perturbations Q and coupling drifts F(X).
class ForcingVector {
 public:
  explicit ForcingVector(std::vector<AlgebraElement> elems);
  static ForcingVector zero(int n, int d, GroupTag tag);

  int size() const { return static_cast<int>(w_.size()); }
  int dim() const { return w_.front().dim(); }
  GroupTag tag() const { return w_.front().tag(); }
  const AlgebraElement& operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
  const std::vector<AlgebraElement>& elements() const { return w_; }

  Mat sum() const;
  double max_norm() const;  // max_i ||Q_i||_F
  ForcingVector scaled(double s) const;

 private:
  std::vector<AlgebraElement> w_;
};

// Fixed group elements inserted into the coupling; A = B = I recovers the
// plain flow.
struct FrustrationPair {
  GroupElement A;
  GroupElement B;
  FrustrationPair(GroupElement a, GroupElement b);
  static FrustrationPair identity(int d, GroupTag tag);
  bool is_identity(double tol = 1e-14) const;
};

// F_i(X) = 1/2 sum_j gamma_ij (f(X_j X_i^{-1}) - f(X_i X_j^{-1})). Edge terms
// are accumulated in cancelling pairs, so sum_i F_i(X) stays at rounding level.
ForcingVector coupling_drift(const Configuration& X, const WeightedGraph& graph,
                             const CouplingSeries& f);

// Body-frame velocity X_i' X_i^{-1} = Omega_i + F_i(X).
ForcingVector qk_rhs(const Configuration& X, const ForcingVector& omega,
                     const WeightedGraph& graph, const CouplingSeries& f);

// Omega_i + 1/2 sum_j gamma_ij (g(B X_j X_i^{-1} A^{-1}) - g(B A^{-1})) with
// g(Z) = f(Z) - f(Z^{-1}).
ForcingVector frustrated_rhs(const Configuration& X, const ForcingVector& omega,
                             const WeightedGraph& graph, const CouplingSeries& f,
                             const FrustrationPair& frustration);

// Flow selector: plain when frustration is absent.
struct Flow {
  WeightedGraph graph;
  CouplingSeries f;
  ForcingVector omega;
  std::optional<FrustrationPair> frustration;

  ForcingVector rhs(const Configuration& X) const;
  std::vector<Mat> rhs_raw(const std::vector<Mat>& X, GroupTag tag) const;
};

enum class Scheme { LieEuler, ExpMidpoint };

struct IntegrateOptions {
  double step = 1e-2;
  Scheme scheme = Scheme::ExpMidpoint;
  int store_every = 1;
  double closure_tol = 1e-9;      // retract when the group defect exceeds this
  double blowup_threshold = 1e8;  // abort when any entry magnitude exceeds this
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Configuration> states;
  std::vector<double> drift;  // group defect after repair, per stored step

  const Configuration& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
  double max_drift() const;
};

// Fixed-step structure-preserving integration: X_i <- exp(h V_i) X_i with a
// midpoint stage by default; drift repaired by retraction when it exceeds
// closure_tol. Throws BlowUpError (with the time stamp) past the threshold.
Trajectory integrate(const Configuration& X0, const Flow& flow, double t_end,
                     const IntegrateOptions& opts = {});

// theta_i' = omega_i + sum_j gamma_ij sum_p a_p (sin(p(theta_j - theta_i - alpha)) + sin(p alpha)).
// At alpha = 0 this is the phase-coupled model with H = sum a_p sin(p .);
// for alpha != 0 it is the exact U(1) reduction of the frustrated flow with
// A = e^{i alpha/2}, B = e^{-i alpha/2} (the constant keeps sync stationary).
RVec classical_rhs(const RVec& theta, const RVec& omega, const WeightedGraph& graph,
                   const CouplingSeries& f, double alpha = 0.0);

// Explicit-midpoint reference integrator for the classical model.
RVec integrate_classical(RVec theta, const RVec& omega, const WeightedGraph& graph,
                         const CouplingSeries& f, double alpha, double t_end, double h);

}  // namespace qk
