#include "qk/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "qk/bounds.hpp"
#include "qk/io.hpp"
#include "qk/linearization.hpp"
#include "qk/random.hpp"
#include "qk/solutions.hpp"
#include "qk/spectra.hpp"

namespace qk {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(int criterion) : criterion_(criterion), start_(Clock::now()) {}

  void check(const std::string& name, double measured, const std::string& relation,
             double threshold) {
    bool ok = false;
    if (relation == "<=") ok = measured <= threshold;
    else if (relation == "<") ok = measured < threshold;
    else if (relation == ">") ok = measured > threshold;
    else if (relation == ">=") ok = measured >= threshold;
    else if (relation == "==") ok = measured == threshold;
    results_.push_back({criterion_, name, ok, measured, threshold, relation, elapsed()});
  }
  void check_in(const std::string& name, double measured, double lo, double hi) {
    const bool ok = measured >= lo && measured <= hi;
    results_.push_back({criterion_, name, ok, measured, lo, "in[" + format_double(lo) + "," +
                        format_double(hi) + "]", elapsed()});
    results_.back().threshold = hi;
  }
  void check_bool(const std::string& name, bool ok) {
    results_.push_back({criterion_, name, ok, ok ? 1.0 : 0.0, 1.0, "==", elapsed()});
  }
  void runtime_below(const std::string& name, double seconds_limit) {
    check(name, elapsed(), "<", seconds_limit);
  }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  int criterion_;
  Clock::time_point start_;
  std::vector<CheckResult> results_;
};

double wrapped_angle_diff(double a, double b) { return std::remainder(a - b, 2.0 * kPi); }

Configuration u1_configuration(const RVec& theta) {
  std::vector<GroupElement> elems;
  for (int i = 0; i < theta.size(); ++i) elems.push_back(GroupElement::u1(theta[i]));
  return Configuration(std::move(elems));
}

ForcingVector u1_forcing(const RVec& omega) {
  std::vector<AlgebraElement> elems;
  for (int i = 0; i < omega.size(); ++i) elems.push_back(AlgebraElement::u1(omega[i]));
  return ForcingVector(std::move(elems));
}

RVec random_zero_sum_frequencies(int n, double scale, Rng& rng) {
  RVec w(n);
  for (int i = 0; i < n; ++i) w[i] = rng.normal(scale);
  w.array() -= w.mean();
  return w;
}

RVec random_angles(int n, Rng& rng) {
  RVec th(n);
  for (int i = 0; i < n; ++i) th[i] = rng.uniform(0.0, 2.0 * kPi);
  return th;
}

TwistSpec single_spec(int n, int d, int l) {
  TwistSpec spec;
  spec.n = n;
  spec.d = d;
  spec.winding.assign(static_cast<std::size_t>(d / 2), 0);
  spec.winding[0] = l;
  return spec;
}

double multiset_discrepancy(std::vector<double> a, const Eigen::VectorXcd& ev) {
  std::vector<double> b(static_cast<std::size_t>(ev.size()));
  for (int k = 0; k < ev.size(); ++k) b[static_cast<std::size_t>(k)] = ev[k].real();
  std::sort(b.begin(), b.end());
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

// --- criterion bodies -------------------------------------------------------

std::vector<CheckResult> criterion_classical(std::uint64_t seed) {
  Recorder rec(1);
  Rng rng(seed);
  const int n = 5;
  const WeightedGraph graph = circulant({n, {1.0}});
  const CouplingSeries f = CouplingSeries::identity();
  const RVec omega = random_zero_sum_frequencies(n, 0.5, rng);
  const RVec theta0 = random_angles(n, rng);

  Flow flow{graph, f, u1_forcing(omega), std::nullopt};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.store_every = 1 << 30;
  const Trajectory traj = integrate(u1_configuration(theta0), flow, 10.0, opts);
  const RVec theta_ref = integrate_classical(theta0, omega, graph, f, 0.0, 10.0, 1e-3);

  double worst = 0.0;
  const Configuration& Xf = traj.final_state();
  for (int i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(wrapped_angle_diff(std::arg(Xf[i].entries()(0, 0)),
                                                        theta_ref[i])));
  rec.check("u1_vs_scalar_kuramoto_max_angle_diff", worst, "<=", 1e-5);
  rec.runtime_below("runtime_seconds", 1.0);
  return rec.take();
}

std::vector<CheckResult> criterion_single_spectra(std::uint64_t seed) {
  Recorder rec(2);
  Rng rng(seed);
  const CouplingSeries f = CouplingSeries::identity();
  double worst = 0.0;
  for (int n : {5, 8, 12})
    for (int d : {3, 4, 5})
      for (int K : {1, 2})
        for (int l : {0, 1, 2})
          for (int draw = 0; draw < 3; ++draw) {
            const auto bands = random_bands(K, rng);
            const WeightedGraph graph = circulant({n, bands});
            const Configuration Y = twist_configuration(single_spec(n, d, l));
            const Flow flow{graph, f, ForcingVector::zero(n, d, GroupTag::SOd), std::nullopt};
            const JacobianMatrix J = fd_jacobian_oracle(Y, flow, 1e-5);
            const double diff = multiset_discrepancy(
                single_twist_eigs(bands, n, d, l).expanded_sorted(), jacobian_eigenvalues(J));
            worst = std::max(worst, diff);
          }
  rec.check("single_twist_multiset_vs_fd_oracle", worst, "<=", 1e-5);
  rec.runtime_below("runtime_seconds", 30.0);
  return rec.take();
}

std::vector<CheckResult> criterion_double_spectra(std::uint64_t seed) {
  Recorder rec(3);
  (void)seed;
  const CouplingSeries f = CouplingSeries::identity();
  double worst = 0.0;
  bool mult_ok = true;
  for (int d : {4, 5, 6})
    for (int n : {6, 10})
      for (auto [l1, l2] : {std::pair{1, 1}, std::pair{1, 2}}) {
        const std::vector<double> bands{1.0};
        TwistSpec spec;
        spec.n = n;
        spec.d = d;
        spec.winding.assign(static_cast<std::size_t>(d / 2), 0);
        spec.winding[0] = l1;
        spec.winding[1] = l2;
        const Configuration Y = twist_configuration(spec);
        const Flow flow{circulant({n, bands}), f, ForcingVector::zero(n, d, GroupTag::SOd),
                        std::nullopt};
        const TwistSpectrum sp = double_twist_eigs(bands, n, d, l1, l2);
        const JacobianMatrix J = fd_jacobian_oracle(Y, flow, 1e-5);
        worst = std::max(worst,
                         multiset_discrepancy(sp.expanded_sorted(), jacobian_eigenvalues(J)));
        for (int m = 0; m < n; ++m) {
          int total = 0;
          for (const auto& e : sp.entries)
            if (e.m == m) total += e.multiplicity;
          if (total != d * (d - 1) / 2) mult_ok = false;
        }
      }
  rec.check("double_twist_multiset_vs_fd_oracle", worst, "<=", 1e-5);
  rec.check_bool("per_m_multiplicity_totals_d(d-1)/2", mult_ok);
  return rec.take();
}

std::vector<CheckResult> criterion_instability_certificates(std::uint64_t seed) {
  Recorder rec(4);
  (void)seed;
  const std::vector<double> bands{1.0};
  double min_mu = std::numeric_limits<double>::infinity();
  double min_kappa = std::numeric_limits<double>::infinity();
  for (int n = 8; n <= 24; ++n) {
    min_mu = std::min(min_mu, mu_eig(bands, n, 2, n - 1));
    min_kappa = std::min(min_kappa, kappa_eig(bands, n, 1, 1, n - 1, +1));
  }
  rec.check("mu_{2,n-1}_margin_n8..24", min_mu, ">", 1e-6);
  rec.check("kappa+_{1,1,n-1}_margin_n8..24", min_kappa, ">", 1e-6);
  return rec.take();
}

std::vector<CheckResult> criterion_divisibility(std::uint64_t seed) {
  Recorder rec(5);
  (void)seed;
  const std::vector<double> strictK3{0.0, 0.0, 1.0};
  const OneTwistSupport s12 = supports_one_twist(strictK3, 12, 3);
  const OneTwistSupport s13 = supports_one_twist(strictK3, 13, 3);
  rec.check_bool("strict_K3_n12_supports", s12.supports);
  rec.check_bool("strict_K3_n13_rejects", !s13.supports);
  rec.check_bool("n13_witness_in_mu_family", s13.witness.family == EigFamily::Mu);
  rec.check("n13_witness_positive", s13.witness.value, ">", 0.0);
  return rec.take();
}

std::vector<CheckResult> criterion_rho_star(std::uint64_t seed) {
  Recorder rec(6);
  (void)seed;
  rec.check("rho_star_even_n10_exact_zero", rho_star(10), "==", 0.0);
  rec.check("rho_star_even_n100_exact_zero", rho_star(100), "==", 0.0);
  const double ratio = rho_star(101) / ((kPi / 101.0) * (kPi / 101.0));
  rec.check("rho_star_101_vs_(pi/n)^2_reldev", std::abs(ratio - 1.0), "<=", 0.05);
  const double r9 = rho_star(9);
  const OneTwistSupport above = supports_one_twist({r9 + 1e-3, 1.0}, 9, 3);
  const OneTwistSupport below = supports_one_twist({r9 - 1e-3, 1.0}, 9, 3);
  rec.check_bool("n9_K2_boundary_above_supports", above.supports);
  rec.check_bool("n9_K2_boundary_below_rejects", !below.supports);
  return rec.take();
}

std::vector<CheckResult> criterion_alpha_star(std::uint64_t seed) {
  Recorder rec(7);
  (void)seed;
  rec.check("alpha_star_vs_0.340461", std::abs(alpha_star(1e-12) - 0.340461), "<=", 1e-5);
  const OneTwistSupport lo = supports_one_twist(alpha_graph_bands(0.33, 400), 400, 3);
  const OneTwistSupport hi = supports_one_twist(alpha_graph_bands(0.35, 400), 400, 3);
  rec.check_bool("alpha_0.33_n400_supports", lo.supports);
  rec.check_bool("alpha_0.35_n400_rejects", !hi.supports);
  return rec.take();
}

std::vector<CheckResult> criterion_sync_stability(std::uint64_t seed) {
  Recorder rec(8);
  Rng rng(seed);
  const int n = 8, d = 3;
  const CouplingSeries f = CouplingSeries::identity();
  const SoBasis basis = so_basis(d);
  double worst_max_re = -std::numeric_limits<double>::infinity();
  bool zeros_ok = true;
  double worst_terminal = 0.0;
  double worst_initial_dev = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    const WeightedGraph graph = random_connected_graph(n, rng);
    const Configuration Ysync = sync_configuration(n, GroupElement::identity(d, GroupTag::SOd));
    const JacobianMatrix J = jacobian_matrix(Ysync, graph, f, basis);
    const Eigen::VectorXcd ev = jacobian_eigenvalues(J);
    double gap = std::numeric_limits<double>::infinity();
    int zeros = 0;
    for (int k = 0; k < ev.size(); ++k) {
      const double re = ev[k].real();
      worst_max_re = std::max(worst_max_re, re);
      if (std::abs(re) <= 1e-8) ++zeros;
      else gap = std::min(gap, -re);
    }
    if (zeros != d * (d - 1) / 2) zeros_ok = false;

    // perturb to class distance ~1e-1, then relax
    std::vector<AlgebraElement> Q;
    for (int i = 0; i < n; ++i) Q.push_back(random_so_algebra(d, 1.0, rng));
    double delta = 0.05;
    auto build = [&](double del) {
      std::vector<GroupElement> elems;
      for (int i = 0; i < n; ++i)
        elems.push_back(exp_map(AlgebraElement(Mat(del * Q[static_cast<std::size_t>(i)].entries()),
                                               GroupTag::SOd)));
      return Configuration(std::move(elems));
    };
    Configuration X0 = build(delta);
    delta *= 0.1 / sync_class_distance(X0);
    X0 = build(delta);
    const double d0 = sync_class_distance(X0);
    worst_initial_dev = std::max(worst_initial_dev, std::abs(d0 - 0.1));

    const double t_end = std::min(200.0, std::max(12.0, 9.0 / gap));
    Flow flow{graph, f, ForcingVector::zero(n, d, GroupTag::SOd), std::nullopt};
    IntegrateOptions opts;
    opts.store_every = 1 << 30;
    const Trajectory traj = integrate(X0, flow, t_end, opts);
    worst_terminal = std::max(worst_terminal, sync_class_distance(traj.final_state()));
  }
  rec.check("sync_jacobian_max_re_10_draws", worst_max_re, "<=", 1e-8);
  rec.check_bool("sync_jacobian_exactly_dimg_zeros", zeros_ok);
  rec.check("initial_class_distance_minus_0.1", worst_initial_dev, "<=", 0.02);
  rec.check("terminal_class_distance", worst_terminal, "<", 1e-4);
  return rec.take();
}

std::vector<CheckResult> criterion_near_sync(std::uint64_t seed) {
  Recorder rec(9);
  Rng rng(seed);
  const int n = 6, d = 3;
  const WeightedGraph graph = circulant({n, {1.0}});
  const CouplingSeries f = CouplingSeries::identity();
  const ForcingVector omega = random_zero_sum_forcing(n, d, GroupTag::SOd, 0.5, rng);
  auto residual_at = [&](double eps) {
    const Configuration Y = near_sync(graph, omega, eps, f);
    return fixed_point_residual(Y, omega.scaled(eps), graph, f);
  };
  const double r1 = residual_at(1e-1);
  const double r2 = residual_at(1e-2);
  const double r3 = residual_at(1e-3);
  rec.check_in("residual_ratio_eps1e-1_over_1e-2", r1 / r2, 80.0, 120.0);
  rec.check_in("residual_ratio_eps1e-2_over_1e-3", r2 / r3, 80.0, 120.0);
  return rec.take();
}

std::vector<CheckResult> criterion_twist_flip(std::uint64_t seed) {
  Recorder rec(10);
  (void)seed;
  const int n = 10, d = 4;
  TwistFlipSpec spec;
  spec.n = n;
  spec.d = d;
  spec.axes = {{1, {n - 1}}, {1, {}}};  // flip across the wrap edge in the first axis
  const Configuration X = twist_flip_configuration(spec);
  const WeightedGraph graph = circulant({n, {1.0}});
  rec.check("fixed_point_residual_K1",
            fixed_point_residual(X, ForcingVector::zero(n, d, GroupTag::SOd), graph,
                                 CouplingSeries::identity()),
            "<=", 1e-10);
  rec.check("branch_equation_residual", neighbor_balance_residual(X), "<=", 1e-12);
  return rec.take();
}

std::vector<CheckResult> criterion_frustration(std::uint64_t seed) {
  Recorder rec(11);
  Rng rng(seed);
  const CouplingSeries f = CouplingSeries::identity();

  // SO(4) sync with quarter-turn-offset frustration axes on the 5-ring
  const int n = 5, d = 4;
  const WeightedGraph graph = circulant({n, {1.0}});
  const SoBasis basis = so_basis(d);
  const Configuration Ysync = sync_configuration(n, GroupElement::identity(d, GroupTag::SOd));
  const RVec angA = (RVec(2) << 2.0 * kPi / 9.0, 0.0).finished();
  const RVec angB = (RVec(2) << 0.0, 2.0 * kPi / 9.0).finished();
  const FrustrationPair fr{canonical_twist(angA, d), canonical_twist(angB, d)};
  const JacobianMatrix Jf = frustrated_linearization(Ysync, graph, f, fr, basis);
  rec.check("frustrated_jacobian_asymmetry", (Jf.matrix - Jf.matrix.transpose()).norm(), ">",
            1e-3);
  const Eigen::VectorXcd ev = jacobian_eigenvalues(Jf);
  rec.check("frustrated_jacobian_max_imag", ev.imag().cwiseAbs().maxCoeff(), ">", 1e-6);

  const JacobianMatrix Jid = frustrated_linearization(
      Ysync, graph, f, FrustrationPair::identity(d, GroupTag::SOd), basis);
  const JacobianMatrix Jplain = jacobian_matrix(Ysync, graph, f, basis);
  rec.check("identity_pair_reduces_to_plain",
            (Jid.matrix - Jplain.matrix).cwiseAbs().maxCoeff(), "<=", 1e-12);

  // U(1) frustrated flow against the phase-lag scalar reference
  const double alpha = 0.7;
  const RVec omega = random_zero_sum_frequencies(n, 0.5, rng);
  const RVec theta0 = random_angles(n, rng);
  const FrustrationPair fru1{GroupElement::u1(alpha / 2.0), GroupElement::u1(-alpha / 2.0)};
  Flow flow{graph, f, u1_forcing(omega), fru1};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.store_every = 1 << 30;
  const Trajectory traj = integrate(u1_configuration(theta0), flow, 10.0, opts);
  const RVec theta_ref = integrate_classical(theta0, omega, graph, f, alpha, 10.0, 1e-3);
  double worst = 0.0;
  const Configuration& Xf = traj.final_state();
  for (int i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(wrapped_angle_diff(std::arg(Xf[i].entries()(0, 0)),
                                                        theta_ref[i])));
  rec.check("u1_frustrated_vs_kuramoto_sakaguchi", worst, "<=", 1e-5);
  return rec.take();
}

std::vector<CheckResult> criterion_bounds(std::uint64_t seed) {
  Recorder rec(12);
  Rng rng(seed);
  const int n = 5, d = 3;
  const WeightedGraph graph = WeightedGraph::complete(n);
  const CouplingSeries f = CouplingSeries::identity();
  const double bound = drift_bound(graph, 2.0 * std::sqrt(2.0));
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const Configuration X = random_so_configuration(n, d, 1.0, rng);
    worst = std::max(worst, coupling_drift(X, graph, f).max_norm());
  }
  rec.check("coupling_drift_l2_linf_vs_bound", worst, "<=", bound);
  const AlgebraElement W = random_so_algebra(d, 1.0, rng);
  std::vector<AlgebraElement> bad(static_cast<std::size_t>(n), W);
  rec.check_bool("zero_sum_rejects_nonzero_sum", !zero_sum_check(ForcingVector(bad), 1e-10));
  rec.check_bool("zero_sum_accepts_balanced",
                 zero_sum_check(random_zero_sum_forcing(n, d, GroupTag::SOd, 1.0, rng), 1e-10));
  return rec.take();
}

std::vector<CheckResult> criterion_structure(std::uint64_t seed) {
  Recorder rec(13);
  Rng rng(seed);
  const CouplingSeries f = CouplingSeries::identity();

  // row sums summed off-diagonal-first match the negated diagonal exactly
  auto block_row_defect = [](const JacobianMatrix& J) {
    double worst = 0.0;
    for (int a = 0; a < J.dim_g; ++a)
      for (int b = 0; b < J.dim_g; ++b)
        for (int i = 0; i < J.n; ++i) {
          double off = 0.0;
          for (int j = 0; j < J.n; ++j)
            if (j != i) off += J.matrix(a * J.n + i, b * J.n + j);
          worst = std::max(worst, std::abs(off + J.matrix(a * J.n + i, b * J.n + i)));
        }
    return worst;
  };
  auto nullspace_defect = [&rng](const JacobianMatrix& J) {
    RVec x(J.n * J.dim_g);
    for (int a = 0; a < J.dim_g; ++a) {
      const double c = rng.normal();
      for (int i = 0; i < J.n; ++i) x[a * J.n + i] = c;
    }
    return (J.matrix * x).cwiseAbs().maxCoeff();
  };

  const SoBasis basis3 = so_basis(3);
  const SoBasis basis4 = so_basis(4);
  const WeightedGraph g1 = random_connected_graph(6, rng);
  const JacobianMatrix J1 =
      jacobian_matrix(sync_configuration(6, GroupElement::identity(3, GroupTag::SOd)), g1, f,
                      basis3);
  const WeightedGraph g2 = circulant({8, {1.0, 0.5}});
  const JacobianMatrix J2 =
      jacobian_matrix(twist_configuration(single_spec(8, 4, 1)), g2, f, basis4);
  const RVec ang = (RVec(2) << 2.0 * kPi / 9.0, 0.0).finished();
  const RVec ang2 = (RVec(2) << 0.0, 2.0 * kPi / 9.0).finished();
  const FrustrationPair fr{canonical_twist(ang, 4), canonical_twist(ang2, 4)};
  const JacobianMatrix J3 = frustrated_linearization(
      sync_configuration(5, GroupElement::identity(4, GroupTag::SOd)), circulant({5, {1.0}}), f,
      fr, basis4);

  rec.check("zero_row_sum_defect",
            std::max({block_row_defect(J1), block_row_defect(J2), block_row_defect(J3)}), "==",
            0.0);
  rec.check("constant_coordinate_nullspace",
            std::max({nullspace_defect(J1), nullspace_defect(J2), nullspace_defect(J3)}), "<=",
            1e-12);

  // drift stays repaired along a perturbed-twist trajectory
  Rng rng2(seed + 1);
  Configuration X0 = twist_configuration(single_spec(10, 3, 1));
  std::vector<GroupElement> perturbed;
  for (int i = 0; i < X0.size(); ++i) {
    const AlgebraElement Q = random_so_algebra(3, 0.05, rng2);
    perturbed.emplace_back(Mat(X0[i].entries() * exp_map(Q.entries())), GroupTag::SOd);
  }
  Flow flow{circulant({10, {1.0}}), f, ForcingVector::zero(10, 3, GroupTag::SOd), std::nullopt};
  IntegrateOptions opts;
  opts.store_every = 10;
  const Trajectory traj = integrate(Configuration(perturbed), flow, 20.0, opts);
  rec.check("trajectory_group_drift", traj.max_drift(), "<=", 1e-9);
  return rec.take();
}

}  // namespace

int num_criteria() { return 13; }

std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed) {
  switch (criterion) {
    case 1: return criterion_classical(seed);
    case 2: return criterion_single_spectra(seed);
    case 3: return criterion_double_spectra(seed);
    case 4: return criterion_instability_certificates(seed);
    case 5: return criterion_divisibility(seed);
    case 6: return criterion_rho_star(seed);
    case 7: return criterion_alpha_star(seed);
    case 8: return criterion_sync_stability(seed);
    case 9: return criterion_near_sync(seed);
    case 10: return criterion_twist_flip(seed);
    case 11: return criterion_frustration(seed);
    case 12: return criterion_bounds(seed);
    case 13: return criterion_structure(seed);
    default: throw DomainError("run_criterion: criterion out of range");
  }
}

std::vector<std::string> verify_suites() {
  return {"classical", "spectra", "thresholds", "sync", "twistflip", "frustration",
          "bounds", "structure", "all"};
}

bool is_verify_suite(const std::string& name) {
  for (const auto& s : verify_suites())
    if (s == name) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  std::vector<int> ids;
  if (name == "classical") ids = {1};
  else if (name == "spectra") ids = {2, 3};
  else if (name == "thresholds") ids = {4, 5, 6, 7};
  else if (name == "sync") ids = {8, 9};
  else if (name == "twistflip") ids = {10};
  else if (name == "frustration") ids = {11};
  else if (name == "bounds") ids = {12};
  else if (name == "structure") ids = {13};
  else if (name == "all") {
    for (int k = 1; k <= num_criteria(); ++k) ids.push_back(k);
  } else {
    throw DomainError("run_suite: unknown suite '" + name + "'");
  }
  std::vector<CheckResult> out;
  for (int k : ids) {
    auto r = run_criterion(k, seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks, std::uint64_t seed) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"criterion", c.criterion},
                   {"name", c.name},
                   {"pass", c.pass},
                   {"measured", c.measured},
                   {"threshold", c.threshold},
                   {"relation", c.relation},
                   {"seconds", c.seconds}});
  }
  return nlohmann::json{{"seed", seed}, {"pass", all_passed(checks)}, {"checks", arr}};
}

}  // namespace qk
