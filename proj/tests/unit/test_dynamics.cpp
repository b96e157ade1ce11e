#include <doctest.h>

#include <numbers>

#include "qk/dynamics.hpp"
#include "qk/random.hpp"
#include "qk/solutions.hpp"

using namespace qk;

namespace {
constexpr double kPi = std::numbers::pi;

Configuration u1_config(const RVec& theta) {
  std::vector<GroupElement> e;
  for (int i = 0; i < theta.size(); ++i) e.push_back(GroupElement::u1(theta[i]));
  return Configuration(std::move(e));
}

ForcingVector u1_forcing(const RVec& w) {
  std::vector<AlgebraElement> e;
  for (int i = 0; i < w.size(); ++i) e.push_back(AlgebraElement::u1(w[i]));
  return ForcingVector(std::move(e));
}
}  // namespace

TEST_CASE("coupling drift vanishes on constant configurations") {
  Rng rng(2);
  const GroupElement Z = random_so_group(4, 1.0, rng);
  const Configuration X = sync_configuration(6, Z);
  const WeightedGraph g = random_connected_graph(6, rng);
  const CouplingSeries f({1.0, 0.4});
  CHECK(coupling_drift(X, g, f).max_norm() < 1e-15);
}

TEST_CASE("two-node SO(2) drift matches the sine formula") {
  RVec ang(1);
  ang << 0.6;
  const Configuration X({GroupElement::identity(2, GroupTag::SOd), canonical_twist(ang, 2)});
  const WeightedGraph g(2, (RMat(2, 2) << 0, 1, 1, 0).finished());
  const ForcingVector F = coupling_drift(X, g, CouplingSeries::identity());
  // F_1 = (1/2)(Tw(phi) - Tw(-phi)) = -sin(phi) M12 with M12 = +1 at (0,1)
  CHECK(F[0].real_entries()(0, 1) == doctest::Approx(-std::sin(0.6)));
  CHECK(F[0].real_entries()(1, 0) == doctest::Approx(std::sin(0.6)));
  CHECK((F[1].entries() + F[0].entries()).norm() < 1e-16);
}

TEST_CASE("qk rhs: decoupled graph returns the forcing, sync returns zero") {
  Rng rng(4);
  const int n = 5, d = 3;
  const ForcingVector omega = random_zero_sum_forcing(n, d, GroupTag::SOd, 1.0, rng);
  const Configuration X = random_so_configuration(n, d, 1.0, rng);
  const ForcingVector rhs = qk_rhs(X, omega, WeightedGraph::empty(n), CouplingSeries::identity());
  for (int i = 0; i < n; ++i) CHECK((rhs[i].entries() - omega[i].entries()).norm() == 0.0);

  const Configuration sync = sync_configuration(n, GroupElement::identity(d, GroupTag::SOd));
  CHECK(qk_rhs(sync, ForcingVector::zero(n, d, GroupTag::SOd), WeightedGraph::complete(n),
               CouplingSeries::identity())
            .max_norm() == 0.0);
}

TEST_CASE("u1 rhs reproduces the classical phase model") {
  Rng rng(6);
  const int n = 6;
  const WeightedGraph g = circulant({n, {1.0, 0.7}});
  const CouplingSeries f({1.0, -0.3, 0.2});
  RVec theta(n), w(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = rng.uniform(0.0, 2.0 * kPi);
    w[i] = rng.normal();
  }
  w.array() -= w.mean();
  const ForcingVector rhs = qk_rhs(u1_config(theta), u1_forcing(w), g, f);
  const RVec ref = classical_rhs(theta, w, g, f, 0.0);
  for (int i = 0; i < n; ++i)
    CHECK(rhs[i].entries()(0, 0).imag() == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("frustrated rhs: identity pair reduces to the plain flow") {
  Rng rng(8);
  const int n = 4, d = 3;
  const WeightedGraph g = WeightedGraph::complete(n);
  const CouplingSeries f({1.0, 0.5});
  const Configuration X = random_so_configuration(n, d, 0.9, rng);
  const ForcingVector omega = random_zero_sum_forcing(n, d, GroupTag::SOd, 0.5, rng);
  const ForcingVector a = qk_rhs(X, omega, g, f);
  const ForcingVector b =
      frustrated_rhs(X, omega, g, f, FrustrationPair::identity(d, GroupTag::SOd));
  for (int i = 0; i < n; ++i) CHECK((a[i].entries() - b[i].entries()).norm() < 1e-13);
}

TEST_CASE("frustrated rhs on U(1) is the phase-lag model") {
  Rng rng(10);
  const int n = 5;
  const WeightedGraph g = circulant({n, {1.0}});
  const CouplingSeries f = CouplingSeries::identity();
  const double alpha = 0.8;
  RVec theta(n), w(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = rng.uniform(0.0, 2.0 * kPi);
    w[i] = rng.normal();
  }
  const FrustrationPair fr{GroupElement::u1(alpha / 2.0), GroupElement::u1(-alpha / 2.0)};
  const ForcingVector rhs = frustrated_rhs(u1_config(theta), u1_forcing(w), g, f, fr);
  const RVec ref = classical_rhs(theta, w, g, f, alpha);
  for (int i = 0; i < n; ++i)
    CHECK(rhs[i].entries()(0, 0).imag() == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("frustrated rhs vanishes at sync with zero forcing") {
  Rng rng(12);
  const int n = 4, d = 4;
  const GroupElement A = random_so_group(d, 1.0, rng);
  const Configuration X = sync_configuration(n, random_so_group(d, 1.0, rng));
  const FrustrationPair fr{A, A};
  CHECK(frustrated_rhs(X, ForcingVector::zero(n, d, GroupTag::SOd), WeightedGraph::complete(n),
                       CouplingSeries::identity(), fr)
            .max_norm() < 1e-15);
  // holds for any pair, not just A = B
  const FrustrationPair fr2{random_so_group(d, 1.0, rng), random_so_group(d, 1.0, rng)};
  CHECK(frustrated_rhs(X, ForcingVector::zero(n, d, GroupTag::SOd), WeightedGraph::complete(n),
                       CouplingSeries::identity(), fr2)
            .max_norm() < 1e-14);
}

TEST_CASE("right invariance and closure of the drift") {
  Rng rng(14);
  const int n = 5, d = 4;
  const WeightedGraph g = random_connected_graph(n, rng);
  const CouplingSeries f({1.0, 0.2, 0.1});
  const Configuration X = random_so_configuration(n, d, 1.0, rng);
  const GroupElement Z = random_so_group(d, 1.0, rng);
  std::vector<GroupElement> shifted;
  for (int i = 0; i < n; ++i)
    shifted.emplace_back(Mat(X[i].entries() * Z.entries()), GroupTag::SOd);
  const ForcingVector Fa = coupling_drift(X, g, f);
  const ForcingVector Fb = coupling_drift(Configuration(shifted), g, f);
  Mat total = Mat::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    CHECK((Fa[i].entries() - Fb[i].entries()).norm() < 1e-12);
    CHECK(algebra_membership(Fa[i].entries(), GroupTag::SOd, 1e-12));
    total += Fa[i].entries();
  }
  CHECK(total.norm() < 1e-13);  // edge terms enter in cancelling pairs
}

TEST_CASE("integrator: decoupled flow is the matrix exponential") {
  const int n = 3, d = 3;
  Rng rng(16);
  const AlgebraElement W = random_so_algebra(d, 1.0, rng);
  std::vector<AlgebraElement> omega_elems(n, W);
  const Configuration X0 = random_so_configuration(n, d, 1.0, rng);
  Flow flow{WeightedGraph::empty(n), CouplingSeries::identity(),
            ForcingVector(omega_elems), std::nullopt};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.store_every = 1 << 30;
  const Trajectory traj = integrate(X0, flow, 1.0, opts);
  const Mat expected = exp_map(W.entries());
  for (int i = 0; i < n; ++i)
    CHECK((traj.final_state()[i].entries() - expected * X0[i].entries()).norm() < 1e-6);
}

TEST_CASE("integrator: U(1) ring matches a scalar reference") {
  Rng rng(18);
  const int n = 3;
  const WeightedGraph g = circulant({n, {1.0}});
  const CouplingSeries f = CouplingSeries::identity();
  RVec theta(n), w(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = rng.uniform(0.0, 2.0 * kPi);
    w[i] = rng.normal();
  }
  w.array() -= w.mean();
  Flow flow{g, f, u1_forcing(w), std::nullopt};
  IntegrateOptions opts;
  opts.step = 1e-3;
  opts.store_every = 1 << 30;
  const Trajectory traj = integrate(u1_config(theta), flow, 5.0, opts);
  const RVec ref = integrate_classical(theta, w, g, f, 0.0, 5.0, 1e-3);
  for (int i = 0; i < n; ++i) {
    const double got = std::arg(traj.final_state()[i].entries()(0, 0));
    CHECK(std::abs(std::remainder(got - ref[i], 2.0 * kPi)) < 1e-6);
  }
}

TEST_CASE("integrator convergence is second order") {
  Rng rng(20);
  const int n = 4, d = 3;
  const WeightedGraph g = WeightedGraph::complete(n);
  const CouplingSeries f = CouplingSeries::identity();
  const ForcingVector omega = random_zero_sum_forcing(n, d, GroupTag::SOd, 0.8, rng);
  const Configuration X0 = random_so_configuration(n, d, 0.7, rng);
  Flow flow{g, f, omega, std::nullopt};

  auto terminal = [&](double h) {
    IntegrateOptions opts;
    opts.step = h;
    opts.store_every = 1 << 30;
    return integrate(X0, flow, 2.0, opts).final_state();
  };
  const Configuration fine = terminal(1e-4);
  auto err = [&](const Configuration& X) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) e = std::max(e, (X[i].entries() - fine[i].entries()).norm());
    return e;
  };
  const double e1 = err(terminal(4e-2));
  const double e2 = err(terminal(2e-2));
  CHECK(e1 / e2 > 3.4);  // order >= 2 gives ratio about 4
  CHECK(e1 / e2 < 4.6);

  // Lie-Euler is first order
  auto terminal_euler = [&](double h) {
    IntegrateOptions opts;
    opts.step = h;
    opts.scheme = Scheme::LieEuler;
    opts.store_every = 1 << 30;
    return integrate(X0, flow, 2.0, opts).final_state();
  };
  const double f1 = err(terminal_euler(4e-2));
  const double f2 = err(terminal_euler(2e-2));
  CHECK(f1 / f2 > 1.7);
  CHECK(f1 / f2 < 2.4);
}

TEST_CASE("integrator throws on blow-up for a noncompact generic flow") {
  // scalar multiplicative flow x' x^{-1} = 3: grows like e^{3t}
  Mat x0 = Mat::Constant(1, 1, 2.0);
  Mat w = Mat::Constant(1, 1, 3.0);
  const Configuration X0({GroupElement(x0, GroupTag::Generic)});
  Flow flow{WeightedGraph::empty(1), CouplingSeries::identity(),
            ForcingVector({AlgebraElement(w, GroupTag::Generic)}), std::nullopt};
  IntegrateOptions opts;
  opts.step = 1e-2;
  opts.store_every = 1 << 30;
  try {
    integrate(X0, flow, 20.0, opts);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    // x(t) = 2 e^{3t} crosses 1e8 near t = ln(5e7)/3
    CHECK(e.time == doctest::Approx(std::log(5e7) / 3.0).epsilon(0.01));
  }
}

TEST_CASE("classical rhs examples") {
  const WeightedGraph g(2, (RMat(2, 2) << 0, 0.8, 0.8, 0).finished());
  const CouplingSeries f = CouplingSeries::identity();
  RVec theta(2), w(2);
  theta << 0.0, 0.9;
  w.setZero();
  const RVec out = classical_rhs(theta, w, g, f, 0.0);
  CHECK(out[0] == doctest::Approx(0.8 * std::sin(0.9)));
  CHECK(out[1] == doctest::Approx(-0.8 * std::sin(0.9)));

  RVec eq(3), zero(3);
  eq.setConstant(1.3);
  zero.setZero();
  CHECK(classical_rhs(eq, zero, circulant({3, {1.0}}), f, 0.0).norm() == 0.0);
  // frustrated constant keeps equal phases stationary
  CHECK(classical_rhs(eq, zero, circulant({3, {1.0}}), f, 0.7).norm() < 1e-15);
}

TEST_CASE("perturbed sync relaxes monotonically after a transient") {
  Rng rng(33);
  const int n = 6, d = 3;
  const WeightedGraph g = circulant({n, {1.0}});
  std::vector<GroupElement> elems;
  for (int i = 0; i < n; ++i)
    elems.push_back(exp_map(random_so_algebra(d, 0.05, rng)));
  Flow flow{g, CouplingSeries::identity(), ForcingVector::zero(n, d, GroupTag::SOd),
            std::nullopt};
  IntegrateOptions opts;
  opts.store_every = 50;
  const Trajectory traj = integrate(Configuration(elems), flow, 20.0, opts);
  std::vector<double> dist;
  for (const auto& X : traj.states) dist.push_back(sync_class_distance(X));
  for (std::size_t k = dist.size() / 5; k + 1 < dist.size(); ++k)
    CHECK(dist[k + 1] <= dist[k] + 1e-12);
  CHECK(dist.back() < 0.05 * dist.front());
}

TEST_CASE("frustrated drift stays in the algebra for random pairs") {
  Rng rng(35);
  const int n = 5, d = 4;
  const WeightedGraph g = WeightedGraph::complete(n);
  const CouplingSeries f({1.0, -0.4, 0.2});
  for (int trial = 0; trial < 10; ++trial) {
    const FrustrationPair fr{random_so_group(d, 1.0, rng), random_so_group(d, 1.0, rng)};
    const Configuration X = random_so_configuration(n, d, 1.0, rng);
    const ForcingVector F =
        frustrated_rhs(X, ForcingVector::zero(n, d, GroupTag::SOd), g, f, fr);
    for (int i = 0; i < n; ++i)
      CHECK(algebra_membership(F[i].entries(), GroupTag::SOd, 1e-11));
  }
}
