#include <doctest.h>

#include <numbers>

#include "qk/linearization.hpp"
#include "qk/random.hpp"
#include "qk/solutions.hpp"
#include "qk/spectra.hpp"

using namespace qk;

namespace {
constexpr double kPi = std::numbers::pi;

double fd_multiset_diff(const TwistSpectrum& sp, const std::vector<double>& bands, int n, int d,
                        const std::vector<int>& winding) {
  TwistSpec spec;
  spec.n = n;
  spec.d = d;
  spec.winding.assign(static_cast<std::size_t>(d / 2), 0);
  for (std::size_t q = 0; q < winding.size(); ++q) spec.winding[q] = winding[q];
  const Configuration Y = twist_configuration(spec);
  const Flow flow{circulant({n, bands}), CouplingSeries::identity(),
                  ForcingVector::zero(n, d, GroupTag::SOd), std::nullopt};
  const Eigen::VectorXcd ev = jacobian_eigenvalues(fd_jacobian_oracle(Y, flow, 1e-5));
  std::vector<double> got(static_cast<std::size_t>(ev.size()));
  for (int k = 0; k < ev.size(); ++k) got[static_cast<std::size_t>(k)] = ev[k].real();
  std::sort(got.begin(), got.end());
  const std::vector<double> want = sp.expanded_sorted();
  REQUIRE(got.size() == want.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k)
    worst = std::max(worst, std::abs(got[k] - want[k]));
  return worst;
}
}  // namespace

TEST_CASE("single twist closed forms: structural zeros and the corrected n=6 value") {
  const std::vector<double> ring{1.0};
  for (int l = 0; l < 4; ++l) CHECK(lambda_eig(ring, 8, l, 0) == 0.0);

  // n=6, K=1, l=1: the lambda block eigenvalue doubles the bare cosine
  // product (the mu value is as printed); both cross-checked against the fd
  // oracle below.
  CHECK(lambda_eig(ring, 6, 1, 1) == doctest::Approx(-0.5));
  CHECK(mu_eig(ring, 6, 1, 1) == doctest::Approx(-1.5));
  CHECK(fd_multiset_diff(single_twist_eigs(ring, 6, 3, 1), ring, 6, 3, {1}) < 1e-6);

  // mu_{2,n-1} is positive: two-twists are never stable
  for (int n = 8; n <= 14; ++n) CHECK(mu_eig(ring, n, 2, n - 1) > 0.0);
}

TEST_CASE("single twist multiset matches the fd oracle on random circulants") {
  Rng rng(51);
  for (int n : {5, 8}) {
    for (int d : {3, 4}) {
      const auto bands = random_bands(2, rng);
      const double diff = fd_multiset_diff(single_twist_eigs(bands, n, d, 1), bands, n, d, {1});
      CHECK(diff < 1e-6);
    }
  }
}

TEST_CASE("single twist multiplicities fill d(d-1)/2 per mode index") {
  for (int d : {2, 3, 4, 5, 6}) {
    const TwistSpectrum sp = single_twist_eigs({1.0}, 7, d, 1);
    for (int m = 0; m < 7; ++m) {
      int total = 0;
      for (const auto& e : sp.entries)
        if (e.m == m) total += e.multiplicity;
      CHECK(total == d * (d - 1) / 2);
    }
  }
}

TEST_CASE("double twist: degenerate windings collapse to laplacian values") {
  const std::vector<double> bands{0.8, 0.3};
  const int n = 9;
  const TwistSpectrum sp = double_twist_eigs(bands, n, 4, 0, 0);
  for (const auto& e : sp.entries) {
    CHECK(e.value == doctest::Approx(nu_eig(bands, n, e.m)).epsilon(1e-12));
  }
}

TEST_CASE("double twist kappa certificate and oracle agreement") {
  const std::vector<double> ring{1.0};
  for (int n = 8; n <= 14; ++n)
    CHECK(kappa_eig(ring, n, 1, 1, n - 1, +1) ==
          doctest::Approx(2.0 * (1.0 - std::cos(2.0 * kPi / n))));

  CHECK(fd_multiset_diff(double_twist_eigs(ring, 8, 4, 1, 1), ring, 8, 4, {1, 1}) < 1e-6);
  CHECK(fd_multiset_diff(double_twist_eigs(ring, 8, 5, 1, 2), ring, 8, 5, {1, 2}) < 1e-6);
  CHECK_THROWS_AS(double_twist_eigs(ring, 8, 3, 1, 1), DomainError);
}

TEST_CASE("higher twist kappa: symmetry and reduction") {
  const std::vector<double> bands{1.0, 0.5};
  const int n = 11;
  for (int m = 0; m < n; ++m) {
    // (la, lb, m) -> (-la, -lb, -m) by cosine parity
    CHECK(kappa_eig(bands, n, 2, 3, m, +1) ==
          doctest::Approx(kappa_eig(bands, n, -2, -3, (n - m) % n, +1)));
  }
  const auto hk = higher_twist_kappa(bands, n, 1, 1);
  const TwistSpectrum dt = double_twist_eigs(bands, n, 4, 1, 1);
  for (const auto& e : hk) {
    bool found = false;
    for (const auto& f : dt.entries)
      if (f.family == e.family && f.m == e.m && std::abs(f.value - e.value) < 1e-14)
        found = true;
    CHECK(found);
  }
  CHECK_THROWS_AS(higher_twist_kappa(bands, n, 0, 1), DomainError);
}

TEST_CASE("family symmetries") {
  const std::vector<double> bands{0.7, 0.2, 0.4};
  const int n = 12;
  for (int m = 1; m < n; ++m) {
    CHECK(nu_eig(bands, n, m) == doctest::Approx(nu_eig(bands, n, n - m)));
    CHECK(lambda_eig(bands, n, 2, m) == doctest::Approx(lambda_eig(bands, n, -2, m)));
    CHECK(mu_eig(bands, n, 2, m) == doctest::Approx(mu_eig(bands, n, -2, n - m)));
  }
}

TEST_CASE("mu band function sign pattern") {
  // periodic with period n/k; negative on (0, n/k - l), positive on
  // (n/k - l, n/k), sampled on a fine grid via the single-band mu
  const int n = 60;
  for (int k : {1, 2, 3}) {
    for (int l : {1, 2}) {
      if (l >= n / k) continue;
      std::vector<double> bands(static_cast<std::size_t>(k), 0.0);
      bands.back() = 1.0;
      auto f_kl = [&](double x) {
        return std::cos(2.0 * kPi * k * (l + x) / n) + std::cos(2.0 * kPi * k * x / n) -
               std::cos(2.0 * kPi * k * l / n) - 1.0;
      };
      const double period = static_cast<double>(n) / k;
      for (double x = 0.05; x < period - 1e-9; x += 0.05) {
        if (x < period - l - 0.02)
          CHECK(f_kl(x) < 1e-12);
        else if (x > period - l + 0.02)
          CHECK(f_kl(x) > -1e-12);
      }
    }
  }
}

TEST_CASE("support of one-twists across graph families") {
  for (int n : {6, 9, 13, 20})
    CHECK(supports_one_twist({1.0}, n, 3).supports);

  CHECK(supports_one_twist({0.0, 0.0, 1.0}, 12, 3).supports);
  const OneTwistSupport s13 = supports_one_twist({0.0, 0.0, 1.0}, 13, 3);
  CHECK_FALSE(s13.supports);
  CHECK(s13.witness.family == EigFamily::Mu);
  CHECK(s13.witness.value > 0.0);

  // K = 2, odd n: support flips at the critical ratio
  const double r9 = rho_star(9);
  CHECK(supports_one_twist({r9 + 1e-3, 1.0}, 9, 3).supports);
  CHECK_FALSE(supports_one_twist({r9 - 1e-3, 1.0}, 9, 3).supports);
}

TEST_CASE("g_threshold pins the mu peak at zero") {
  // K = 3, n = 13: only the outer band destabilizes, so the threshold is
  // positive and the support flips across it
  const int K = 3, n = 13;
  const std::vector<double> tail{0.0, 1.0};
  const double g1 = g_threshold(K, n, tail);
  CHECK(g1 > 0.0);
  CHECK(supports_one_twist({g1 + 1e-3, tail[0], tail[1]}, n, 3).supports);
  CHECK_FALSE(supports_one_twist({g1 - 1e-3, tail[0], tail[1]}, n, 3).supports);
  double peak = -1e9;
  for (int m = 0; m < n; ++m) peak = std::max(peak, mu_eig({g1, tail[0], tail[1]}, n, 1, m));
  CHECK(std::abs(peak) < 1e-10);

  // with a strong next-nearest band the threshold can sit at or below zero:
  // gamma_1 = 0 already supports 1-twists on n = 16
  CHECK(g_threshold(3, 16, {1.0, 1.0}) <= 0.0);
  CHECK(supports_one_twist({0.0, 1.0, 1.0}, 16, 3).supports);

  // K = 2 reduces to the rho ratio, zero tails need nothing
  CHECK(g_threshold(2, 9, {2.0}) == doctest::Approx(2.0 * rho_star(9)));
  CHECK(g_threshold(3, 16, {0.0, 0.0}) <= 0.0);
  CHECK_THROWS_AS(g_threshold(4, 15, std::vector<double>{1.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("rho_star: parity, asymptotics, minimizing mode") {
  CHECK(rho_star(10) == 0.0);
  CHECK(rho_star(64) == 0.0);
  for (int n : {9, 21, 101}) CHECK(rho_star(n) > 0.0);
  const double r101 = rho_star(101);
  CHECK(std::abs(r101 * 101.0 * 101.0 / (kPi * kPi) - 1.0) < 0.05);
  CHECK(rho_star_argmax(101) == 50);  // n = 2k+1 binds at m = k
  CHECK(rho_star_argmax(9) == 4);
}

TEST_CASE("twist integrals: closed forms against quadrature") {
  auto simpson_I = [](double alpha, int m) {
    const int N = 4000;
    const double b = 2.0 * kPi * alpha, h = b / N;
    double s = 0.0;
    auto f = [&](double x) { return std::cos(x) * (std::cos(m * x) - 1.0); };
    for (int k = 0; k < N; k += 2) s += f(k * h) + 4.0 * f((k + 1) * h) + f((k + 2) * h);
    return s * h / 3.0;
  };
  auto simpson_J = [](double alpha, int m) {
    const int N = 4000;
    const double b = 2.0 * kPi * alpha, h = b / N;
    double s = 0.0;
    auto f = [&](double x) {
      return std::cos((m + 1) * x) + std::cos(m * x) - std::cos(x) - 1.0;
    };
    for (int k = 0; k < N; k += 2) s += f(k * h) + 4.0 * f((k + 1) * h) + f((k + 2) * h);
    return s * h / 3.0;
  };
  for (double alpha : {0.15, 0.34, 0.5}) {
    for (int m = 1; m <= 6; ++m) {
      const TwistIntegrals ti = twist_integrals(alpha, m);
      CHECK(ti.I == doctest::Approx(simpson_I(alpha, m)).epsilon(1e-9));
      CHECK(ti.J == doctest::Approx(simpson_J(alpha, m)).epsilon(1e-9));
    }
  }
  CHECK(twist_integrals(0.3, 0).J == 0.0);
  CHECK(twist_integrals(0.3, -1).J == 0.0);
  // printed closed form of I_1 and the odd-m quarter value
  const double a = 0.27;
  CHECK(twist_integrals(a, 1).I ==
        doctest::Approx(kPi * a - std::sin(2 * kPi * a) + 0.25 * std::sin(4 * kPi * a)));
  for (int k = 1; k < 5; ++k)  // odd m >= 3; I_1(1/4) is the special closed form
    CHECK(twist_integrals(0.25, 2 * k + 1).I == doctest::Approx(-1.0));
}

TEST_CASE("mu values are Riemann sums of J") {
  // (n/(2 pi)) * Delta-x weighting: mu_{1,m} on the alpha graph approximates J_m
  const double alpha = 0.3;
  const int m = 2;
  double prev = 1e9;
  for (int n : {200, 400, 800}) {
    const auto bands = alpha_graph_bands(alpha, n);
    const double riemann = mu_eig(bands, n, 1, m) * (2.0 * kPi / n);
    const double err = std::abs(riemann - twist_integrals(alpha, m).J);
    CHECK(err < prev + 1e-12);
    prev = err;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("alpha_star root and the support transition it predicts") {
  const double as = alpha_star(1e-12);
  CHECK(std::abs(as - 0.340461) < 1e-5);
  const double I03 = twist_integrals(0.3, 1).I;
  const double I04 = twist_integrals(0.4, 1).I;
  CHECK(I03 < 0.0);
  CHECK(I04 > 0.0);
  CHECK(supports_one_twist(alpha_graph_bands(0.30, 400), 400, 3).supports);
  CHECK_FALSE(supports_one_twist(alpha_graph_bands(0.36, 400), 400, 3).supports);
}

TEST_CASE("composite real forms of complex spectra") {
  Rng rng(53);
  const int n = 6;
  // A symmetric, B skew: [[A, -B], [B, A]] has the spectrum of A + iB, doubled
  RMat A(n, n), B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A(i, j) = rng.normal();
      B(i, j) = rng.normal();
    }
  A = RMat(0.5 * (A + A.transpose()));
  B = RMat(0.5 * (B - B.transpose()));
  RMat C(2 * n, 2 * n);
  C << A, -B, B, A;
  Eigen::SelfAdjointEigenSolver<RMat> esC(C);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esH(
      Mat(A.cast<std::complex<double>>() +
          std::complex<double>(0, 1) * B.cast<std::complex<double>>()));
  for (int k = 0; k < n; ++k) {
    CHECK(esC.eigenvalues()[2 * k] == doctest::Approx(esH.eigenvalues()[k]).epsilon(1e-10));
    CHECK(esC.eigenvalues()[2 * k + 1] == doctest::Approx(esH.eigenvalues()[k]).epsilon(1e-10));
  }

  // A symmetric, B and C2 skew: the 4n x 4n composite carries A + i(B +- C2)
  RMat C2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) C2(i, j) = rng.normal();
  C2 = RMat(0.5 * (C2 - C2.transpose()));
  RMat Q(4 * n, 4 * n);
  const RMat Z = RMat::Zero(n, n);
  Q << A, B, C2, Z,
      -B, A, Z, C2,
      -C2, Z, A, B,
      Z, -C2, -B, A;
  Eigen::SelfAdjointEigenSolver<RMat> esQ(Q);
  std::vector<double> expect;
  for (int sign : {+1, -1}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        Mat(A.cast<std::complex<double>>() +
            std::complex<double>(0, 1) *
                RMat(B + sign * C2).cast<std::complex<double>>()));
    for (int k = 0; k < n; ++k) {
      expect.push_back(es.eigenvalues()[k]);
      expect.push_back(es.eigenvalues()[k]);
    }
  }
  std::sort(expect.begin(), expect.end());
  for (int k = 0; k < 4 * n; ++k)
    CHECK(esQ.eigenvalues()[k] ==
          doctest::Approx(expect[static_cast<std::size_t>(k)]).epsilon(1e-10));
}

TEST_CASE("spectra input validation") {
  CHECK_THROWS_AS(single_twist_eigs({}, 6, 3, 1), DomainError);
  CHECK_THROWS_AS(single_twist_eigs({0.0}, 6, 3, 1), DomainError);
  CHECK_THROWS_AS(single_twist_eigs({1.0, 1.0, 1.0, 1.0}, 6, 3, 1), DomainError);
  CHECK_THROWS_AS(rho_star(4), DomainError);
  CHECK_THROWS_AS(twist_integrals(0.7, 1), DomainError);
  CHECK_THROWS_AS(alpha_star(1e-14), DomainError);
}

TEST_CASE("kappa certifies instability for any twist with a winding above one") {
  const std::vector<double> bands{1.0, 0.6};
  for (auto [la, lb] : {std::pair{2, 1}, std::pair{1, 3}, std::pair{2, 3}}) {
    for (int n : {9, 12, 17}) {
      double best = -1e18;
      for (const auto& e : higher_twist_kappa(bands, n, la, lb))
        best = std::max(best, e.value);
      // also the mu family of the larger winding is positive somewhere
      double mu_best = -1e18;
      for (int m = 0; m < n; ++m)
        mu_best = std::max(mu_best, mu_eig(bands, n, std::max(la, lb), m));
      CHECK(std::max(best, mu_best) > 1e-6);
    }
  }
}

TEST_CASE("closed forms honor the single-edge antipodal band") {
  // strict K = n/2 on even n: each vertex has one neighbor
  const int n = 8;
  const std::vector<double> bands{0.0, 0.0, 0.0, 1.0};
  const TwistSpectrum sp = single_twist_eigs(bands, n, 3, 1);
  TwistSpec spec{n, 3, {1}};
  const Configuration Y = twist_configuration(spec);
  const Flow flow{circulant({n, bands}), CouplingSeries::identity(),
                  ForcingVector::zero(n, 3, GroupTag::SOd), std::nullopt};
  const Eigen::VectorXcd ev = jacobian_eigenvalues(fd_jacobian_oracle(Y, flow, 1e-5));
  std::vector<double> got(static_cast<std::size_t>(ev.size()));
  for (int k = 0; k < ev.size(); ++k) got[static_cast<std::size_t>(k)] = ev[k].real();
  std::sort(got.begin(), got.end());
  const auto want = sp.expanded_sorted();
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < got.size(); ++k)
    CHECK(std::abs(got[k] - want[k]) < 1e-6);
}

TEST_CASE("g_threshold property: the boundary separates support from instability") {
  Rng rng(55);
  int tested = 0;
  while (tested < 12) {
    const int n = 9 + static_cast<int>(rng.uniform(0.0, 12.0));
    const int K = 2 + static_cast<int>(rng.uniform(0.0, 2.0));
    if (!(K < 0.25 * n)) continue;
    std::vector<double> tail;
    for (int k = 2; k <= K; ++k) tail.push_back(rng.uniform(0.0, 1.0));
    const double g1 = g_threshold(K, n, tail);
    std::vector<double> above{std::max(g1, 0.0) + 1e-3};
    above.insert(above.end(), tail.begin(), tail.end());
    CHECK(supports_one_twist(above, n, 3).supports);
    if (g1 > 2e-3) {
      std::vector<double> below{g1 - 1e-3};
      below.insert(below.end(), tail.begin(), tail.end());
      CHECK_FALSE(supports_one_twist(below, n, 3).supports);
      // the mu family peaks at zero exactly on the boundary
      std::vector<double> at{g1};
      at.insert(at.end(), tail.begin(), tail.end());
      double peak = -1e18;
      for (int m = 0; m < n; ++m) peak = std::max(peak, mu_eig(at, n, 1, m));
      CHECK(std::abs(peak) < 1e-10);
    }
    ++tested;
  }
}
