#include "qk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qk {

namespace {

constexpr double kPi = std::numbers::pi;

double cosn(int n, long long arg) {
  return std::cos(2.0 * kPi * static_cast<double>(arg) / static_cast<double>(n));
}

void check_bands(const std::vector<double>& bands, int n, const char* where) {
  if (n < 2) throw DomainError(std::string(where) + ": n must be >= 2");
  if (bands.empty()) throw DomainError(std::string(where) + ": empty band list");
  if (static_cast<int>(bands.size()) > n / 2)
    throw DomainError(std::string(where) + ": bandwidth exceeds floor(n/2)");
  bool positive = false;
  for (double g : bands) {
    if (g < 0.0) throw DomainError(std::string(where) + ": negative band weight");
    if (g > 0.0) positive = true;
  }
  if (!positive) throw DomainError(std::string(where) + ": all bands zero");
}

// the k = n/2 band (n even) is a single edge per vertex, so it enters every
// circulant eigenvalue once instead of twice
double band_factor(int k, int n) { return 2 * k == n ? 0.5 : 1.0; }

// mu-family coefficient of gamma_k at l = 1
double beta_coeff(int k, int m, int n) {
  return band_factor(k, n) *
         (cosn(n, static_cast<long long>(k) * (1 + m)) + cosn(n, static_cast<long long>(k) * m) -
          cosn(n, k) - 1.0);
}

}  // namespace

const char* family_name(EigFamily f) {
  switch (f) {
    case EigFamily::Lambda: return "lambda";
    case EigFamily::Mu: return "mu";
    case EigFamily::Nu: return "nu";
    case EigFamily::KappaPlus: return "kappa+";
    case EigFamily::KappaMinus: return "kappa-";
  }
  return "?";
}

std::vector<double> TwistSpectrum::expanded_sorted() const {
  std::vector<double> out;
  for (const auto& e : entries)
    out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
  std::sort(out.begin(), out.end());
  return out;
}

double TwistSpectrum::max_value() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& e : entries)
    if (e.multiplicity > 0) m = std::max(m, e.value);
  return m;
}

int TwistSpectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

double lambda_eig(const std::vector<double>& bands, int n, int l, int m) {
  double s = 0.0;
  for (std::size_t k1 = 1; k1 <= bands.size(); ++k1) {
    const int k = static_cast<int>(k1);
    s += band_factor(k, n) * bands[k1 - 1] * cosn(n, static_cast<long long>(k) * l) *
         (cosn(n, static_cast<long long>(k) * m) - 1.0);
  }
  return 2.0 * s;
}

double mu_eig(const std::vector<double>& bands, int n, int l, int m) {
  double s = 0.0;
  for (std::size_t k1 = 1; k1 <= bands.size(); ++k1) {
    const int k = static_cast<int>(k1);
    s += band_factor(k, n) * bands[k1 - 1] *
         (cosn(n, static_cast<long long>(k) * (l + m)) + cosn(n, static_cast<long long>(k) * m) -
          cosn(n, static_cast<long long>(k) * l) - 1.0);
  }
  return s;
}

double nu_eig(const std::vector<double>& bands, int n, int m) {
  double s = 0.0;
  for (std::size_t k1 = 1; k1 <= bands.size(); ++k1)
    s += band_factor(static_cast<int>(k1), n) * bands[k1 - 1] *
         (cosn(n, static_cast<long long>(k1) * m) - 1.0);
  return 2.0 * s;
}

double kappa_eig(const std::vector<double>& bands, int n, int la, int lb, int m, int sign) {
  double s = 0.0;
  for (std::size_t k1 = 1; k1 <= bands.size(); ++k1) {
    const int k = static_cast<int>(k1);
    s += band_factor(k, n) * bands[k1 - 1] *
         (cosn(n, static_cast<long long>(k) * (la + m)) +
          cosn(n, static_cast<long long>(k) * (sign * lb + m)) -
          cosn(n, static_cast<long long>(k) * la) - cosn(n, static_cast<long long>(k) * lb));
  }
  return s;
}

TwistSpectrum single_twist_eigs(const std::vector<double>& bands, int n, int d, int l) {
  check_bands(bands, n, "single_twist_eigs");
  if (d < 2) throw DomainError("single_twist_eigs: d must be >= 2");
  TwistSpectrum sp;
  sp.n = n;
  sp.d = d;
  const int mu_mult = 2 * (d - 2);
  const int nu_mult = (d - 2) * (d - 3) / 2;
  for (int m = 0; m < n; ++m) {
    sp.entries.push_back({EigFamily::Lambda, l, 0, m, lambda_eig(bands, n, l, m), 1});
    if (mu_mult > 0)
      sp.entries.push_back({EigFamily::Mu, l, 0, m, mu_eig(bands, n, l, m), mu_mult});
    if (nu_mult > 0) sp.entries.push_back({EigFamily::Nu, l, 0, m, nu_eig(bands, n, m), nu_mult});
  }
  return sp;
}

TwistSpectrum double_twist_eigs(const std::vector<double>& bands, int n, int d, int l1, int l2) {
  check_bands(bands, n, "double_twist_eigs");
  if (d < 4) throw DomainError("double_twist_eigs: d must be >= 4");
  TwistSpectrum sp;
  sp.n = n;
  sp.d = d;
  const int mu_mult = 2 * (d - 4);
  const int nu_mult = (d - 4) * (d - 5) / 2;
  for (int m = 0; m < n; ++m) {
    sp.entries.push_back({EigFamily::Lambda, l1, 0, m, lambda_eig(bands, n, l1, m), 1});
    sp.entries.push_back({EigFamily::Lambda, l2, 0, m, lambda_eig(bands, n, l2, m), 1});
    if (mu_mult > 0) {
      sp.entries.push_back({EigFamily::Mu, l1, 0, m, mu_eig(bands, n, l1, m), mu_mult});
      sp.entries.push_back({EigFamily::Mu, l2, 0, m, mu_eig(bands, n, l2, m), mu_mult});
    }
    if (nu_mult > 0) sp.entries.push_back({EigFamily::Nu, 0, 0, m, nu_eig(bands, n, m), nu_mult});
    // Each kappa list appears twice (the composite 4n x 4n block carries
    // A + i(B +- C) twice); multiplicity 1 as sometimes stated does not fill
    // d(d-1)/2 slots per m.
    sp.entries.push_back({EigFamily::KappaPlus, l1, l2, m, kappa_eig(bands, n, l1, l2, m, +1), 2});
    sp.entries.push_back({EigFamily::KappaMinus, l1, l2, m, kappa_eig(bands, n, l1, l2, m, -1), 2});
  }
  return sp;
}

std::vector<SpectrumEntry> higher_twist_kappa(const std::vector<double>& bands, int n, int la,
                                              int lb) {
  check_bands(bands, n, "higher_twist_kappa");
  if (la == 0 || lb == 0) throw DomainError("higher_twist_kappa: windings must be nonzero");
  std::vector<SpectrumEntry> out;
  for (int m = 0; m < n; ++m) {
    out.push_back({EigFamily::KappaPlus, la, lb, m, kappa_eig(bands, n, la, lb, m, +1), 2});
    out.push_back({EigFamily::KappaMinus, la, lb, m, kappa_eig(bands, n, la, lb, m, -1), 2});
  }
  return out;
}

OneTwistSupport supports_one_twist(const std::vector<double>& bands, int n, int d,
                                   double zero_tol) {
  const TwistSpectrum sp = single_twist_eigs(bands, n, d, 1);
  OneTwistSupport res;
  res.witness = sp.entries.front();
  for (const auto& e : sp.entries)
    if (e.multiplicity > 0 && e.value > res.witness.value) res.witness = e;
  res.supports = res.witness.value <= zero_tol;
  return res;
}

double g_threshold(int K, int n, const std::vector<double>& gamma_tail) {
  if (K < 1) throw DomainError("g_threshold: K must be >= 1");
  if (!(K < 0.25 * n)) throw DomainError("g_threshold: requires K < n/4");
  if (static_cast<int>(gamma_tail.size()) != K - 1)
    throw DimensionError("g_threshold: expected gamma_2..gamma_K");
  double best = 0.0;
  bool first = true;
  for (int m = 1; m <= n - 2; ++m) {
    const double b1 = beta_coeff(1, m, n);  // strictly negative away from m = 0, n-1
    double tail = 0.0;
    for (int k = 2; k <= K; ++k)
      tail += gamma_tail[static_cast<std::size_t>(k - 2)] * beta_coeff(k, m, n);
    const double need = -tail / b1;
    if (first || need > best) {
      best = need;
      first = false;
    }
  }
  return best;
}

double rho_star(int n) {
  if (n < 5) throw DomainError("rho_star: n must be >= 5");
  double best = 0.0;
  for (int m = 1; m <= n - 2; ++m) {
    const double b2 = beta_coeff(2, m, n);
    if (b2 <= 1e-12) continue;  // non-binding mode; keeps the even case exactly zero
    const double ratio = -b2 / beta_coeff(1, m, n);
    best = std::max(best, ratio);
  }
  return best;
}

int rho_star_argmax(int n) {
  if (n < 5) throw DomainError("rho_star_argmax: n must be >= 5");
  double best = 0.0;
  int arg = 0;
  for (int m = 1; m <= n - 2; ++m) {
    const double b2 = beta_coeff(2, m, n);
    if (b2 <= 1e-12) continue;
    const double ratio = -b2 / beta_coeff(1, m, n);
    if (ratio > best) {
      best = ratio;
      arg = m;
    }
  }
  return arg;
}

TwistIntegrals twist_integrals(double alpha, int m) {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw DomainError("twist_integrals: alpha must lie in (0, 1/2]");
  TwistIntegrals out;
  const double w = 2.0 * kPi * alpha;
  const double mm = static_cast<double>(m);
  if (m == 1) {
    out.I = kPi * alpha - std::sin(2.0 * kPi * alpha) + 0.25 * std::sin(4.0 * kPi * alpha);
  } else if (m >= 2) {
    out.I = -std::sin(w) + mm / (mm * mm - 1.0) * std::cos(w) * std::sin(mm * w) -
            1.0 / (mm * mm - 1.0) * std::sin(w) * std::cos(mm * w);
  } else {
    out.I = std::numeric_limits<double>::quiet_NaN();  // I_m defined for m >= 1 only
  }
  if (m == 0 || m == -1) {
    out.J = 0.0;
  } else {
    out.J = std::sin(w * (mm + 1.0)) / (mm + 1.0) + std::sin(w * mm) / mm - std::sin(w) - w;
  }
  return out;
}

double alpha_star(double tol) {
  if (tol < 1e-12) throw DomainError("alpha_star: tol must be >= 1e-12");
  auto I1 = [](double a) {
    return kPi * a - std::sin(2.0 * kPi * a) + 0.25 * std::sin(4.0 * kPi * a);
  };
  double lo = 0.25, hi = 0.45;
  double flo = I1(lo);
  if (!(flo < 0.0) || !(I1(hi) > 0.0)) throw NumericError("alpha_star: bracket invalid");
  // bisection with a secant refinement step
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = I1(mid);
    if (std::abs(fm) <= tol && hi - lo < 1e-9) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qk
