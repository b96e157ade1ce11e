#pragma once

#include <string>
#include <vector>

#include "qk/errors.hpp"

namespace qk {

// Closed-form eigenvalue families for the linearization around twist
// solutions on symmetric circulant graphs (coupling f(x) = x). Values are
// the actual Jacobian eigenvalues:
//   lambda_{l,m} = 2 sum_k g_k cos(2 pi k l / n) (cos(2 pi k m / n) - 1)
//   mu_{l,m}     =   sum_k g_k (cos(2 pi k (l+m)/n) + cos(2 pi k m/n)
//                              - cos(2 pi k l/n) - 1)
//   nu_m         = 2 sum_k g_k (cos(2 pi k m / n) - 1)
//   kappa^pm_{l1,l2,m} = sum_k g_k (cos(2 pi k (l1+m)/n) + cos(2 pi k (+-l2+m)/n)
//                                   - cos(2 pi k l1/n) - cos(2 pi k l2/n))
enum class EigFamily { Lambda, Mu, Nu, KappaPlus, KappaMinus };
const char* family_name(EigFamily f);

struct SpectrumEntry {
  EigFamily family;
  int l1 = 0;
  int l2 = 0;
  int m = 0;
  double value = 0.0;
  int multiplicity = 1;
};

struct TwistSpectrum {
  int n = 0;
  int d = 0;
  std::vector<SpectrumEntry> entries;

  // values expanded by multiplicity, ascending
  std::vector<double> expanded_sorted() const;
  double max_value() const;
  int total_multiplicity() const;
};

double lambda_eig(const std::vector<double>& bands, int n, int l, int m);
double mu_eig(const std::vector<double>& bands, int n, int l, int m);
double nu_eig(const std::vector<double>& bands, int n, int m);
double kappa_eig(const std::vector<double>& bands, int n, int la, int lb, int m, int sign);

// Multiplicities 1, 2(d-2), (d-2)(d-3)/2 for lambda, mu, nu; per-m total
// d(d-1)/2.
TwistSpectrum single_twist_eigs(const std::vector<double>& bands, int n, int d, int l);

// Requires d >= 4. Families lambda_{l_a} (mult 1 each), mu_{l_a} (mult
// 2(d-4) each), nu (mult (d-4)(d-5)/2), kappa^pm (mult 2 each); per-m total
// d(d-1)/2.
TwistSpectrum double_twist_eigs(const std::vector<double>& bands, int n, int d, int l1, int l2);

// kappa^pm_{la,lb,m} for m = 0..n-1; a partial spectrum sufficient for
// instability certification of higher-order twists.
std::vector<SpectrumEntry> higher_twist_kappa(const std::vector<double>& bands, int n, int la,
                                              int lb);

struct OneTwistSupport {
  bool supports = false;
  SpectrumEntry witness;  // most positive entry
};

// True iff every family of the l = 1 twist stays below zero_tol (structural
// zeros lambda_{1,0}, mu_{1,0}, mu_{1,n-1}, nu_0 included, they are zero).
OneTwistSupport supports_one_twist(const std::vector<double>& bands, int n, int d,
                                   double zero_tol = 1e-9);

// Piecewise linear threshold on gamma_1: for gamma_1 strictly above the
// returned value the graph supports 1-twists; at the threshold the mu family
// peaks at exactly zero. gamma_tail = (gamma_2, ..., gamma_K). Requires
// K < n/4.
double g_threshold(int K, int n, const std::vector<double>& gamma_tail);

// Critical gamma_1/gamma_2 ratio for K = 2: zero for even n, positive for
// odd n, asymptotically (pi/n)^2.
double rho_star(int n);
int rho_star_argmax(int n);

struct TwistIntegrals {
  double I = 0.0;
  double J = 0.0;
};
// I_m(a) = int_0^{2 pi a} cos(x)(cos(mx) - 1) dx and
// J_m(a) = int_0^{2 pi a} (cos((m+1)x) + cos(mx) - cos(x) - 1) dx, closed form.
TwistIntegrals twist_integrals(double alpha, int m);

// First positive root of I_1 on (0.25, 0.45); approximately 0.340461.
double alpha_star(double tol = 1e-12);

}  // namespace qk
