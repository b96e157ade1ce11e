#pragma once

#include <vector>

#include "qk/algebra.hpp"

namespace qk {

// Coefficients (a_1, ..., a_P) of the analytic coupling f(x) = sum_p a_p x^p,
// truncated at finite P.
class CouplingSeries {
 public:
  explicit CouplingSeries(std::vector<double> coefficients);
  static CouplingSeries identity() { return CouplingSeries({1.0}); }

  int order() const { return static_cast<int>(a_.size()); }
  const std::vector<double>& coefficients() const { return a_; }

  // Slope of the coupling at the group identity, sum_p p*a_p. This is the
  // factor multiplying Lap(Gamma) in the linearization at sync.
  double slope_at_identity() const;

  // f(Z) by Horner-style repeated multiplication (no eigendecomposition, so
  // generic group elements are fine).
  Mat apply(const Mat& Z) const;

  // f(Z) - f(Z^{-1}); lands in the algebra whenever Z has Lohe closure.
  Mat odd_part(const Mat& Z, const Mat& Zinv) const;

 private:
  std::vector<double> a_;
};

}  // namespace qk
