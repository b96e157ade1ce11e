#include "qk/coupling.hpp"

#include <cmath>

namespace qk {

CouplingSeries::CouplingSeries(std::vector<double> coefficients) : a_(std::move(coefficients)) {
  if (a_.empty()) throw DomainError("CouplingSeries: needs at least one coefficient");
  for (double c : a_)
    if (!std::isfinite(c)) throw NumericError("CouplingSeries: non-finite coefficient");
}

double CouplingSeries::slope_at_identity() const {
  double s = 0.0;
  for (std::size_t p = 0; p < a_.size(); ++p) s += static_cast<double>(p + 1) * a_[p];
  return s;
}

Mat CouplingSeries::apply(const Mat& Z) const {
  const int P = order();
  Mat acc = a_[P - 1] * Mat::Identity(Z.rows(), Z.cols());
  for (int p = P - 2; p >= 0; --p) {
    acc = Z * acc;
    acc.diagonal().array() += a_[p];
  }
  return Z * acc;
}

Mat CouplingSeries::odd_part(const Mat& Z, const Mat& Zinv) const {
  return apply(Z) - apply(Zinv);
}

}  // namespace qk
