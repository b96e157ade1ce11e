#include "qk/algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace qk {

namespace {

bool finite(const Mat& m) { return m.allFinite(); }

}  // namespace

bool algebra_membership(const Mat& Q, GroupTag tag, double tol) {
  switch (tag) {
    case GroupTag::SOd:
      return Q.imag().norm() <= tol && (Q + Q.transpose()).norm() <= tol;
    case GroupTag::U1:
      return Q.rows() == 1 && Q.cols() == 1 && std::abs(Q(0, 0).real()) <= tol;
    case GroupTag::Generic:
      return true;
  }
  return false;
}

double group_defect(const Mat& X, GroupTag tag) {
  switch (tag) {
    case GroupTag::SOd:
    case GroupTag::U1:
      return (X.adjoint() * X - Mat::Identity(X.rows(), X.cols())).norm();
    case GroupTag::Generic:
      return 0.0;
  }
  return 0.0;
}

Mat group_inverse(const Mat& X, GroupTag tag) {
  switch (tag) {
    case GroupTag::SOd:
      return X.transpose();
    case GroupTag::U1:
      return X.adjoint();
    case GroupTag::Generic: {
      Eigen::FullPivLU<Mat> lu(X);
      if (!lu.isInvertible()) throw NumericError("group_inverse: singular element");
      return lu.inverse();
    }
  }
  throw UnsupportedError("group_inverse: unknown tag");
}

AlgebraElement::AlgebraElement(Mat entries, GroupTag tag, double tol)
    : m_(std::move(entries)), tag_(tag) {
  if (!finite(m_)) throw NumericError("AlgebraElement: non-finite entries");
  if (m_.rows() != m_.cols()) throw DimensionError("AlgebraElement: matrix not square");
  if (!algebra_membership(m_, tag_, tol))
    throw ConsistencyError("AlgebraElement: entries violate the algebra invariant");
  if (tag_ == GroupTag::SOd) m_ = m_.real().cast<std::complex<double>>();
}

AlgebraElement AlgebraElement::so(const RMat& skew) {
  return AlgebraElement(skew.cast<std::complex<double>>(), GroupTag::SOd);
}

AlgebraElement AlgebraElement::u1(double omega) {
  Mat m(1, 1);
  m(0, 0) = std::complex<double>(0.0, omega);
  return AlgebraElement(std::move(m), GroupTag::U1);
}

AlgebraElement AlgebraElement::zero(int d, GroupTag tag) {
  return AlgebraElement(Mat::Zero(d, d), tag);
}

RMat AlgebraElement::real_entries() const {
  if (tag_ != GroupTag::SOd) throw UnsupportedError("real_entries: requires the SO(d) tag");
  return m_.real();
}

GroupElement::GroupElement(Mat entries, GroupTag tag, double tol)
    : m_(std::move(entries)), tag_(tag) {
  if (!finite(m_)) throw NumericError("GroupElement: non-finite entries");
  if (m_.rows() != m_.cols()) throw DimensionError("GroupElement: matrix not square");
  switch (tag_) {
    case GroupTag::SOd: {
      if (m_.imag().norm() > tol)
        throw ConsistencyError("GroupElement: SO(d) element has imaginary entries");
      if (group_defect(m_, tag_) > tol)
        throw ConsistencyError("GroupElement: not orthogonal within tolerance");
      if (m_.real().determinant() <= 0.0)
        throw ConsistencyError("GroupElement: determinant not positive");
      m_ = m_.real().cast<std::complex<double>>();
      break;
    }
    case GroupTag::U1: {
      if (m_.rows() != 1) throw DimensionError("GroupElement: U(1) element must be 1x1");
      if (std::abs(std::abs(m_(0, 0)) - 1.0) > tol)
        throw ConsistencyError("GroupElement: |z| != 1");
      break;
    }
    case GroupTag::Generic: {
      Eigen::FullPivLU<Mat> lu(m_);
      if (!lu.isInvertible()) throw ConsistencyError("GroupElement: not invertible");
      break;
    }
  }
}

GroupElement GroupElement::so(const RMat& rotation) {
  return GroupElement(rotation.cast<std::complex<double>>(), GroupTag::SOd);
}

GroupElement GroupElement::u1(double theta) {
  Mat m(1, 1);
  m(0, 0) = std::polar(1.0, theta);
  return GroupElement(std::move(m), GroupTag::U1);
}

GroupElement GroupElement::identity(int d, GroupTag tag) {
  return GroupElement(Mat::Identity(d, d), tag);
}

RMat GroupElement::real_entries() const {
  if (tag_ != GroupTag::SOd) throw UnsupportedError("real_entries: requires the SO(d) tag");
  return m_.real();
}

GroupElement GroupElement::inverse() const {
  return GroupElement(group_inverse(m_, tag_), tag_);
}

RMat canonical_twist_matrix(const RVec& angles, int d) {
  if (d < 2) throw DomainError("canonical_twist: d must be >= 2");
  const int z = d / 2;
  if (angles.size() != z)
    throw DimensionError("canonical_twist: expected floor(d/2) angles");
  RMat T = RMat::Identity(d, d);
  for (int q = 0; q < z; ++q) {
    const double c = std::cos(angles[q]);
    const double s = std::sin(angles[q]);
    T(2 * q, 2 * q) = c;
    T(2 * q, 2 * q + 1) = -s;
    T(2 * q + 1, 2 * q) = s;
    T(2 * q + 1, 2 * q + 1) = c;
  }
  return T;
}

GroupElement canonical_twist(const RVec& angles, int d) {
  return GroupElement::so(canonical_twist_matrix(angles, d));
}

SoBasis so_basis(int d) {
  if (d < 2) throw DomainError("so_basis: d must be >= 2");
  SoBasis basis;
  basis.d = d;
  basis.planes.emplace_back(0, 1);
  for (int q = 2; q < d; ++q) {
    basis.planes.emplace_back(0, q);
    basis.planes.emplace_back(1, q);
  }
  for (int i = 2; i < d; ++i)
    for (int j = i + 1; j < d; ++j) basis.planes.emplace_back(i, j);
  for (auto [i, j] : basis.planes) {
    RMat M = RMat::Zero(d, d);
    M(i, j) = 1.0;
    M(j, i) = -1.0;
    basis.elems.push_back(std::move(M));
  }
  return basis;
}

Mat exp_map(const Mat& Q) {
  if (!Q.allFinite()) throw NumericError("exp_map: non-finite entries");
  return Q.exp();
}

GroupElement exp_map(const AlgebraElement& Q) {
  if (Q.tag() == GroupTag::SOd) {
    RMat E = Q.real_entries().exp();
    return GroupElement::so(E);
  }
  return GroupElement(exp_map(Q.entries()), Q.tag());
}

bool check_lohe_closure(const GroupElement& Z, double tol) {
  if (Z.tag() == GroupTag::Generic)
    throw UnsupportedError("check_lohe_closure: Generic tag needs a membership predicate");
  const Mat diff = Z.entries() - group_inverse(Z.entries(), Z.tag());
  return algebra_membership(diff, Z.tag(), tol);
}

bool check_lohe_closure(const GroupElement& Z, double tol,
                        const std::function<bool(const Mat&, double)>& membership) {
  Eigen::FullPivLU<Mat> lu(Z.entries());
  if (!lu.isInvertible()) throw NumericError("check_lohe_closure: singular element");
  return membership(Z.entries() - lu.inverse(), tol);
}

Mat retract_matrix(const Mat& X, GroupTag tag) {
  if (!X.allFinite()) throw NumericError("retract_to_group: non-finite entries");
  switch (tag) {
    case GroupTag::SOd: {
      RMat A = X.real();
      Eigen::JacobiSVD<RMat> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (svd.singularValues().minCoeff() < 1e-12)
        throw RankError("retract_to_group: rank-deficient input");
      RMat U = svd.matrixU();
      RMat V = svd.matrixV();
      if ((U * V.transpose()).determinant() < 0.0) U.col(U.cols() - 1) *= -1.0;
      return (U * V.transpose()).cast<std::complex<double>>();
    }
    case GroupTag::U1: {
      const double r = std::abs(X(0, 0));
      if (r < 1e-12) throw RankError("retract_to_group: zero element");
      Mat out(1, 1);
      out(0, 0) = X(0, 0) / r;
      return out;
    }
    case GroupTag::Generic:
      throw UnsupportedError("retract_to_group: undefined for the generic tag");
  }
  throw UnsupportedError("retract_to_group: unknown tag");
}

GroupElement retract_to_group(const Mat& X, GroupTag tag) {
  return GroupElement(retract_matrix(X, tag), tag);
}

RVec algebra_coords(const RMat& Q, const SoBasis& basis) {
  if (Q.rows() != basis.d || Q.cols() != basis.d)
    throw DimensionError("algebra_coords: dimension mismatch with basis");
  RVec x(basis.dim());
  for (int k = 0; k < basis.dim(); ++k) {
    auto [i, j] = basis.planes[k];
    // <Q, M_ij>_F / ||M_ij||_F^2 with ||M||^2 = 2
    x[k] = 0.5 * (Q(i, j) - Q(j, i));
  }
  return x;
}

RVec algebra_coords(const AlgebraElement& Q, const SoBasis& basis) {
  return algebra_coords(Q.real_entries(), basis);
}

RMat coords_to_matrix(const RVec& x, const SoBasis& basis) {
  if (x.size() != basis.dim())
    throw DimensionError("coords_to_algebra: coordinate length mismatch");
  RMat Q = RMat::Zero(basis.d, basis.d);
  for (int k = 0; k < basis.dim(); ++k) {
    auto [i, j] = basis.planes[k];
    Q(i, j) += x[k];
    Q(j, i) -= x[k];
  }
  return Q;
}

AlgebraElement coords_to_algebra(const RVec& x, const SoBasis& basis) {
  return AlgebraElement::so(coords_to_matrix(x, basis));
}

}  // namespace qk
