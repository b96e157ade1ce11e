#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "qk/errors.hpp"

namespace qk {

using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// Groups with the closure property Z - Z^{-1} in g. SOd and U1 get the full
// feature set; Generic is simulation-only (caller supplies the membership
// predicate, no spectra).
enum class GroupTag { SOd, U1, Generic };

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kClosureTol = 1e-9;

bool algebra_membership(const Mat& Q, GroupTag tag, double tol);
double group_defect(const Mat& X, GroupTag tag);  // ||X^H X - I||_F for SOd/U1, 0 for Generic
Mat group_inverse(const Mat& X, GroupTag tag);

// A Lie-algebra matrix: exactly skew-symmetric for so(d), purely imaginary
// 1x1 for u(1). Checked at construction.
class AlgebraElement {
 public:
  AlgebraElement(Mat entries, GroupTag tag, double tol = kAlgebraTol);
  static AlgebraElement so(const RMat& skew);
  static AlgebraElement u1(double omega);
  static AlgebraElement zero(int d, GroupTag tag);

  const Mat& entries() const { return m_; }
  RMat real_entries() const;  // SOd only
  GroupTag tag() const { return tag_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double norm() const { return m_.norm(); }

 private:
  Mat m_;
  GroupTag tag_;
};

// An invertible matrix satisfying the group's defining relation
// (orthogonal with det > 0 for SO(d), unit modulus for U(1)).
class GroupElement {
 public:
  GroupElement(Mat entries, GroupTag tag, double tol = kClosureTol);
  static GroupElement so(const RMat& rotation);
  static GroupElement u1(double theta);
  static GroupElement identity(int d, GroupTag tag);

  const Mat& entries() const { return m_; }
  RMat real_entries() const;  // SOd only
  GroupTag tag() const { return tag_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  GroupElement inverse() const;

 private:
  Mat m_;
  GroupTag tag_;
};

// Block-diagonal canonical rotation Tw(theta_1, ..., theta_{floor(d/2)}),
// trailing 1x1 identity block when d is odd.
GroupElement canonical_twist(const RVec& angles, int d);
RMat canonical_twist_matrix(const RVec& angles, int d);

// Basis M_{ij} of so(d) (+1 at (i,j), -1 at (j,i), i < j), ordered by the
// single-rotation grouping: M_12, then (M_1q, M_2q) for q = 3..d, then all
// M_ij with 3 <= i < j <= d. Indices stored 0-based.
struct SoBasis {
  int d = 0;
  std::vector<RMat> elems;
  std::vector<std::pair<int, int>> planes;
  int dim() const { return static_cast<int>(elems.size()); }
};
SoBasis so_basis(int d);

// Matrix exponential (scaling-and-squaring with Pade approximation).
Mat exp_map(const Mat& Q);
GroupElement exp_map(const AlgebraElement& Q);

// True iff Z - Z^{-1} lies in the algebra of Z's tag within tol. The Generic
// overload takes the membership predicate.
bool check_lohe_closure(const GroupElement& Z, double tol = kClosureTol);
bool check_lohe_closure(const GroupElement& Z, double tol,
                        const std::function<bool(const Mat&, double)>& membership);

// Orthogonal polar factor (det > 0 for SOd); idempotent on group elements.
GroupElement retract_to_group(const Mat& X, GroupTag tag);
Mat retract_matrix(const Mat& X, GroupTag tag);

// Coordinates x with Q = sum_k x_k M_k. Exact round trip on span(basis).
RVec algebra_coords(const RMat& Q, const SoBasis& basis);
RVec algebra_coords(const AlgebraElement& Q, const SoBasis& basis);
RMat coords_to_matrix(const RVec& x, const SoBasis& basis);
AlgebraElement coords_to_algebra(const RVec& x, const SoBasis& basis);

}  // namespace qk
