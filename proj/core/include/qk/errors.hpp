#pragma once

#include <stdexcept>
#include <string>

namespace qk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or length mismatch between inputs.
struct DimensionError : Error { using Error::Error; };
// Parameter outside its stated domain.
struct DomainError : Error { using Error::Error; };
// Non-finite values or a failed matrix factorization.
struct NumericError : Error { using Error::Error; };
// Singular operator where full rank on the mean-zero subspace was required
// (disconnected coupling graph, rank-deficient retraction input).
struct RankError : Error { using Error::Error; };
// Violated analytic precondition (nonzero forcing sum, not a fixed point, ...).
struct ConsistencyError : Error { using Error::Error; };
// Solution spec that cannot be realized (e.g. a flip pattern that does not close).
struct ConstructionError : Error { using Error::Error; };
// Operation not defined for the given group tag.
struct UnsupportedError : Error { using Error::Error; };

// Trajectory entries exceeded the blow-up threshold.
struct BlowUpError : Error {
  double time;
  BlowUpError(const std::string& what, double t) : Error(what), time(t) {}
};

}  // namespace qk
