#ifndef VANISH_VERIFY_HPP
#define VANISH_VERIFY_HPP

#include <string>
#include <vector>

#include "vanish/core.hpp"

namespace vanish {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Empty on success; otherwise a concrete point, pair or exponent.
  std::string witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const;
};

/// Every element vanishes at every point. Throws std::invalid_argument on a
/// dimension or field mismatch.
CheckResult check_vanishing(const GroebnerBasis& gb, const PointSet& a);

/// Monic elements whose leading exponents are exactly the corners of the
/// staircase, one each, with every tail exponent inside the staircase.
CheckResult check_reduced_shape(const GroebnerBasis& gb);

/// Every S-polynomial reduces to zero modulo the basis (all pairs).
CheckResult check_buchberger(const GroebnerBasis& gb);

/// Number of staircase cells equals the number of points.
CheckResult check_dimension(const GroebnerBasis& gb, const PointSet& a);

/// All four checks, in the order above.
VerificationReport verify_basis(const GroebnerBasis& gb, const PointSet& a);

}  // namespace vanish

#endif  // VANISH_VERIFY_HPP
