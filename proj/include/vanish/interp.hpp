#ifndef VANISH_INTERP_HPP
#define VANISH_INTERP_HPP

#include <span>
#include <vector>

#include "vanish/field.hpp"
#include "vanish/poly.hpp"

namespace vanish {

/// A finite sequence of pairwise-distinct field elements.
class ValueSet {
 public:
  /// Throws std::invalid_argument on duplicates or mixed fields.
  ValueSet(FieldSpec spec, std::vector<Scalar> values);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::span<const Scalar> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(const Scalar& x) const;

 private:
  FieldSpec spec_;
  std::vector<Scalar> values_;
};

/// The univariate Lagrange polynomial prod_{b != a}(X - b)/(a - b): equal to
/// 1 at a and 0 on the rest of T. Throws std::invalid_argument if a is not in T.
Polynomial char_poly(const ValueSet& t, const Scalar& a);

/// All characteristic polynomials of T, in the order of T's values. Computed
/// from the master polynomial prod_b (X - b) by synthetic division.
std::vector<Polynomial> char_polys(const ValueSet& t);

/// prod_{v in V} (X - v): monic of degree #V.
Polynomial univariate_vanishing(const ValueSet& v);

}  // namespace vanish

#endif  // VANISH_INTERP_HPP
