#ifndef VANISH_CORE_HPP
#define VANISH_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "vanish/points.hpp"
#include "vanish/poly.hpp"
#include "vanish/staircase.hpp"

namespace vanish {

/// The points of A sharing first coordinate `key`, with that coordinate dropped.
struct Slice {
  Scalar key;
  PointSet points;
};

/// A grouped by first coordinate; slices are in ascending canonical key order.
struct SliceDecomposition {
  std::vector<Slice> slices;

  std::vector<Scalar> keys() const;
};

/// Reduced lex Groebner basis together with its staircase. `elements[i]`
/// has leading exponent `limiting_set(staircase)[i]`, so elements are in
/// ascending order of leading exponent.
struct GroebnerBasis {
  Staircase staircase;
  std::vector<Polynomial> elements;

  std::size_t dimension() const noexcept { return staircase.dimension(); }
  std::vector<Exponent> leading_exponents() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

/// Throws std::invalid_argument for n = 1 or empty A.
SliceDecomposition slice_decompose(const PointSet& a);

/// D(A) by induction on the dimension: an interval for n = 1, otherwise the
/// sum of the slice staircases. The empty set gives the empty staircase.
Staircase compute_staircase(const PointSet& a);

/// X^beta_hat minus its normal form modulo the slice basis: monic, leading
/// exponent beta_hat, tail inside the slice staircase, vanishing on the slice.
/// Throws std::invalid_argument if beta_hat lies in the slice staircase.
Polynomial slice_representative(const Exponent& beta_hat, const GroebnerBasis& slice_gb);

/// The lifted polynomial for one corner, with the pieces it is built from.
struct PhiParts {
  /// Slice keys whose staircase contains beta_hat.
  std::vector<Scalar> s_keys;
  /// The other slice keys, interpolated over.
  std::vector<Scalar> t_keys;
  Polynomial theta;
  Polynomial phi;
};

/// Builds phi_beta = prod_{a in S}(X_1 - a) * theta for a corner beta of D(A),
/// where theta interpolates the slice representatives of beta_hat over T with
/// characteristic polynomials in X_1. `slice_gbs` is aligned with
/// `slices.slices`. Throws std::invalid_argument if beta is not a corner.
PhiParts build_phi_parts(const Exponent& beta, const PointSet& a, const SliceDecomposition& slices,
                         std::span<const GroebnerBasis> slice_gbs);
Polynomial build_phi(const Exponent& beta, const PointSet& a, const SliceDecomposition& slices,
                     std::span<const GroebnerBasis> slice_gbs);

/// How one basis element was obtained at the top level of the recursion.
struct CornerStep {
  Exponent corner;
  PhiParts parts;
  /// Quotients of phi by the elements built before this corner (ascending).
  std::vector<Polynomial> quotients;
  /// phi minus the quotient combination, before the final inter-reduction.
  Polynomial reduced;
};

struct InductiveTrace {
  GroebnerBasis basis;
  /// One entry per corner for n >= 2; empty for n = 1 and for empty A.
  std::vector<CornerStep> steps;
};

/// The reduced lex Groebner basis of I(A) by induction on the dimension.
/// Empty A yields the basis {1} with the empty staircase.
GroebnerBasis inductive_gb(const PointSet& a);
InductiveTrace inductive_gb_traced(const PointSet& a);

/// dim_k k[X]/I = number of staircase cells.
std::size_t quotient_dimension(const GroebnerBasis& gb);

}  // namespace vanish

#endif  // VANISH_CORE_HPP
