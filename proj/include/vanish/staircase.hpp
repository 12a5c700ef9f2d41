#ifndef VANISH_STAIRCASE_HPP
#define VANISH_STAIRCASE_HPP

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanish/poly.hpp"

namespace vanish {

/// Raised when a cell set is not closed under decrementing a coordinate:
/// `cell` is present, cell[direction] != 0, but cell - e_direction is missing.
class StaircaseError : public std::invalid_argument {
 public:
  StaircaseError(Exponent cell, std::size_t direction);

  const Exponent& cell() const noexcept { return cell_; }
  /// Zero-based.
  std::size_t direction() const noexcept { return direction_; }

 private:
  Exponent cell_;
  std::size_t direction_;
};

/// A finite lower set D in N_0^n: whenever d is in D and d_i != 0, d - e_i is
/// in D too. Cells iterate in increasing lex order.
class Staircase {
 public:
  /// The empty staircase of dimension n.
  explicit Staircase(std::size_t n) : n_(n) {}

  /// Throws StaircaseError with a witness if the lower-set property fails.
  static Staircase validate(std::set<Exponent> cells, std::size_t n);
  /// {0, ..., count-1} in dimension 1.
  static Staircase interval(std::size_t count);
  /// Standard monomials of the ideal generated by X^lead; throws
  /// std::invalid_argument if that set is infinite.
  static Staircase below_leading_exponents(std::span<const Exponent> leads, std::size_t n);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const Exponent& e) const { return cells_.contains(e); }
  const std::set<Exponent>& cells() const noexcept { return cells_; }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  Staircase(std::size_t n, std::set<Exponent> cells) : n_(n), cells_(std::move(cells)) {}

  friend Staircase project_hat(const Staircase&);
  friend Staircase lift_slice(const Staircase&);
  friend Staircase staircase_sum(std::span<const Staircase>, std::size_t);

  std::size_t n_;
  std::set<Exponent> cells_;
};

/// E(D): the minimal generators of the complement, ascending lex order.
std::vector<Exponent> limiting_set(const Staircase& d);

/// The image of D under dropping coordinate 1. Requires n >= 2.
Staircase project_hat(const Staircase& d);

/// The (n-1)-dimensional slice staircase placed at first coordinate 0 in N_0^n.
Staircase lift_slice(const Staircase& d);

/// Number of cells of D projecting to dhat; those cells have first coordinates 0..count-1.
std::size_t fiber_count(const Staircase& d, const Exponent& dhat);

/// Number of cells d of D with d equal to beta off coordinate `axis` (zero-based).
std::size_t fiber_count_along(const Staircase& d, const Exponent& beta, std::size_t axis);

/// Column-wise merge of D and D2 summing fiber counts over the projection.
Staircase staircase_add(const Staircase& d, const Staircase& d2);

/// Closed form of the iterated sum; the empty family needs the dimension.
Staircase staircase_sum(std::span<const Staircase> family);
Staircase staircase_sum(std::span<const Staircase> family, std::size_t n);

/// beta is a corner iff beta_i equals the fiber count along every axis i.
bool is_corner_by_fibers(const Staircase& d, const Exponent& beta);

/// Two-dimensional picture, rows = coordinate 2 descending, columns =
/// coordinate 1; 'o' marks a cell, '*' a corner and '.' anything else.
/// Throws std::invalid_argument unless n = 2.
std::string render_ascii(const Staircase& d);

}  // namespace vanish

#endif  // VANISH_STAIRCASE_HPP
