#ifndef VANISH_POINTS_HPP
#define VANISH_POINTS_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vanish/field.hpp"

namespace vanish {

/// A k-rational point of affine n-space.
class Point {
 public:
  /// Throws std::invalid_argument if the coordinates mix fields.
  explicit Point(std::vector<Scalar> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  std::span<const Scalar> coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  /// Drops the first coordinate.
  Point drop_first() const;

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Scalar> coords_;
};

/// Coordinatewise canonical order; used for deduplication and determinism.
std::strong_ordering canonical_compare(const Point& a, const Point& b);

class DuplicatePointError : public std::invalid_argument {
 public:
  DuplicatePointError(std::size_t first, std::size_t second, const std::string& point);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A finite set of distinct points of one dimension over one field. The
/// input order is kept; nothing downstream depends on it.
class PointSet {
 public:
  /// Throws DuplicatePointError (zero-based indices) on repeated points and
  /// std::invalid_argument on dimension or field mismatches.
  PointSet(std::size_t n, FieldSpec spec, std::vector<Point> points);

  std::size_t dimension() const noexcept { return n_; }
  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const Point> points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::size_t n_;
  FieldSpec spec_;
  std::vector<Point> points_;
};

/// Convenience for tests and examples: integer coordinates.
PointSet make_points(const FieldSpec& spec, std::size_t n, const std::vector<std::vector<long>>& coords);

}  // namespace vanish

#endif  // VANISH_POINTS_HPP
