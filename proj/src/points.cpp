#include "vanish/points.hpp"

#include <algorithm>
#include <numeric>

namespace vanish {

Point::Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {
  for (const Scalar& c : coords_) {
    if (c.spec() != coords_.front().spec()) throw std::invalid_argument("point coordinates mix fields");
  }
}

Point Point::drop_first() const {
  if (coords_.empty()) throw std::invalid_argument("cannot project a 0-dimensional point");
  return Point(std::vector<Scalar>(coords_.begin() + 1, coords_.end()));
}

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) s += ",";
    s += coords_[i].to_string();
  }
  return s + ")";
}

std::strong_ordering canonical_compare(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (const auto c = canonical_compare(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DuplicatePointError::DuplicatePointError(std::size_t first, std::size_t second, const std::string& point)
    : std::invalid_argument("duplicate point " + point + " at indices " + std::to_string(first) + " and " +
                            std::to_string(second)),
      first_(first),
      second_(second) {}

PointSet::PointSet(std::size_t n, FieldSpec spec, std::vector<Point> points)
    : n_(n), spec_(spec), points_(std::move(points)) {
  if (n_ == 0) throw std::invalid_argument("dimension must be at least 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dimension() != n_) {
      throw std::invalid_argument("point " + std::to_string(i) + " has " + std::to_string(points_[i].dimension()) +
                                  " coordinates, expected " + std::to_string(n_));
    }
    if (points_[i][0].spec() != spec_) throw std::invalid_argument("point " + std::to_string(i) + " field mismatch");
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_compare(points_[a], points_[b]) < 0;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k]] == points_[order[k - 1]]) {
      throw DuplicatePointError(order[k - 1], order[k], points_[order[k]].to_string());
    }
  }
}

PointSet make_points(const FieldSpec& spec, std::size_t n, const std::vector<std::vector<long>>& coords) {
  std::vector<Point> points;
  for (const auto& row : coords) {
    std::vector<Scalar> c;
    for (long v : row) c.push_back(Scalar::from_int(v, spec));
    points.emplace_back(std::move(c));
  }
  return PointSet(n, spec, std::move(points));
}

}  // namespace vanish
