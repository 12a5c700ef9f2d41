#ifndef VANISH_TESTS_SUPPORT_HPP
#define VANISH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "vanish/bench.hpp"
#include "vanish/core.hpp"

namespace vanish::testing {

/// Polynomial builder: x(1) is X1, c(3, 2) the constant 3/2.
struct Ring {
  std::size_t n;
  FieldSpec spec;

  Polynomial x(std::size_t i) const { return Polynomial::variable(n, i - 1, spec); }
  Polynomial c(long num, long den = 1) const {
    return Polynomial::constant(n, Scalar::from_int(num, spec) / Scalar::from_int(den, spec));
  }
  Scalar s(long num, long den = 1) const { return Scalar::from_int(num, spec) / Scalar::from_int(den, spec); }
};

inline FieldSpec Q() { return FieldSpec::rational(); }

inline PointSet example_a() { return make_points(Q(), 2, {{1, 0}, {1, 2}, {3, 1}, {3, 4}}); }
inline PointSet example_a_prime() { return make_points(Q(), 2, {{1, 0}, {1, 2}, {2, 3}, {3, 1}, {3, 4}}); }

inline std::set<Exponent> cells(std::initializer_list<Exponent> list) { return std::set<Exponent>(list); }

// Stacks the cells of `top` onto `base` column by column, one cell at a time.
inline std::set<Exponent> drop_onto(const Staircase& base, const Staircase& top) {
  std::set<Exponent> grid(base.cells().begin(), base.cells().end());
  std::vector<Exponent> falling(top.cells().begin(), top.cells().end());
  std::sort(falling.begin(), falling.end(), [](const Exponent& a, const Exponent& b) { return a[0] < b[0]; });
  for (const Exponent& cell : falling) {
    Exponent spot = cell.drop_first().prepend(0);
    while (grid.contains(spot)) ++spot[0];
    grid.insert(spot);
  }
  return grid;
}

// Minimal exponents outside D, by scanning a bounding box.
inline std::vector<Exponent> corners_by_scan(const Staircase& d) {
  const std::size_t n = d.dimension();
  std::vector<unsigned> bound(n, 1);
  for (const Exponent& c : d.cells()) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], c[i] + 2);
  }
  std::vector<Exponent> out;
  Exponent e(n);
  while (true) {
    if (!d.contains(e)) {
      bool minimal = true;
      for (const Exponent& other : out) minimal = minimal && !other.divides(e);
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (e[i] == 0) continue;
        Exponent below = e;
        --below[i];
        minimal = d.contains(below);
      }
      if (minimal) out.push_back(e);
    }
    std::size_t i = 0;
    while (i < n && ++e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Seeded generator for property tests.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }

  Scalar scalar(const FieldSpec& spec) {
    if (spec.is_rational()) {
      return Scalar::from_int(uniform(-20, 20), spec) / Scalar::from_int(uniform(1, 7), spec);
    }
    return Scalar::from_int(uniform(0, static_cast<long>(spec.modulus()) - 1), spec);
  }

  Exponent exponent(std::size_t n, unsigned max) {
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(uniform(0, max));
    return Exponent(std::move(e));
  }

  Polynomial polynomial(std::size_t n, const FieldSpec& spec, std::size_t terms, unsigned max_degree) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < terms; ++i) t.push_back(Term{exponent(n, max_degree), scalar(spec)});
    return Polynomial::from_terms(n, spec, std::move(t));
  }

  /// Down-closure of a few random cells, trimmed to at most max_cells cells.
  Staircase staircase(std::size_t n, std::size_t max_cells) {
    std::set<Exponent> out;
    const long seeds = uniform(0, 4);
    for (long s = 0; s < seeds; ++s) {
      const Exponent top = exponent(n, n <= 2 ? 6 : 3);
      std::set<Exponent> cone;
      Exponent e(n);
      while (true) {
        cone.insert(e);
        std::size_t i = 0;
        while (i < n && ++e[i] > top[i]) e[i++] = 0;
        if (i == n) break;
      }
      if (out.size() + cone.size() > max_cells) continue;
      out.insert(cone.begin(), cone.end());
    }
    return Staircase::validate(std::move(out), n);
  }

  PointSet points(const FieldSpec& spec, std::size_t n, std::size_t count) {
    InstanceGenerator generator(next());
    return generator.points(spec, n, count);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vanish::testing

#endif  // VANISH_TESTS_SUPPORT_HPP
