#include "vanish/staircase.hpp"

#include <algorithm>
#include <map>

namespace vanish {

StaircaseError::StaircaseError(Exponent cell, std::size_t direction)
    : std::invalid_argument("not a lower set: cell " + cell.to_string() + " is present but its predecessor in direction " +
                            std::to_string(direction + 1) + " is missing"),
      cell_(std::move(cell)),
      direction_(direction) {}

Staircase Staircase::validate(std::set<Exponent> cells, std::size_t n) {
  for (const Exponent& d : cells) {
    if (d.size() != n) throw std::invalid_argument("cell " + d.to_string() + " has wrong dimension");
  }
  for (const Exponent& d : cells) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      Exponent below = d;
      --below[i];
      if (!cells.contains(below)) throw StaircaseError(d, i);
    }
  }
  return Staircase(n, std::move(cells));
}

Staircase Staircase::interval(std::size_t count) {
  std::set<Exponent> cells;
  for (std::size_t i = 0; i < count; ++i) cells.insert(Exponent{static_cast<unsigned>(i)});
  return Staircase(1, std::move(cells));
}

Staircase Staircase::below_leading_exponents(std::span<const Exponent> leads, std::size_t n) {
  std::vector<unsigned> bound(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const Exponent& e : leads) {
      if (e.size() != n) throw std::invalid_argument("leading exponent has wrong dimension");
      if (e[i] == e.total_degree() && (!found || e[i] < bound[i])) {
        bound[i] = e[i];
        found = true;
      }
    }
    if (!found) {
      throw std::invalid_argument("no pure power of X" + std::to_string(i + 1) +
                                  " among leading terms: quotient is infinite-dimensional");
    }
  }
  std::set<Exponent> cells;
  if (std::any_of(bound.begin(), bound.end(), [](unsigned b) { return b == 0; })) return Staircase(n, {});
  Exponent e(n);
  while (true) {
    if (std::none_of(leads.begin(), leads.end(), [&](const Exponent& l) { return l.divides(e); })) cells.insert(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
  }
  return Staircase(n, std::move(cells));
}

std::vector<Exponent> limiting_set(const Staircase& d) {
  const std::size_t n = d.dimension();
  if (d.empty()) return {Exponent(n)};
  std::set<Exponent> corners;
  for (const Exponent& cell : d.cells()) {
    for (std::size_t i = 0; i < n; ++i) {
      Exponent beta = cell;
      ++beta[i];
      if (d.contains(beta)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (beta[j] == 0) continue;
        Exponent below = beta;
        --below[j];
        minimal = d.contains(below);
      }
      if (minimal) corners.insert(std::move(beta));
    }
  }
  return {corners.begin(), corners.end()};
}

Staircase project_hat(const Staircase& d) {
  if (d.dimension() < 2) throw std::invalid_argument("projection needs dimension >= 2");
  std::set<Exponent> cells;
  for (const Exponent& cell : d.cells()) cells.insert(cell.drop_first());
  return Staircase(d.dimension() - 1, std::move(cells));
}

Staircase lift_slice(const Staircase& d) {
  std::set<Exponent> cells;
  for (const Exponent& cell : d.cells()) cells.insert(cell.prepend(0));
  return Staircase(d.dimension() + 1, std::move(cells));
}

std::size_t fiber_count(const Staircase& d, const Exponent& dhat) {
  if (dhat.size() + 1 != d.dimension()) throw std::invalid_argument("fiber index has wrong dimension");
  // Lower-set property: the fiber is {0, ..., count-1} in coordinate 1.
  std::size_t count = 0;
  while (d.contains(dhat.prepend(static_cast<unsigned>(count)))) ++count;
  return count;
}

std::size_t fiber_count_along(const Staircase& d, const Exponent& beta, std::size_t axis) {
  if (beta.size() != d.dimension()) throw std::invalid_argument("exponent has wrong dimension");
  if (axis >= d.dimension()) throw std::out_of_range("axis out of range");
  std::size_t count = 0;
  for (const Exponent& cell : d.cells()) {
    bool same = true;
    for (std::size_t j = 0; j < beta.size() && same; ++j) same = j == axis || cell[j] == beta[j];
    if (same) ++count;
  }
  return count;
}

Staircase staircase_add(const Staircase& d, const Staircase& d2) {
  const Staircase pair[] = {d, d2};
  return staircase_sum(pair, d.dimension());
}

Staircase staircase_sum(std::span<const Staircase> family) {
  if (family.empty()) throw std::invalid_argument("empty family needs an explicit dimension");
  return staircase_sum(family, family.front().dimension());
}

Staircase staircase_sum(std::span<const Staircase> family, std::size_t n) {
  if (n < 1) throw std::invalid_argument("staircase sum needs dimension >= 1");
  std::map<Exponent, unsigned> heights;
  for (const Staircase& member : family) {
    if (member.dimension() != n) throw std::invalid_argument("staircase dimension mismatch");
    for (const Exponent& cell : member.cells()) ++heights[cell.drop_first()];
  }
  std::set<Exponent> cells;
  for (const auto& [dhat, height] : heights) {
    for (unsigned i = 0; i < height; ++i) cells.insert(dhat.prepend(i));
  }
  return Staircase(n, std::move(cells));
}

bool is_corner_by_fibers(const Staircase& d, const Exponent& beta) {
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    if (beta[i] != fiber_count_along(d, beta, i)) return false;
  }
  return true;
}

std::string render_ascii(const Staircase& d) {
  if (d.dimension() != 2) throw std::invalid_argument("ASCII rendering needs dimension 2");
  const std::vector<Exponent> corners = limiting_set(d);
  unsigned width = 0, height = 0;
  for (const Exponent& c : corners) {
    width = std::max(width, c[0] + 1);
    height = std::max(height, c[1] + 1);
  }
  std::string out;
  for (unsigned row = height; row-- > 0;) {
    for (unsigned col = 0; col < width; ++col) {
      const Exponent e{col, row};
      if (d.contains(e)) {
        out += 'o';
      } else if (std::find(corners.begin(), corners.end(), e) != corners.end()) {
        out += '*';
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace vanish
