#include "vanish/bm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vanish {

namespace {

Scalar monomial_value(const Exponent& e, const Point& p) {
  Scalar v = Scalar::one(p[0].spec());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) v *= p[i].pow(e[i]);
  }
  return v;
}

// Square matrix, row-major, inverted in place by Gauss-Jordan with exact pivots.
// Returns false if singular.
bool invert(std::vector<Scalar>& m, std::size_t size, const FieldSpec& spec) {
  std::vector<Scalar> inv(size * size, Scalar::zero(spec));
  for (std::size_t i = 0; i < size; ++i) inv[i * size + i] = Scalar::one(spec);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot * size + col].is_zero()) ++pivot;
    if (pivot == size) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < size; ++j) {
        std::swap(m[pivot * size + j], m[col * size + j]);
        std::swap(inv[pivot * size + j], inv[col * size + j]);
      }
    }
    const Scalar scale = m[col * size + col].inverse();
    for (std::size_t j = 0; j < size; ++j) {
      m[col * size + j] *= scale;
      inv[col * size + j] *= scale;
    }
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || m[r * size + col].is_zero()) continue;
      const Scalar factor = m[r * size + col];
      for (std::size_t j = 0; j < size; ++j) {
        m[r * size + j] -= factor * m[col * size + j];
        inv[r * size + j] -= factor * inv[col * size + j];
      }
    }
  }
  m = std::move(inv);
  return true;
}

// C = M(D)^{-1}, indexed C[point][cell] with cells in ascending lex order.
std::vector<Scalar> separating_coefficients(const PointSet& a, const std::vector<Exponent>& cells) {
  if (cells.size() != a.size()) {
    throw std::logic_error("staircase has " + std::to_string(cells.size()) + " cells for " + std::to_string(a.size()) +
                           " points");
  }
  const EvaluationMatrix m(cells, a);
  std::vector<Scalar> entries;
  entries.reserve(a.size() * a.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const Scalar& x : m.row(i)) entries.push_back(x);
  }
  if (!invert(entries, a.size(), a.spec())) throw std::logic_error("evaluation matrix M(D) is singular");
  return entries;
}

}  // namespace

EvaluationMatrix::EvaluationMatrix(std::span<const Exponent> exponents, const PointSet& points)
    : exponents_(exponents.begin(), exponents.end()), cols_(points.size()) {
  entries_.reserve(rows() * cols_);
  for (const Exponent& e : exponents_) {
    if (e.size() != points.dimension()) throw std::invalid_argument("exponent has wrong dimension");
    for (const Point& p : points.points()) entries_.push_back(monomial_value(e, p));
  }
}

std::vector<Scalar> evaluation_row(const Exponent& beta, const PointSet& points) {
  std::vector<Scalar> row;
  row.reserve(points.size());
  for (const Point& p : points.points()) row.push_back(monomial_value(beta, p));
  return row;
}

bool rank_is_maximal(const EvaluationMatrix& m) {
  if (m.rows() > m.cols()) {
    throw std::logic_error("evaluation matrix has more rows (" + std::to_string(m.rows()) + ") than columns (" +
                           std::to_string(m.cols()) + ")");
  }
  if (m.rows() == 0) return true;
  RowEchelon echelon(m(0, 0).spec(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    if (!echelon.try_insert(std::vector<Scalar>(r.begin(), r.end()))) return false;
  }
  return true;
}

bool RowEchelon::try_insert(std::vector<Scalar> row) {
  if (row.size() != cols_) throw std::invalid_argument("row has wrong length");
  // Each stored row is zero at the pivots of the rows stored before it, so a
  // single pass in insertion order clears every pivot column.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    const std::vector<Scalar>& base = rows_[i];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!base[j].is_zero()) row[j] -= factor * base[j];
    }
  }
  const auto it = std::find_if(row.begin(), row.end(), [](const Scalar& x) { return !x.is_zero(); });
  if (it == row.end()) return false;
  const Scalar scale = it->inverse();
  for (Scalar& x : row) x *= scale;
  pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
  rows_.push_back(std::move(row));
  return true;
}

Staircase bm_staircase(const PointSet& a, BmStats* stats) {
  const std::size_t n = a.dimension();
  if (a.empty()) return Staircase(n);

  BmStats local;
  RowEchelon echelon(a.spec(), a.size());
  std::set<Exponent> gamma{Exponent(n)};
  echelon.try_insert(evaluation_row(Exponent(n), a));
  std::vector<Exponent> rejected;

  std::set<Exponent> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.insert(Exponent::unit(n, i));

  while (!candidates.empty()) {
    const Exponent beta = *candidates.begin();
    ++local.rank_tests;
    if (gamma.size() >= a.size()) {
      // Full rank already; every further row is dependent.
      rejected.push_back(beta);
      candidates.erase(candidates.begin());
      ++local.rejected;
      continue;
    }
    if (echelon.try_insert(evaluation_row(beta, a))) {
      gamma.insert(beta);
      candidates.clear();
      for (Exponent& e : limiting_set(Staircase::validate(gamma, n))) {
        const bool dominated =
            std::any_of(rejected.begin(), rejected.end(), [&](const Exponent& r) { return r.divides(e); });
        if (!dominated) candidates.insert(std::move(e));
      }
    } else {
      rejected.push_back(beta);
      candidates.erase(candidates.begin());
      ++local.rejected;
    }
  }
  if (stats != nullptr) *stats = local;
  return Staircase::validate(std::move(gamma), n);
}

std::vector<Polynomial> separating_polynomials(const PointSet& a, const Staircase& d) {
  const std::vector<Exponent> cells(d.cells().begin(), d.cells().end());
  const std::vector<Scalar> c = separating_coefficients(a, cells);
  std::vector<Polynomial> out;
  out.reserve(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    std::vector<Term> terms;
    for (std::size_t g = 0; g < cells.size(); ++g) {
      if (!c[p * cells.size() + g].is_zero()) terms.push_back(Term{cells[g], c[p * cells.size() + g]});
    }
    out.push_back(Polynomial::from_terms(a.dimension(), a.spec(), std::move(terms)));
  }
  return out;
}

GroebnerBasis bm_gb(const PointSet& a, BmStats* stats) {
  const std::size_t n = a.dimension();
  GroebnerBasis out{bm_staircase(a, stats), {}};
  if (a.empty()) {
    out.elements.push_back(Polynomial::constant(n, Scalar::one(a.spec())));
    return out;
  }
  const std::vector<Exponent> cells(out.staircase.cells().begin(), out.staircase.cells().end());
  const std::vector<Scalar> c = separating_coefficients(a, cells);
  const std::size_t size = cells.size();
  for (const Exponent& beta : limiting_set(out.staircase)) {
    const std::vector<Scalar> values = evaluation_row(beta, a);
    std::vector<Term> terms{Term{beta, Scalar::one(a.spec())}};
    for (std::size_t g = 0; g < size; ++g) {
      Scalar coeff = Scalar::zero(a.spec());
      for (std::size_t p = 0; p < a.size(); ++p) coeff += values[p] * c[p * size + g];
      if (!coeff.is_zero()) terms.push_back(Term{cells[g], -coeff});
    }
    out.elements.push_back(Polynomial::from_terms(n, a.spec(), std::move(terms)));
  }
  return out;
}

}  // namespace vanish
