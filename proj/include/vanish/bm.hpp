#ifndef VANISH_BM_HPP
#define VANISH_BM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "vanish/core.hpp"

namespace vanish {

/// Rows indexed by exponents gamma, columns by points a; entry a^gamma.
class EvaluationMatrix {
 public:
  EvaluationMatrix(std::span<const Exponent> exponents, const PointSet& points);

  std::size_t rows() const noexcept { return exponents_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  std::vector<Exponent> exponents_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// The row a^beta of the evaluation matrix.
std::vector<Scalar> evaluation_row(const Exponent& beta, const PointSet& points);

/// True iff the rows are linearly independent, by exact Gaussian elimination.
/// Throws std::logic_error if there are more rows than columns.
bool rank_is_maximal(const EvaluationMatrix& m);

/// Rows kept in reduced echelon form so that testing a new row for
/// independence costs O(rank * cols).
class RowEchelon {
 public:
  RowEchelon(FieldSpec spec, std::size_t cols) : spec_(spec), cols_(cols) {}

  /// Adds the row if it is independent of the rows so far; returns whether it was.
  bool try_insert(std::vector<Scalar> row);
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  FieldSpec spec_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

struct BmStats {
  std::size_t rank_tests = 0;
  std::size_t rejected = 0;
};

/// Discovers D(A) by rank tests on lex-minimal candidates, starting from
/// Gamma = {0} and B = {e_1, ..., e_n}. Empty A gives the empty staircase.
Staircase bm_staircase(const PointSet& a, BmStats* stats = nullptr);

/// chi_a supported on the staircase with chi_a(a') = delta_{a,a'}, one per
/// point in input order. Throws std::logic_error if M(D) is singular.
std::vector<Polynomial> separating_polynomials(const PointSet& a, const Staircase& d);

/// f_beta = X^beta - sum_a a^beta chi_a for every corner beta.
GroebnerBasis bm_gb(const PointSet& a, BmStats* stats = nullptr);

}  // namespace vanish

#endif  // VANISH_BM_HPP
