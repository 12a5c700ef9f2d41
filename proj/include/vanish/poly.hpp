#ifndef VANISH_POLY_HPP
#define VANISH_POLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vanish/field.hpp"

namespace vanish {

/// A monomial exponent in N_0^n.
class Exponent {
 public:
  Exponent() = default;
  /// The zero exponent of dimension n.
  explicit Exponent(std::size_t n) : coords_(n, 0) {}
  explicit Exponent(std::vector<unsigned> coords) : coords_(std::move(coords)) {}
  Exponent(std::initializer_list<unsigned> coords) : coords_(coords) {}

  /// e_i, with i zero-based.
  static Exponent unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  unsigned operator[](std::size_t i) const { return coords_[i]; }
  unsigned& operator[](std::size_t i) { return coords_[i]; }
  std::span<const unsigned> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  unsigned total_degree() const noexcept;

  /// True iff this exponent is coordinatewise <= other.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& rhs) const;
  /// Throws std::invalid_argument unless rhs divides *this.
  Exponent operator-(const Exponent& rhs) const;

  /// Coordinatewise maximum.
  Exponent lcm(const Exponent& rhs) const;

  /// Drops coordinate 1 (the map written p-hat on exponents).
  Exponent drop_first() const;
  /// Prepends a new first coordinate.
  Exponent prepend(unsigned first) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  /// Lex order with X_1 < ... < X_n: the last differing coordinate decides.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  std::string to_string() const;

 private:
  std::vector<unsigned> coords_;
};

/// Same as operator<=>; throws std::invalid_argument on a dimension mismatch.
std::strong_ordering lex_compare(const Exponent& a, const Exponent& b);

std::ostream& operator<<(std::ostream& os, const Exponent& e);

struct Term {
  Exponent exponent;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in k[X_1, ..., X_n]. Terms are kept sorted by strictly
/// decreasing lex exponent with nonzero coefficients, so the leading term is
/// terms().front().
class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial(std::size_t n, FieldSpec spec) : n_(n), spec_(spec) {}

  static Polynomial constant(std::size_t n, const Scalar& c);
  static Polynomial monomial(const Exponent& e, const Scalar& c);
  /// X_{i+1}, zero-based index.
  static Polynomial variable(std::size_t n, std::size_t i, const FieldSpec& spec);
  /// Sorts, merges equal exponents and drops zero coefficients.
  static Polynomial from_terms(std::size_t n, FieldSpec spec, std::vector<Term> terms);

  std::size_t dimension() const noexcept { return n_; }
  const FieldSpec& spec() const noexcept { return spec_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Precondition: nonzero.
  const Term& leading_term() const;
  const Exponent& leading_exponent() const { return leading_term().exponent; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  bool is_monic() const { return !is_zero() && leading_coeff().is_one(); }

  /// Everything but the leading term.
  Polynomial tail() const;

  Scalar coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  /// Multiplication by c * X^e.
  Polynomial mul_term(const Exponent& e, const Scalar& c) const;
  /// this -= c * X^e * g, in place.
  void sub_mul_term(const Exponent& e, const Scalar& c, const Polynomial& g);
  /// Returns this polynomial divided by its leading coefficient.
  Polynomial made_monic() const;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Maps X_i to X_{i+offset} in a ring of dimension n.
  Polynomial embed(std::size_t n, std::size_t offset) const;

  /// Descending lex order, e.g. "X2^2 - 3/2*X1*X2 - 1/2*X2 + 2*X1 - 2".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void require_compatible(const Polynomial& rhs) const;

  std::size_t n_;
  FieldSpec spec_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

struct DivisionResult {
  /// One quotient per basis element, in basis order.
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division by a monic basis with distinct leading exponents.
/// The lex-greatest reducible term is cancelled first; among basis elements
/// whose leading exponent divides it, the one with the smallest leading
/// exponent is used. f = sum(q_i * b_i) + remainder, and no remainder term is
/// divisible by any leading exponent. Throws std::invalid_argument on a
/// non-monic basis element or duplicate leading exponents.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Throws std::invalid_argument on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace vanish

#endif  // VANISH_POLY_HPP
