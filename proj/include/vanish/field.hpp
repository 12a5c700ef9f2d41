#ifndef VANISH_FIELD_HPP
#define VANISH_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace vanish {

/// The coefficient field: either the rationals or a prime field F_p with p < 2^64.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() noexcept { return FieldSpec(Kind::Rational, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  /// Zero for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }

  /// "rational" or "prime:<p>".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// Deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p). Equality is therefore
/// representational equality.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar from_int(long value, const FieldSpec& spec);
  static Scalar from_mpz(const mpz_class& value, const FieldSpec& spec);
  /// Throws std::domain_error if the denominator vanishes (in Q or mod p).
  static Scalar from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& spec);

  FieldSpec spec() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws std::domain_error for zero.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical total order within one field: numeric for Q, by residue for F_p.
  /// Throws std::invalid_argument on field mismatch.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  /// "a", "-a", "a/b" for Q; the residue in [0, p) for F_p.
  std::string to_string() const;

  /// Only meaningful for rationals.
  const mpq_class& rational_value() const;
  /// Only meaningful for residues.
  std::uint64_t residue() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void require_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Parses `['-'] digit+ ['/' digit+]`. Throws std::invalid_argument on malformed
/// text and std::domain_error on a zero (or, mod p, non-invertible) denominator.
Scalar parse_scalar(std::string_view text, const FieldSpec& spec);

}  // namespace vanish

#endif  // VANISH_FIELD_HPP
