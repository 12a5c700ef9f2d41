#include "vanish/field.hpp"

#include <ostream>
#include <stdexcept>

namespace vanish {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

u64 reduce_mpz(const mpz_class& value, u64 p) {
  mpz_class r;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

// Extended Euclid; requires gcd(a, p) = 1 and a != 0.
u64 inverse_mod(u64 a, u64 p) {
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p not prime: " + std::to_string(p));
  return FieldSpec(Kind::Prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& spec) {
  if (spec.is_rational()) return Scalar(mpq_class(0));
  return Scalar(Residue{0, spec.modulus()});
}

Scalar Scalar::one(const FieldSpec& spec) {
  if (spec.is_rational()) return Scalar(mpq_class(1));
  return Scalar(Residue{1, spec.modulus()});
}

Scalar Scalar::from_int(long value, const FieldSpec& spec) {
  if (spec.is_rational()) return Scalar(mpq_class(value));
  const auto p = static_cast<__int128>(spec.modulus());
  __int128 r = static_cast<__int128>(value) % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<u64>(r), spec.modulus()});
}

Scalar Scalar::from_mpz(const mpz_class& value, const FieldSpec& spec) {
  if (spec.is_rational()) return Scalar(mpq_class(value));
  return Scalar(Residue{reduce_mpz(value, spec.modulus()), spec.modulus()});
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& spec) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (spec.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const u64 d = reduce_mpz(den, spec.modulus());
  if (d == 0) throw std::domain_error("denominator is divisible by p");
  return from_mpz(num, spec) * Scalar(Residue{d, spec.modulus()}).inverse();
}

FieldSpec Scalar::spec() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    // Residues are only created from validated specs.
    return FieldSpec(FieldSpec::Kind::Prime, r->modulus);
  }
  return FieldSpec::rational();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw std::invalid_argument("field mismatch");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar Scalar::pow(unsigned exponent) const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, exponent, r->modulus), r->modulus});
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), exponent);
  return Scalar(std::move(out));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const u64 b = std::get<Residue>(rhs.value_).value;
    const u64 threshold = r->modulus - b;
    r->value = r->value >= threshold ? r->value - threshold : r->value + b;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const u64 b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->modulus - b);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra != nullptr && rb != nullptr) return ra->value == rb->value && ra->modulus == rb->modulus;
  if (ra != nullptr || rb != nullptr) return false;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_)) {
    return ra->value <=> std::get<Scalar::Residue>(b.value_).value;
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c <=> 0;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational_value() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  if (q == nullptr) throw std::logic_error("not a rational scalar");
  return *q;
}

std::uint64_t Scalar::residue() const {
  const auto* r = std::get_if<Residue>(&value_);
  if (r == nullptr) throw std::logic_error("not a prime-field scalar");
  return r->value;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const FieldSpec& spec) {
  const std::string_view original = text;
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  std::string_view num_text = text;
  std::string_view den_text;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num_text = text.substr(0, slash);
    den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed scalar: \"" + std::string(original) + "\"");
    }
  }
  if (!all_digits(num_text)) {
    throw std::invalid_argument("malformed scalar: \"" + std::string(original) + "\"");
  }
  mpz_class num(std::string(num_text), 10);
  if (negative) num = -num;
  if (den_text.empty()) return Scalar::from_mpz(num, spec);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw std::domain_error("zero denominator in \"" + std::string(original) + "\"");
  return Scalar::from_fraction(num, den, spec);
}

}  // namespace vanish
