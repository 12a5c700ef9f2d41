#include "vanish/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vanish {

Exponent Exponent::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit exponent index out of range");
  Exponent e(n);
  e.coords_[i] = 1;
  return e;
}

bool Exponent::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](unsigned c) { return c == 0; });
}

unsigned Exponent::total_degree() const noexcept {
  unsigned d = 0;
  for (unsigned c : coords_) d += c;
  return d;
}

bool Exponent::divides(const Exponent& other) const {
  if (size() != other.size()) throw std::invalid_argument("exponent dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] += rhs.coords_[i];
  return out;
}

Exponent Exponent::operator-(const Exponent& rhs) const {
  if (!rhs.divides(*this)) throw std::invalid_argument("exponent difference would be negative");
  Exponent out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] -= rhs.coords_[i];
  return out;
}

Exponent Exponent::lcm(const Exponent& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("exponent dimension mismatch");
  Exponent out = *this;
  for (std::size_t i = 0; i < size(); ++i) out.coords_[i] = std::max(coords_[i], rhs.coords_[i]);
  return out;
}

Exponent Exponent::drop_first() const {
  if (coords_.empty()) throw std::invalid_argument("cannot drop a coordinate of a 0-dimensional exponent");
  return Exponent(std::vector<unsigned>(coords_.begin() + 1, coords_.end()));
}

Exponent Exponent::prepend(unsigned first) const {
  std::vector<unsigned> c;
  c.reserve(coords_.size() + 1);
  c.push_back(first);
  c.insert(c.end(), coords_.begin(), coords_.end());
  return Exponent(std::move(c));
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent dimension mismatch");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.coords_[i] != b.coords_[i]) return a.coords_[i] <=> b.coords_[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Exponent& a, const Exponent& b) { return a <=> b; }

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.to_string(); }

namespace {

bool term_greater(const Term& a, const Term& b) { return a.exponent > b.exponent; }

// Merges two descending term lists, the second scaled by `sign`.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = a[i].exponent <=> b[j].exponent;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].exponent, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(subtract ? Term{b[j].exponent, -b[j].coeff} : b[j]);
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
  Polynomial p(n, c.spec());
  if (!c.is_zero()) p.terms_.push_back(Term{Exponent(n), c});
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Scalar& c) {
  Polynomial p(e.size(), c.spec());
  if (!c.is_zero()) p.terms_.push_back(Term{e, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i, const FieldSpec& spec) {
  return monomial(Exponent::unit(n, i), Scalar::one(spec));
}

Polynomial Polynomial::from_terms(std::size_t n, FieldSpec spec, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.exponent.size() != n) throw std::invalid_argument("term dimension mismatch");
    if (t.coeff.spec() != spec) throw std::invalid_argument("term field mismatch");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(n, spec);
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

Polynomial Polynomial::tail() const {
  Polynomial p(n_, spec_);
  if (!terms_.empty()) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Scalar Polynomial::coefficient(const Exponent& e) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& x) { return t.exponent > x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return Scalar::zero(spec_);
}

void Polynomial::require_compatible(const Polynomial& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("polynomial dimension mismatch");
  if (spec_ != rhs.spec_) throw std::invalid_argument("polynomial field mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_compatible(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_compatible(rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_compatible(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.n_, lhs.spec_);
  if (rhs.size() == 1) return lhs.mul_term(rhs.terms_[0].exponent, rhs.terms_[0].coeff);
  if (lhs.size() == 1) return rhs.mul_term(lhs.terms_[0].exponent, lhs.terms_[0].coeff);
  std::vector<Term> products;
  products.reserve(lhs.size() * rhs.size());
  for (const Term& a : lhs.terms_) {
    for (const Term& b : rhs.terms_) products.push_back(Term{a.exponent + b.exponent, a.coeff * b.coeff});
  }
  return Polynomial::from_terms(lhs.n_, lhs.spec_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.spec() != spec_) throw std::invalid_argument("polynomial field mismatch");
  Polynomial p(n_, spec_);
  if (c.is_zero()) return p;
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Exponent& e, const Scalar& c) const {
  if (e.size() != n_) throw std::invalid_argument("polynomial dimension mismatch");
  if (c.spec() != spec_) throw std::invalid_argument("polynomial field mismatch");
  Polynomial p(n_, spec_);
  if (c.is_zero()) return p;
  // Multiplication by a monomial preserves the lex order of the terms.
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.exponent + e, t.coeff * c});
  return p;
}

void Polynomial::sub_mul_term(const Exponent& e, const Scalar& c, const Polynomial& g) {
  require_compatible(g);
  const Polynomial shifted = g.mul_term(e, c);
  terms_ = merge_terms(terms_, shifted.terms_, true);
}

Polynomial Polynomial::made_monic() const {
  if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  return scaled(leading_coeff().inverse());
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != n_) throw std::invalid_argument("point dimension mismatch");
  for (const Scalar& x : point) {
    if (x.spec() != spec_) throw std::invalid_argument("point field mismatch");
  }
  Scalar sum = Scalar::zero(spec_);
  for (const Term& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < n_; ++i) {
      if (t.exponent[i] != 0) v *= point[i].pow(t.exponent[i]);
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::embed(std::size_t n, std::size_t offset) const {
  if (offset + n_ > n) throw std::invalid_argument("embedding does not fit target dimension");
  Polynomial p(n, spec_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exponent e(n);
    for (std::size_t i = 0; i < n_; ++i) e[i + offset] = t.exponent[i];
    p.terms_.push_back(Term{std::move(e), t.coeff});
  }
  // The embedding is order preserving only when offset = 0 and n = n_.
  std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
  return p;
}

namespace {

std::string monomial_text(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string m = monomial_text(t.exponent);
    if (m.empty()) {
      os << c;
    } else if (c == "1") {
      os << m;
    } else {
      os << c << "*" << m;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Polynomial& b = basis[i];
    if (b.dimension() != f.dimension() || b.spec() != f.spec()) {
      throw std::invalid_argument("basis element " + std::to_string(i) + " is incompatible with dividend");
    }
    if (!b.is_monic()) throw std::invalid_argument("basis element " + std::to_string(i) + " is not monic");
    for (std::size_t j = 0; j < i; ++j) {
      if (basis[j].leading_exponent() == b.leading_exponent()) {
        throw std::invalid_argument("duplicate leading exponent " + b.leading_exponent().to_string());
      }
    }
  }

  DivisionResult result{std::vector<Polynomial>(basis.size(), Polynomial(f.dimension(), f.spec())),
                        Polynomial(f.dimension(), f.spec())};
  std::vector<Term> remainder;
  Polynomial work = f;
  while (!work.is_zero()) {
    const Term lead = work.leading_term();
    std::size_t chosen = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].leading_exponent().divides(lead.exponent) &&
          (chosen == basis.size() || basis[i].leading_exponent() < basis[chosen].leading_exponent())) {
        chosen = i;
      }
    }
    if (chosen == basis.size()) {
      // Terms leave `work` in decreasing order, so `remainder` stays sorted.
      remainder.push_back(lead);
      work = work.tail();
      continue;
    }
    const Exponent shift = lead.exponent - basis[chosen].leading_exponent();
    work.sub_mul_term(shift, lead.coeff, basis[chosen]);
    result.quotients[chosen] += Polynomial::monomial(shift, lead.coeff);
  }
  result.remainder = Polynomial::from_terms(f.dimension(), f.spec(), std::move(remainder));
  return result;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  return divide(f, basis).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  if (f.dimension() != g.dimension() || f.spec() != g.spec()) {
    throw std::invalid_argument("S-polynomial operands are incompatible");
  }
  const Exponent l = f.leading_exponent().lcm(g.leading_exponent());
  Polynomial s = f.mul_term(l - f.leading_exponent(), f.leading_coeff().inverse());
  s.sub_mul_term(l - g.leading_exponent(), g.leading_coeff().inverse(), g);
  return s;
}

}  // namespace vanish
