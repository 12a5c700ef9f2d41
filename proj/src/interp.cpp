#include "vanish/interp.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanish {

namespace {

// Dense coefficients, index = degree.
using Dense = std::vector<Scalar>;

Polynomial from_dense(const Dense& coeffs, const FieldSpec& spec) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) terms.push_back(Term{Exponent{static_cast<unsigned>(k)}, coeffs[k]});
  }
  return Polynomial::from_terms(1, spec, std::move(terms));
}

// Multiplies in place by (X - root).
void mul_linear(Dense& coeffs, const Scalar& root) {
  coeffs.push_back(Scalar::zero(root.spec()));
  for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = coeffs[k - 1] - root * coeffs[k];
  coeffs[0] = -(root * coeffs[0]);
}

}  // namespace

ValueSet::ValueSet(FieldSpec spec, std::vector<Scalar> values) : spec_(spec), values_(std::move(values)) {
  for (const Scalar& v : values_) {
    if (v.spec() != spec_) throw std::invalid_argument("value set field mismatch");
  }
  std::vector<const Scalar*> sorted;
  for (const Scalar& v : values_) sorted.push_back(&v);
  std::sort(sorted.begin(), sorted.end(), [](const Scalar* a, const Scalar* b) { return canonical_compare(*a, *b) < 0; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (*sorted[i] == *sorted[i - 1]) throw std::invalid_argument("duplicate value " + sorted[i]->to_string());
  }
}

bool ValueSet::contains(const Scalar& x) const {
  return std::find(values_.begin(), values_.end(), x) != values_.end();
}

Polynomial char_poly(const ValueSet& t, const Scalar& a) {
  if (!t.contains(a)) throw std::invalid_argument(a.to_string() + " is not in the value set");
  Dense coeffs{Scalar::one(t.spec())};
  Scalar denominator = Scalar::one(t.spec());
  for (const Scalar& b : t.values()) {
    if (b == a) continue;
    mul_linear(coeffs, b);
    denominator *= a - b;
  }
  const Scalar scale = denominator.inverse();
  for (Scalar& c : coeffs) c *= scale;
  return from_dense(coeffs, t.spec());
}

std::vector<Polynomial> char_polys(const ValueSet& t) {
  Dense master{Scalar::one(t.spec())};
  for (const Scalar& b : t.values()) mul_linear(master, b);

  std::vector<Polynomial> out;
  out.reserve(t.size());
  const std::size_t deg = t.size();
  for (const Scalar& a : t.values()) {
    // master / (X - a) by synthetic division; the remainder is master(a) = 0.
    Dense quotient(deg, Scalar::zero(t.spec()));
    Scalar carry = Scalar::zero(t.spec());
    for (std::size_t k = deg; k-- > 0;) {
      carry = master[k + 1] + a * carry;
      quotient[k] = carry;
    }
    // The quotient at a equals prod_{b != a} (a - b).
    Scalar at_a = Scalar::zero(t.spec());
    for (std::size_t k = deg; k-- > 0;) at_a = at_a * a + quotient[k];
    const Scalar scale = at_a.inverse();
    for (Scalar& c : quotient) c *= scale;
    out.push_back(from_dense(quotient, t.spec()));
  }
  return out;
}

Polynomial univariate_vanishing(const ValueSet& v) {
  Dense coeffs{Scalar::one(v.spec())};
  for (const Scalar& b : v.values()) mul_linear(coeffs, b);
  return from_dense(coeffs, v.spec());
}

}  // namespace vanish
