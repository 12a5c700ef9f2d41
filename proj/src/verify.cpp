#include "vanish/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanish {

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult check_vanishing(const GroebnerBasis& gb, const PointSet& a) {
  if (gb.dimension() != a.dimension()) throw std::invalid_argument("basis and points differ in dimension");
  CheckResult result{"vanishing", true, {}};
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Polynomial& f = gb.elements[i];
    if (f.spec() != a.spec()) throw std::invalid_argument("basis and points differ in field");
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Scalar value = f.evaluate(a[j].coords());
      if (!value.is_zero()) {
        result.passed = false;
        result.witness = "element " + std::to_string(i) + " [" + f.to_string() + "] is " + value.to_string() +
                         " at point " + std::to_string(j) + " " + a[j].to_string();
        return result;
      }
    }
  }
  return result;
}

CheckResult check_reduced_shape(const GroebnerBasis& gb) {
  CheckResult result{"reduced_shape", true, {}};
  auto fail = [&](std::string witness) {
    result.passed = false;
    result.witness = std::move(witness);
    return result;
  };
  const std::vector<Exponent> corners = limiting_set(gb.staircase);
  std::vector<Exponent> leads;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Polynomial& f = gb.elements[i];
    if (f.dimension() != gb.dimension()) return fail("element " + std::to_string(i) + " has wrong dimension");
    if (f.is_zero()) return fail("element " + std::to_string(i) + " is zero");
    if (!f.is_monic()) return fail("element " + std::to_string(i) + " is not monic: " + f.to_string());
    const Exponent& lead = f.leading_exponent();
    if (std::find(corners.begin(), corners.end(), lead) == corners.end()) {
      return fail("leading exponent " + lead.to_string() + " of element " + std::to_string(i) +
                  " is not a corner of the staircase");
    }
    if (std::find(leads.begin(), leads.end(), lead) != leads.end()) {
      return fail("corner " + lead.to_string() + " is used twice");
    }
    leads.push_back(lead);
    const Polynomial tail = f.tail();
    for (const Term& t : tail.terms()) {
      if (!gb.staircase.contains(t.exponent)) {
        return fail("tail exponent " + t.exponent.to_string() + " of element " + std::to_string(i) +
                    " is outside the staircase");
      }
    }
  }
  for (const Exponent& c : corners) {
    if (std::find(leads.begin(), leads.end(), c) == leads.end()) {
      return fail("corner " + c.to_string() + " has no basis element");
    }
  }
  return result;
}

CheckResult check_buchberger(const GroebnerBasis& gb) {
  CheckResult result{"buchberger", true, {}};
  const auto& elements = gb.elements;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].is_zero() || !elements[i].is_monic()) {
      result.passed = false;
      result.witness = "element " + std::to_string(i) + " is not monic";
      return result;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (elements[j].leading_exponent() == elements[i].leading_exponent()) {
        result.passed = false;
        result.witness = "elements " + std::to_string(j) + " and " + std::to_string(i) + " share a leading exponent";
        return result;
      }
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const Polynomial r = normal_form(s_polynomial(elements[i], elements[j]), elements);
      if (!r.is_zero()) {
        result.passed = false;
        result.witness = "S(" + std::to_string(i) + "," + std::to_string(j) + ") reduces to " + r.to_string();
        return result;
      }
    }
  }
  return result;
}

CheckResult check_dimension(const GroebnerBasis& gb, const PointSet& a) {
  CheckResult result{"dimension", gb.staircase.size() == a.size(), {}};
  if (!result.passed) {
    result.witness = std::to_string(gb.staircase.size()) + " != " + std::to_string(a.size());
  }
  return result;
}

VerificationReport verify_basis(const GroebnerBasis& gb, const PointSet& a) {
  return VerificationReport{{check_vanishing(gb, a), check_reduced_shape(gb), check_buchberger(gb), check_dimension(gb, a)}};
}

}  // namespace vanish
