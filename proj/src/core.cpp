#include "vanish/core.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vanish/interp.hpp"

namespace vanish {

namespace {

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return canonical_compare(a, b) < 0; }
};

bool is_corner(const Staircase& d, const Exponent& beta) {
  if (d.contains(beta)) return false;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    Exponent below = beta;
    --below[i];
    if (!d.contains(below)) return false;
  }
  return true;
}

Staircase staircase_from_slices(std::span<const GroebnerBasis> slice_gbs, std::size_t n) {
  std::vector<Staircase> lifted;
  lifted.reserve(slice_gbs.size());
  for (const GroebnerBasis& g : slice_gbs) lifted.push_back(lift_slice(g.staircase));
  return staircase_sum(lifted, n);
}

PhiParts phi_parts_unchecked(const Exponent& beta, const PointSet& a, const SliceDecomposition& slices,
                             std::span<const GroebnerBasis> slice_gbs) {
  const std::size_t n = a.dimension();
  const FieldSpec& spec = a.spec();
  const Exponent beta_hat = beta.drop_first();

  PhiParts parts{{}, {}, Polynomial(n, spec), Polynomial(n, spec)};
  std::vector<const GroebnerBasis*> t_gbs;
  for (std::size_t i = 0; i < slices.slices.size(); ++i) {
    if (slice_gbs[i].staircase.contains(beta_hat)) {
      parts.s_keys.push_back(slices.slices[i].key);
    } else {
      parts.t_keys.push_back(slices.slices[i].key);
      t_gbs.push_back(&slice_gbs[i]);
    }
  }

  const Exponent lifted_beta_hat = beta_hat.prepend(0);
  std::vector<Term> theta_terms{Term{lifted_beta_hat, Scalar::one(spec)}};
  if (!parts.t_keys.empty()) {
    const std::vector<Polynomial> chis = char_polys(ValueSet(spec, parts.t_keys));
    for (std::size_t i = 0; i < chis.size(); ++i) {
      // Coefficients c_{beta_hat, a_1, gamma_hat} are the tail of the slice representative.
      const Polynomial tail = slice_representative(beta_hat, *t_gbs[i]).tail().embed(n, 1);
      const Polynomial chi = chis[i].embed(n, 0);
      for (const Term& c : chi.terms()) {
        for (const Term& g : tail.terms()) theta_terms.push_back(Term{c.exponent + g.exponent, c.coeff * g.coeff});
      }
    }
  }
  parts.theta = Polynomial::from_terms(n, spec, std::move(theta_terms));

  std::vector<Scalar> s_values = parts.s_keys;
  Polynomial factor = univariate_vanishing(ValueSet(spec, std::move(s_values))).embed(n, 0);
  parts.phi = factor * parts.theta;
  return parts;
}

InductiveTrace solve(const PointSet& a, bool record_steps) {
  const std::size_t n = a.dimension();
  const FieldSpec& spec = a.spec();
  InductiveTrace out{GroebnerBasis{Staircase(n), {}}, {}};

  if (a.empty()) {
    out.basis.elements.push_back(Polynomial::constant(n, Scalar::one(spec)));
    return out;
  }

  if (n == 1) {
    std::vector<Scalar> values;
    for (const Point& p : a.points()) values.push_back(p[0]);
    out.basis.staircase = Staircase::interval(a.size());
    out.basis.elements.push_back(univariate_vanishing(ValueSet(spec, std::move(values))));
    return out;
  }

  const SliceDecomposition slices = slice_decompose(a);
  std::vector<GroebnerBasis> slice_gbs;
  slice_gbs.reserve(slices.slices.size());
  for (const Slice& s : slices.slices) slice_gbs.push_back(solve(s.points, false).basis);

  Staircase staircase = staircase_from_slices(slice_gbs, n);
  const std::vector<Exponent> corners = limiting_set(staircase);

  // Corners in increasing lex order; phi_lambda is reduced only by elements
  // whose corners are smaller.
  std::vector<Polynomial> built;
  built.reserve(corners.size());
  for (const Exponent& corner : corners) {
    PhiParts parts = phi_parts_unchecked(corner, a, slices, slice_gbs);
    DivisionResult division = divide(parts.phi, built);
    Polynomial& reduced = division.remainder;
    if (reduced.is_zero() || reduced.leading_exponent() != corner || !reduced.is_monic()) {
      throw std::logic_error("reduction of phi" + corner.to_string() + " lost its leading term " +
                             corner.to_string());
    }
    built.push_back(reduced);
    if (record_steps) {
      out.steps.push_back(CornerStep{corner, std::move(parts), std::move(division.quotients), reduced});
    }
  }

  // Intermediate tails only avoid the cones of smaller corners; reduce
  // against the full basis so every tail lies in the staircase.
  std::vector<Polynomial> reduced_basis;
  reduced_basis.reserve(built.size());
  for (const Exponent& corner : corners) {
    const Polynomial monomial = Polynomial::monomial(corner, Scalar::one(spec));
    reduced_basis.push_back(monomial - normal_form(monomial, built));
  }

  out.basis.staircase = std::move(staircase);
  out.basis.elements = std::move(reduced_basis);
  return out;
}

}  // namespace

std::vector<Scalar> SliceDecomposition::keys() const {
  std::vector<Scalar> out;
  out.reserve(slices.size());
  for (const Slice& s : slices) out.push_back(s.key);
  return out;
}

std::vector<Exponent> GroebnerBasis::leading_exponents() const {
  std::vector<Exponent> out;
  out.reserve(elements.size());
  for (const Polynomial& f : elements) out.push_back(f.leading_exponent());
  return out;
}

SliceDecomposition slice_decompose(const PointSet& a) {
  if (a.dimension() < 2) throw std::invalid_argument("slicing needs dimension >= 2");
  if (a.empty()) throw std::invalid_argument("slicing needs a nonempty point set");
  std::map<Scalar, std::vector<Point>, ScalarLess> groups;
  for (const Point& p : a.points()) groups[p[0]].push_back(p.drop_first());
  SliceDecomposition out;
  out.slices.reserve(groups.size());
  for (auto& [key, points] : groups) {
    out.slices.push_back(Slice{key, PointSet(a.dimension() - 1, a.spec(), std::move(points))});
  }
  return out;
}

Staircase compute_staircase(const PointSet& a) {
  if (a.empty()) return Staircase(a.dimension());
  if (a.dimension() == 1) return Staircase::interval(a.size());
  const SliceDecomposition slices = slice_decompose(a);
  std::vector<Staircase> lifted;
  lifted.reserve(slices.slices.size());
  for (const Slice& s : slices.slices) lifted.push_back(lift_slice(compute_staircase(s.points)));
  return staircase_sum(lifted, a.dimension());
}

Polynomial slice_representative(const Exponent& beta_hat, const GroebnerBasis& slice_gb) {
  if (beta_hat.size() != slice_gb.dimension()) throw std::invalid_argument("exponent has wrong dimension");
  if (slice_gb.staircase.contains(beta_hat)) {
    throw std::invalid_argument("exponent " + beta_hat.to_string() + " lies inside the slice staircase");
  }
  const Polynomial monomial = Polynomial::monomial(beta_hat, Scalar::one(slice_gb.elements.front().spec()));
  return monomial - normal_form(monomial, slice_gb.elements);
}

PhiParts build_phi_parts(const Exponent& beta, const PointSet& a, const SliceDecomposition& slices,
                         std::span<const GroebnerBasis> slice_gbs) {
  if (a.dimension() < 2) throw std::invalid_argument("phi needs dimension >= 2");
  if (beta.size() != a.dimension()) throw std::invalid_argument("exponent has wrong dimension");
  if (slice_gbs.size() != slices.slices.size()) throw std::invalid_argument("one slice basis per slice is required");
  const Staircase d = staircase_from_slices(slice_gbs, a.dimension());
  if (!is_corner(d, beta)) throw std::invalid_argument(beta.to_string() + " is not a corner of D(A)");
  return phi_parts_unchecked(beta, a, slices, slice_gbs);
}

Polynomial build_phi(const Exponent& beta, const PointSet& a, const SliceDecomposition& slices,
                     std::span<const GroebnerBasis> slice_gbs) {
  return build_phi_parts(beta, a, slices, slice_gbs).phi;
}

GroebnerBasis inductive_gb(const PointSet& a) { return solve(a, false).basis; }

InductiveTrace inductive_gb_traced(const PointSet& a) { return solve(a, true); }

std::size_t quotient_dimension(const GroebnerBasis& gb) { return gb.staircase.size(); }

}  // namespace vanish
