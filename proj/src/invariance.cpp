#include "folner/invariance.hpp"

#include "folner/boxes.hpp"

#include <algorithm>

namespace folner {

namespace {

FiniteSubset box_set(const GroupModel* m, const ZdBox& b) {
  return FiniteSubset::box(*static_cast<const ZdGroup*>(m), b);
}

}  // namespace

FiniteSubset boundary(const FiniteSubset& K, const FiniteSubset& E) {
  if (K.empty()) throw DegenerateInputError("boundary: K must be nonempty");
  require_same_model(E, K);
  if (E.empty()) return FiniteSubset(E.model(), {});

  if (auto eb = E.as_box()) {
    if (auto kb = K.as_box()) {
      const FiniteSubset cl = box_set(E.model(), *closure_box(*eb, *kb));
      const FiniteSubset in = box_set(E.model(), *interior_box(*eb, *kb));
      return set_difference(cl, in);
    }
  }

  const GroupModel* m = E.model();
  const FiniteSubset inside = tile_candidates(E, K);
  ElementSet inside_set = inside.as_hash_set();
  ElementSet e_set = E.as_hash_set();

  // Crossing translate centers: gK meets E but gK is not inside E.
  ElementSet crossing;
  const FiniteSubset K_inv = inverse_set(K);
  for (const auto& e : E)
    for (const auto& ki : K_inv) {
      GroupElement g = m->multiply(e, ki);
      if (!inside_set.count(g)) crossing.insert(g);
    }

  ElementSet out;
  for (const auto& g : crossing)
    for (const auto& k : K) out.insert(m->multiply(g, k));
  return FiniteSubset::from_unordered(m, out);
}

std::int64_t boundary_size(const FiniteSubset& K, const FiniteSubset& E) {
  if (E.empty()) return 0;
  if (auto eb = E.as_box()) {
    if (auto kb = K.as_box())
      return closure_box(*eb, *kb)->volume() - interior_box(*eb, *kb)->volume();
  }
  return boundary(K, E).cardinality();
}

FiniteSubset interior(const FiniteSubset& K, const FiniteSubset& E) {
  if (auto eb = E.as_box()) {
    if (auto kb = K.as_box()) return box_set(E.model(), *interior_box(*eb, *kb));
  }
  return set_difference(E, boundary(K, E));
}

FiniteSubset closure(const FiniteSubset& K, const FiniteSubset& E) {
  if (E.empty()) return E;
  if (auto eb = E.as_box()) {
    if (auto kb = K.as_box()) return box_set(E.model(), *closure_box(*eb, *kb));
  }
  return set_union(E, boundary(K, E));
}

InvarianceReport is_invariant(const FiniteSubset& E, const Rational& eps, const FiniteSubset& K) {
  if (E.empty()) throw DegenerateInputError("is_invariant: |E| = 0");
  require_same_model(E, K);
  InvarianceReport r;
  r.base_measure = E.cardinality();
  r.excess_right = product_excess(E, K);
  r.excess_left = product_excess(E, inverse_set(K));
  r.ratio_right = Rational(r.excess_right, r.base_measure);
  r.ratio_left = Rational(r.excess_left, r.base_measure);
  r.holds = r.ratio_right <= eps && r.ratio_left <= eps;
  return r;
}

InvarianceReport is_boundary_invariant(const FiniteSubset& E, const Rational& eps,
                                       const FiniteSubset& K) {
  if (E.empty()) throw DegenerateInputError("is_boundary_invariant: |E| = 0");
  require_same_model(E, K);
  InvarianceReport r;
  r.base_measure = E.cardinality();
  r.excess_right = boundary_size(K, E);
  r.ratio_right = Rational(r.excess_right, r.base_measure);
  r.holds = r.ratio_right <= eps;
  return r;
}

Rational invariance_ratio(const FiniteSubset& E, const FiniteSubset& K) {
  if (E.empty()) throw DegenerateInputError("invariance_ratio: |E| = 0");
  const std::int64_t right = product_excess(E, K);
  const std::int64_t left = product_excess(E, inverse_set(K));
  return Rational(std::max(right, left), E.cardinality());
}

Rational boundary_invariance_ratio(const FiniteSubset& E, const FiniteSubset& K) {
  if (E.empty()) throw DegenerateInputError("boundary_invariance_ratio: |E| = 0");
  return Rational(boundary_size(K, E), E.cardinality());
}

ConditionReport check_condition(const FiniteSubset& E, const InvarianceCondition& cond) {
  ConditionReport report;
  if (cond.empty()) {
    report.trivially_true = true;
    return report;
  }
  for (const auto& clause : cond.clauses) {
    if (clause.eps <= 0) throw DegenerateInputError("invariance clause needs eps > 0");
    if (clause.K.empty()) throw DegenerateInputError("invariance clause needs nonempty K");
    InvarianceReport r = clause.kind == InvarianceKind::Invariant
                             ? is_invariant(E, clause.eps, clause.K)
                             : is_boundary_invariant(E, clause.eps, clause.K);
    report.holds = report.holds && r.holds;
    report.per_clause.push_back(std::move(r));
  }
  return report;
}

}  // namespace folner
