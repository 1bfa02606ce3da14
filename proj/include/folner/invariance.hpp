#pragma once

#include "folner/finite_set.hpp"
#include "folner/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folner {

struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// K-boundary of E: the union of left translates gK that meet both E and its
/// complement. Computed from the erosion {g : gK subset of E}; closed form
/// when both sets are Z^d boxes.
FiniteSubset boundary(const FiniteSubset& K, const FiniteSubset& E);

/// |boundary(K, E)| without materialising it when a closed form applies.
std::int64_t boundary_size(const FiniteSubset& K, const FiniteSubset& E);

FiniteSubset interior(const FiniteSubset& K, const FiniteSubset& E);
FiniteSubset closure(const FiniteSubset& K, const FiniteSubset& E);

/// Outcome of a single invariance test; ratios are exact.
struct InvarianceReport {
  bool holds = false;
  Rational ratio_right{0};  // |E*K \ E| / |E|
  Rational ratio_left{0};   // |E*K^-1 \ E| / |E|   (invariant kind only)
  std::int64_t excess_right = 0;
  std::int64_t excess_left = 0;
  std::int64_t base_measure = 0;
};

/// (eps,K)-invariance: |E*K \ E| <= eps|E| and |E*K^-1 \ E| <= eps|E|.
InvarianceReport is_invariant(const FiniteSubset& E, const Rational& eps, const FiniteSubset& K);

/// (eps,K)-boundary-invariance: |boundary_K(E)| <= eps|E|.
InvarianceReport is_boundary_invariant(const FiniteSubset& E, const Rational& eps,
                                       const FiniteSubset& K);

/// Tightest eps for which the respective condition holds (exact rational).
Rational invariance_ratio(const FiniteSubset& E, const FiniteSubset& K);
Rational boundary_invariance_ratio(const FiniteSubset& E, const FiniteSubset& K);

enum class InvarianceKind { Invariant, BoundaryInvariant };

struct InvarianceClause {
  InvarianceKind kind = InvarianceKind::Invariant;
  Rational eps{1};
  FiniteSubset K;
};

/// Finite conjunction of invariance clauses.
struct InvarianceCondition {
  std::vector<InvarianceClause> clauses;
  bool empty() const { return clauses.empty(); }
};

struct ConditionReport {
  bool holds = true;
  bool trivially_true = false;  // empty clause list
  std::vector<InvarianceReport> per_clause;
};

ConditionReport check_condition(const FiniteSubset& E, const InvarianceCondition& cond);

}  // namespace folner
