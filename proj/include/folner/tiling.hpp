#pragma once

#include "folner/invariance.hpp"
#include "folner/report.hpp"

#include <optional>
#include <vector>

namespace folner {

struct InsufficientInvarianceError : std::runtime_error {
  Rational measured_ratio;
  InsufficientInvarianceError(const std::string& what, Rational ratio)
      : std::runtime_error(what), measured_ratio(std::move(ratio)) {}
};

// ------------------------------------------------------------ eps-disjoint

struct EpsDisjointReport {
  bool holds = false;
  bool trivially_true = false;
  Rational worst_new_fraction{1};  // min over n of |E_n \ prefix| / |E_n|
  int worst_index = -1;
  // Greedy reordering attempt, exposed when the given order fails.
  std::vector<int> greedy_order;
  bool greedy_order_holds = false;
};

/// Checks the given order for eps-disjointness: every set must contribute at
/// least (1-eps) of its measure beyond its predecessors.
EpsDisjointReport eps_disjoint_check(const std::vector<FiniteSubset>& sets, const Rational& eps);

// --------------------------------------------------------- center selection

struct CenterSearchResult {
  GroupElement center;
  std::int64_t overlap = 0;  // |xK ∩ A|
  Rational bound{0};         // |A||K| / ((1-eps)|D|)
  bool bound_holds = false;
  std::int64_t candidate_count = 0;
};

/// Deterministic argmin of |xK ∩ A| over the candidates {x : xK ⊆ D}
/// (ties broken by canonical element order). The returned overlap satisfies
/// the averaging bound whenever D is (eps,K)-boundary-invariant.
CenterSearchResult find_low_overlap_center(const FiniteSubset& D, const FiniteSubset& K,
                                           const FiniteSubset& A, const Rational& eps);

struct GreedyOptions {
  /// Stop once |C*K| exceeds this value; defaults to eps*|D|.
  std::optional<Rational> stop_above;
  /// Largest acceptable overlap fraction for a new tile (default 2*eps).
  std::optional<Rational> max_overlap_fraction;
};

struct GreedyResult {
  FiniteSubset centers;
  std::int64_t covered = 0;  // |C*K|
  std::vector<std::int64_t> overlaps;  // per center, in construction order
  Rational worst_overlap_fraction{0};
  bool reached_threshold = false;
  bool exhausted = false;  // no acceptable candidate remained
};

/// Greedy low-overlap packing of translates of K into D. With the default
/// threshold this is exactly the finite induction behind the center-set
/// existence lemma: it keeps 2eps-disjointness in construction order and
/// stops as soon as |C*K| > eps|D|.
GreedyResult greedy_centers(const FiniteSubset& D, const FiniteSubset& K, const Rational& eps,
                            const GreedyOptions& opts = {});

// -------------------------------------------------------------- quasi-tiling

struct QuasiTiling {
  std::vector<FiniteSubset> shapes;   // S_1..S_N (index 0 = smallest)
  std::vector<FiniteSubset> centers;  // C_1..C_N
  Rational epsilon{0};
  FiniteSubset target;

  FiniteSubset tiles(int i) const { return product_set(centers[i], shapes[i]); }
};

struct CoverageReport {
  std::int64_t covered = 0;
  std::int64_t total = 0;
  bool eps_disjoint_per_scale = true;   // clause 1
  bool cross_scale_disjoint = true;     // clause 2
  bool contained = true;                // clause 3
  bool coverage_ok = true;              // clause 4
  std::vector<Rational> scale_witness;  // worst new-mass fraction per scale
  bool all_pass = false;
  ReportEnvelope rows;
};

CoverageReport validate_quasi_tiling(const QuasiTiling& t, const FiniteSubset& D,
                                     const Rational& eps);

struct QuasiTileResult {
  QuasiTiling tiling;
  ReportEnvelope report;
  bool hypotheses_ok = false;
  bool complete = false;  // residual <= eps|D|
};

/// Multi-scale tiler: processes scales from the largest down, packing each
/// into the current residual and tracking the residual's invariance through
/// the exact union/difference lemmas. Hypothesis violations downgrade to
/// warnings; the validator gives ground truth afterwards.
QuasiTileResult quasi_tile(const FiniteSubset& D, const std::vector<FiniteSubset>& scales,
                           const Rational& eps);

// ------------------------------------------------------------- lemma checks

struct LemmaDecision {
  bool hypotheses_ok = false;
  std::string hypothesis_note;
  bool conclusion_checked = false;
  bool conclusion_holds = false;
  Rational measured{0};
  Rational bound{0};
};

/// Union of eps-disjoint, (delta,K)-boundary-invariant tiles is
/// (delta/(1-eps),K)-boundary-invariant.
LemmaDecision union_invariance_bound(const std::vector<FiniteSubset>& tiles, const Rational& eps,
                                     const Rational& delta, const FiniteSubset& K);

/// If A ⊆ B, |A| <= (1-eps)|B| and both are (eps^2,K)-boundary-invariant,
/// then B \ A is (2eps,K)-boundary-invariant.
LemmaDecision difference_invariance_bound(const FiniteSubset& A, const FiniteSubset& B,
                                          const Rational& eps, const FiniteSubset& K);

}  // namespace folner
