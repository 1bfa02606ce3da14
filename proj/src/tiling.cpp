#include "folner/tiling.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace folner {

EpsDisjointReport eps_disjoint_check(const std::vector<FiniteSubset>& sets, const Rational& eps) {
  EpsDisjointReport rep;
  if (sets.empty()) {
    rep.holds = true;
    rep.trivially_true = true;
    return rep;
  }

  auto order_holds = [&](const std::vector<int>& order, Rational& worst, int& worst_idx) {
    ElementSet prefix;
    bool ok = true;
    worst = Rational(1);
    worst_idx = -1;
    for (int idx : order) {
      const FiniteSubset& E = sets[idx];
      if (E.empty()) continue;
      std::int64_t overlap = intersection_size(E, prefix);
      Rational fresh(E.cardinality() - overlap, E.cardinality());
      if (fresh < worst) {
        worst = fresh;
        worst_idx = idx;
      }
      if (fresh < Rational(1) - eps) ok = false;
      for (const auto& g : E) prefix.insert(g);
    }
    return ok;
  };

  std::vector<int> given(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) given[i] = static_cast<int>(i);
  rep.holds = order_holds(given, rep.worst_new_fraction, rep.worst_index);
  if (rep.holds) return rep;

  // Greedy reorder: repeatedly take the set with the largest fresh fraction.
  std::vector<int> remaining = given;
  ElementSet prefix;
  while (!remaining.empty()) {
    int best = -1;
    Rational best_fresh(-1);
    for (int idx : remaining) {
      const FiniteSubset& E = sets[idx];
      Rational fresh = E.empty() ? Rational(1)
                                 : Rational(E.cardinality() - intersection_size(E, prefix),
                                            E.cardinality());
      if (fresh > best_fresh) {
        best_fresh = fresh;
        best = idx;
      }
    }
    rep.greedy_order.push_back(best);
    for (const auto& g : sets[best]) prefix.insert(g);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  Rational w;
  int wi;
  rep.greedy_order_holds = order_holds(rep.greedy_order, w, wi);
  return rep;
}

namespace {

/// Incremental low-overlap packer shared by find_low_overlap_center and
/// greedy_centers. Candidates are {x : xK ⊆ D}; overlap counts against the
/// current union are maintained under insertions.
class OverlapTracker {
 public:
  OverlapTracker(const FiniteSubset& D, const FiniteSubset& K)
      : model_(D.model()), K_(K), K_inv_(inverse_set(K)) {
    candidates_ = tile_candidates(D, K);
    overlap_.reserve(candidates_.elements().size() * 2);
    for (const auto& x : candidates_) {
      overlap_.emplace(x, 0);
      heap_.emplace(0, x);
    }
  }

  std::int64_t candidate_count() const { return candidates_.cardinality(); }

  /// Seeds overlap counts against an existing union A.
  void seed(const FiniteSubset& A) {
    for (const auto& a : A) add_covered(a);
  }

  /// Current argmin candidate (overlap, element), or nullopt if none left.
  std::optional<std::pair<std::int64_t, GroupElement>> peek() {
    while (!heap_.empty()) {
      auto [ov, x] = heap_.top();
      auto it = overlap_.find(x);
      if (it == overlap_.end()) {
        heap_.pop();
        continue;
      }
      if (it->second != ov) {
        heap_.pop();
        heap_.emplace(it->second, x);
        continue;
      }
      return std::make_pair(ov, x);
    }
    return std::nullopt;
  }

  /// Commits x as a center: covers xK, updates overlaps, removes x.
  /// Returns the number of newly covered elements.
  std::int64_t commit(const GroupElement& x) {
    overlap_.erase(x);
    std::int64_t fresh = 0;
    for (const auto& k : K_) {
      GroupElement p = model_->multiply(x, k);
      if (covered_.insert(p).second) {
        ++fresh;
        bump_neighbours(p);
      }
    }
    return fresh;
  }

  const ElementSet& covered() const { return covered_; }

 private:
  void add_covered(const GroupElement& p) {
    if (covered_.insert(p).second) bump_neighbours(p);
  }
  void bump_neighbours(const GroupElement& p) {
    for (const auto& ki : K_inv_) {
      GroupElement y = model_->multiply(p, ki);
      auto it = overlap_.find(y);
      if (it != overlap_.end()) ++it->second;
    }
  }

  const GroupModel* model_;
  const FiniteSubset& K_;
  FiniteSubset K_inv_;
  FiniteSubset candidates_;
  std::unordered_map<GroupElement, std::int64_t, ElementHash> overlap_;
  ElementSet covered_;
  using Entry = std::pair<std::int64_t, GroupElement>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

}  // namespace

CenterSearchResult find_low_overlap_center(const FiniteSubset& D, const FiniteSubset& K,
                                           const FiniteSubset& A, const Rational& eps) {
  require_same_model(D, K);
  OverlapTracker tracker(D, K);
  if (tracker.candidate_count() == 0)
    throw InsufficientInvarianceError("no translate of K fits inside D",
                                      boundary_invariance_ratio(D, K));
  tracker.seed(A);
  auto best = tracker.peek();
  CenterSearchResult res;
  res.center = best->second;
  res.overlap = best->first;
  res.candidate_count = tracker.candidate_count();
  res.bound = Rational(A.cardinality() * K.cardinality()) / ((Rational(1) - eps) * D.cardinality());
  res.bound_holds = Rational(res.overlap) <= res.bound;
  return res;
}

GreedyResult greedy_centers(const FiniteSubset& D, const FiniteSubset& K, const Rational& eps,
                            const GreedyOptions& opts) {
  require_same_model(D, K);
  if (D.empty() || K.empty()) throw DegenerateInputError("greedy_centers: empty input");

  OverlapTracker tracker(D, K);
  if (tracker.candidate_count() == 0)
    throw InsufficientInvarianceError("no translate of K fits inside D",
                                      boundary_invariance_ratio(D, K));

  const Rational stop_above = opts.stop_above.value_or(eps * D.cardinality());
  const Rational max_frac = opts.max_overlap_fraction.value_or(2 * eps);
  const Rational max_overlap = max_frac * K.cardinality();

  GreedyResult res;
  std::vector<GroupElement> centers;
  std::int64_t covered = 0;
  while (Rational(covered) <= stop_above) {
    auto best = tracker.peek();
    if (!best) {
      res.exhausted = true;
      break;
    }
    auto [ov, x] = *best;
    if (Rational(ov) > max_overlap) {
      res.exhausted = true;
      break;
    }
    covered += tracker.commit(x);
    centers.push_back(x);
    res.overlaps.push_back(ov);
    Rational frac(ov, K.cardinality());
    if (frac > res.worst_overlap_fraction) res.worst_overlap_fraction = frac;
  }
  res.centers = FiniteSubset(D.model(), std::move(centers));
  res.covered = covered;
  res.reached_threshold = Rational(covered) > stop_above;
  return res;
}

CoverageReport validate_quasi_tiling(const QuasiTiling& t, const FiniteSubset& D,
                                     const Rational& eps) {
  CoverageReport rep;
  rep.total = D.cardinality();

  ElementSet covered;
  ElementSet d_set = D.as_hash_set();
  for (std::size_t i = 0; i < t.shapes.size(); ++i) {
    // Clause 1: the translates of S_i by its centers are eps-disjoint in
    // canonical center order.
    std::vector<FiniteSubset> translates;
    for (const auto& c : t.centers[i]) translates.push_back(translate(c, t.shapes[i]));
    EpsDisjointReport dis = eps_disjoint_check(translates, eps);
    rep.scale_witness.push_back(Rational(1) - dis.worst_new_fraction);
    if (!dis.holds) rep.eps_disjoint_per_scale = false;
    rep.rows.add_exact("scale" + std::to_string(i) + ".eps_disjoint", "quasitiling(1)",
                       Rational(1) - dis.worst_new_fraction, eps, true);

    FiniteSubset tiles_i = product_set(t.centers[i], t.shapes[i]);
    // Clause 2: disjoint across scales.
    std::int64_t cross = intersection_size(tiles_i, covered);
    if (cross > 0) rep.cross_scale_disjoint = false;
    rep.rows.add_exact("scale" + std::to_string(i) + ".cross_disjoint", "quasitiling(2)",
                       Rational(cross), Rational(0), true);
    // Clause 3: contained in D.
    std::int64_t outside = tiles_i.cardinality() - intersection_size(tiles_i, d_set);
    if (outside > 0) rep.contained = false;
    rep.rows.add_exact("scale" + std::to_string(i) + ".contained", "quasitiling(3)",
                       Rational(outside), Rational(0), true);
    for (const auto& g : tiles_i)
      if (d_set.count(g)) covered.insert(g);
  }
  rep.covered = static_cast<std::int64_t>(covered.size());
  rep.coverage_ok = Rational(rep.covered) >= (Rational(1) - eps) * rep.total;
  rep.rows.add_exact_ge("coverage", "quasitiling(4)", Rational(rep.covered),
                        (Rational(1) - eps) * rep.total, true,
                        "covered measure must reach (1-eps)|D|");
  rep.all_pass = rep.eps_disjoint_per_scale && rep.cross_scale_disjoint && rep.contained &&
                 rep.coverage_ok;
  return rep;
}

LemmaDecision union_invariance_bound(const std::vector<FiniteSubset>& tiles, const Rational& eps,
                                     const Rational& delta, const FiniteSubset& K) {
  LemmaDecision d;
  if (tiles.empty()) {
    d.hypothesis_note = "empty family";
    return d;
  }
  EpsDisjointReport dis = eps_disjoint_check(tiles, eps);
  bool all_bi = true;
  for (const auto& E : tiles)
    if (boundary_invariance_ratio(E, K) > delta) all_bi = false;
  d.hypotheses_ok = dis.holds && all_bi;
  if (!d.hypotheses_ok) {
    d.hypothesis_note = !dis.holds ? "family is not eps-disjoint in the given order"
                                   : "a tile misses the (delta,K)-boundary-invariance";
    return d;
  }
  FiniteSubset u = tiles[0];
  for (std::size_t i = 1; i < tiles.size(); ++i) u = set_union(u, tiles[i]);
  d.conclusion_checked = true;
  d.measured = boundary_invariance_ratio(u, K);
  d.bound = delta / (Rational(1) - eps);
  d.conclusion_holds = d.measured <= d.bound;
  return d;
}

LemmaDecision difference_invariance_bound(const FiniteSubset& A, const FiniteSubset& B,
                                          const Rational& eps, const FiniteSubset& K) {
  LemmaDecision d;
  if (A.empty()) {
    // Reduces to B's own invariance.
    d.hypotheses_ok = boundary_invariance_ratio(B, K) <= eps * eps;
    d.conclusion_checked = d.hypotheses_ok;
    if (d.conclusion_checked) {
      d.measured = boundary_invariance_ratio(B, K);
      d.bound = 2 * eps;
      d.conclusion_holds = d.measured <= d.bound;
    } else {
      d.hypothesis_note = "B misses the (eps^2,K)-boundary-invariance";
    }
    return d;
  }
  const bool nested = is_subset(A, B);
  const bool small = Rational(A.cardinality()) <= (Rational(1) - eps) * B.cardinality();
  const bool a_bi = boundary_invariance_ratio(A, K) <= eps * eps;
  const bool b_bi = boundary_invariance_ratio(B, K) <= eps * eps;
  d.hypotheses_ok = nested && small && a_bi && b_bi;
  if (!d.hypotheses_ok) {
    d.hypothesis_note = !nested  ? "A is not contained in B"
                        : !small ? "|A| > (1-eps)|B|"
                                 : "missing (eps^2,K)-boundary-invariance";
    return d;
  }
  d.conclusion_checked = true;
  d.measured = boundary_invariance_ratio(set_difference(B, A), K);
  d.bound = 2 * eps;
  d.conclusion_holds = d.measured <= d.bound;
  return d;
}

QuasiTileResult quasi_tile(const FiniteSubset& D, const std::vector<FiniteSubset>& scales,
                           const Rational& eps) {
  QuasiTileResult out;
  const int N = static_cast<int>(scales.size());
  if (N == 0 || D.empty()) throw DegenerateInputError("quasi_tile: empty input");

  ReportEnvelope& rep = out.report;

  // Hypothesis checks; failures downgrade to warnings and the run continues.
  bool hyp_ok = true;
  {
    Rational lhs = rational_pow(Rational(1) - eps, N);
    rep.add_exact("hyp.count", "fromOW", lhs, eps, false, "(1-eps)^N <= eps");
    if (lhs > eps) hyp_ok = false;
    const Rational eps3 = rational_pow(eps, 3);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < i; ++j) {
        Rational r = invariance_ratio(scales[i], scales[j]);
        rep.add_exact("hyp.scales." + std::to_string(i) + "." + std::to_string(j), "fromOW", r,
                      eps3, false, "S_i must be (eps^3,S_j)-invariant for j<i");
        if (r > eps3) hyp_ok = false;
      }
    const Rational eps2 = eps * eps;
    for (int i = 0; i < N; ++i) {
      Rational r = invariance_ratio(D, scales[i]);
      rep.add_exact("hyp.window." + std::to_string(i), "fromOW", r, eps2, false,
                    "D must be (eps^2,S_i)-invariant");
      if (r > eps2) hyp_ok = false;
    }
  }
  out.hypotheses_ok = hyp_ok;

  out.tiling.shapes = scales;
  out.tiling.centers.assign(N, FiniteSubset(D.model(), {}));
  out.tiling.epsilon = eps;
  out.tiling.target = D;

  FiniteSubset residual = D;
  const Rational target_residual = eps * D.cardinality();
  std::vector<FiniteSubset> all_tiles;

  for (int i = N - 1; i >= 0; --i) {
    if (Rational(residual.cardinality()) <= target_residual) break;
    const FiniteSubset& S = scales[i];

    const Rational beta = boundary_invariance_ratio(residual, S);
    rep.add_exact("step" + std::to_string(i) + ".residual_binv", "fromOW", beta, 2 * eps, false,
                  "residual boundary-invariance against the current scale");

    GreedyOptions opts;
    opts.stop_above = Rational(residual.cardinality()) - target_residual;
    GreedyResult g;
    try {
      g = greedy_centers(residual, S, eps, opts);
    } catch (const InsufficientInvarianceError&) {
      rep.add_exact("step" + std::to_string(i) + ".skipped", "fromOW", Rational(1), Rational(0),
                    false, "scale skipped: no translate fits inside the residual");
      continue;
    }
    out.tiling.centers[i] = g.centers;

    FiniteSubset tiles = product_set(g.centers, S);
    all_tiles.push_back(tiles);
    residual = set_difference(residual, tiles);

    rep.add_exact("step" + std::to_string(i) + ".disjointness", "edisjoint",
                  g.worst_overlap_fraction, 2 * eps, false,
                  "worst overlap fraction in construction order");

    // Residual bound from the descending induction: after processing scales
    // N..i the uncovered part is at most max(eps,(1-eps)^{N+1-i})|D|.
    Rational geo = rational_pow(Rational(1) - eps, N - i);
    Rational per_step = geo > eps ? geo : eps;
    rep.add_exact("step" + std::to_string(i) + ".residual", "fromOW",
                  Rational(residual.cardinality()), per_step * D.cardinality(), false);

    if (i > 0) {
      // Exact bookkeeping instead of trusting the proof chain: the freshly
      // placed tiles against the next scale (union lemma) and the residual
      // against the next scale (difference lemma).
      std::vector<FiniteSubset> translates;
      for (const auto& c : g.centers) translates.push_back(translate(c, S));
      Rational tile_delta(0);
      for (const auto& t : translates) {
        Rational r = boundary_invariance_ratio(t, scales[i - 1]);
        if (r > tile_delta) tile_delta = r;
      }
      LemmaDecision u = union_invariance_bound(translates, 2 * eps, tile_delta, scales[i - 1]);
      if (u.conclusion_checked)
        rep.add_exact("step" + std::to_string(i) + ".union_binv", "lemma3", u.measured, u.bound,
                      false);
      FiniteSubset placed = set_difference(D, residual);
      LemmaDecision diff = difference_invariance_bound(placed, D, eps, scales[i - 1]);
      CheckRow row;
      row.name = "step" + std::to_string(i) + ".difference_binv";
      row.anchor = "lemma4";
      row.hypothesis = diff.hypotheses_ok ? "ok" : "skipped: " + diff.hypothesis_note;
      if (diff.conclusion_checked) {
        row.measured = rational_to_double(diff.measured);
        row.bound = rational_to_double(diff.bound);
        row.measured_exact = rational_to_string(diff.measured);
        row.bound_exact = rational_to_string(diff.bound);
        row.pass = diff.conclusion_holds;
      }
      rep.add(std::move(row));
    }
  }

  out.complete = Rational(residual.cardinality()) <= target_residual;
  CoverageReport val = validate_quasi_tiling(out.tiling, D, 4 * eps);
  rep.merge(val.rows, "validate.");
  return out;
}

}  // namespace folner
