#pragma once

#include "folner/group.hpp"
#include "folner/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace folner {

using ElementSet = std::unordered_set<GroupElement, ElementHash>;

/// Axis-aligned box [lo, hi) in Z^d; the fast-path shape for Z^d sets.
struct ZdBox {
  int d = 0;
  std::array<std::int64_t, 3> lo{0, 0, 0};
  std::array<std::int64_t, 3> hi{0, 0, 0};

  std::int64_t volume() const {
    std::int64_t v = 1;
    for (int i = 0; i < d; ++i) v *= (hi[i] > lo[i]) ? hi[i] - lo[i] : 0;
    return v;
  }
  bool contains(const GroupElement& g) const {
    for (int i = 0; i < d; ++i)
      if (g.coords[i] < lo[i] || g.coords[i] >= hi[i]) return false;
    return true;
  }
  friend bool operator==(const ZdBox&, const ZdBox&) = default;
};

/// Finite subset of one group: sorted, duplicate-free element vector.
/// Cardinality is the counting measure. Iteration order is the canonical
/// element order, so every algorithm built on it is deterministic.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  FiniteSubset(const GroupModel* model, std::vector<GroupElement> elems);

  static FiniteSubset from_unordered(const GroupModel* model, const ElementSet& elems);
  static FiniteSubset box(const ZdGroup& model, const ZdBox& b);
  static FiniteSubset singleton(const GroupModel* model, const GroupElement& g);

  const GroupModel* model() const { return model_; }
  std::int64_t cardinality() const { return static_cast<std::int64_t>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<GroupElement>& elements() const { return elems_; }
  bool contains(const GroupElement& g) const;
  ElementSet as_hash_set() const;

  /// The set is exactly an axis-aligned box in Z^d (enables closed-form
  /// product/boundary arithmetic).
  std::optional<ZdBox> as_box() const;

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FiniteSubset& a, const FiniteSubset& b) {
    return a.elems_ == b.elems_;
  }

 private:
  const GroupModel* model_ = nullptr;
  std::vector<GroupElement> elems_;
  mutable std::optional<std::optional<ZdBox>> box_cache_;
};

void require_same_model(const FiniteSubset& a, const FiniteSubset& b);

// Exact set algebra (inputs over the same model).
FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b);
FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b);
bool is_subset(const FiniteSubset& a, const FiniteSubset& b);
std::int64_t intersection_size(const FiniteSubset& a, const ElementSet& b);

/// Left translate g*E; |gE| = |E| always (exercised in tests).
FiniteSubset translate(const GroupElement& g, const FiniteSubset& E);
FiniteSubset inverse_set(const FiniteSubset& E);

/// E*K = {e*k}, deduplicated, exact cardinality.
FiniteSubset product_set(const FiniteSubset& E, const FiniteSubset& K);

/// |E*K \ E| without materialising E*K.
std::int64_t product_excess(const FiniteSubset& E, const FiniteSubset& K);

/// {x : xK subset of E} ("erosion" of E by K).
FiniteSubset tile_candidates(const FiniteSubset& E, const FiniteSubset& K);

// Line-oriented serialization: one canonical element token per line.
void write_set(std::ostream& os, const FiniteSubset& E);
FiniteSubset read_set(std::istream& is, const GroupModel* model);

}  // namespace folner
