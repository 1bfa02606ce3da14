#pragma once

#include "folner/tiling.hpp"

#include <unordered_map>

namespace folner {

/// Pairwise-disjoint finite atoms at one filtration level.
struct Partition {
  int level = 0;
  std::vector<FiniteSubset> atoms;

  std::int64_t covered_measure() const;
  FiniteSubset covered_union(const GroupModel* model) const;
};

/// Element -> atom index lookup for one partition.
class PartitionIndex {
 public:
  explicit PartitionIndex(const Partition& p);
  /// -1 when the element lies in no atom.
  int atom_of(const GroupElement& g) const;

 private:
  std::unordered_map<GroupElement, int, ElementHash> index_;
};

struct DisjointifyResult {
  std::vector<FiniteSubset> atoms;  // I_i, pairwise disjoint
  ReportEnvelope report;
  bool hypotheses_ok = false;
  bool conclusions_ok = false;
};

/// Removes the overlaps of an eps-disjoint family while keeping invariance:
/// I_i = Int_K(E_i) minus the earlier interiors. Verifies exactly that the
/// atoms are disjoint, |I_i| >= (1-2eps)|E_i|, (4eps,K)-boundary-invariant
/// and (6delta,L)-invariant.
DisjointifyResult disjointify_tiles(const std::vector<FiniteSubset>& tiles, const FiniteSubset& K,
                                    const Rational& eps, const Rational& delta,
                                    const FiniteSubset& L);

struct QuasiPartitionResult {
  Partition partition;
  std::vector<GroupElement> witnesses;  // per atom: g with atom ⊆ g*B
  ReportEnvelope report;
  bool all_clauses_pass = false;
  std::int64_t covered = 0;
};

struct QuasiPartitionOptions {
  /// Tiling shapes; all must fit inside B. Defaults to canonical Folner
  /// shapes not larger than B, topped with B itself when B is a shape.
  std::vector<FiniteSubset> scales;
  FolnerSchedule schedule;
};

/// Quasi-partition of D: disjoint atoms, each inside a translate of B, each
/// satisfying the invariance condition I, together covering >= (1-eps)|D|.
/// Built by quasi-tiling D and disjointifying the tiles scale by scale.
QuasiPartitionResult build_quasi_partition(const FiniteSubset& D, const FiniteSubset& B,
                                           const InvarianceCondition& I, const Rational& eps,
                                           QuasiPartitionOptions opts = {});

}  // namespace folner
