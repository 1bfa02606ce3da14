#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace folner {

class FiniteSubset;

/// Canonical packed encoding of one group element. Fields that a group does
/// not use must stay zero, so equality, ordering and hashing reduce to plain
/// field comparison.
///
///   Z^d          : coords[0..d-1]
///   Heisenberg   : coords = (a, b, c)
///   lamplighter  : coords[0] = cursor, lamps = bitmask over positions
///                  [-LAMP_RANGE, LAMP_RANGE-1] (bit i <-> position i-LAMP_RANGE)
struct GroupElement {
  std::array<std::int64_t, 3> coords{0, 0, 0};
  std::uint64_t lamps = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    };
    mix(static_cast<std::uint64_t>(g.coords[0]));
    mix(static_cast<std::uint64_t>(g.coords[1]));
    mix(static_cast<std::uint64_t>(g.coords[2]));
    mix(g.lamps);
    return static_cast<std::size_t>(h);
  }
};

enum class GroupKind { Zd, Heisenberg, Lamplighter };

struct ModelMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ElementRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Geometric growth schedule for the canonical Folner shapes, L_n = base^n.
struct FolnerSchedule {
  std::int64_t base = 4;
  std::int64_t length(int n) const;
};

/// Exact arithmetic for one discrete group. The counting measure is the only
/// measure in play; it is bi-invariant here, and the modular function of
/// these groups is identically 1 (kept as the constant below so that any
/// formula mentioning it stays visible).
class GroupModel {
 public:
  static constexpr int modular_function = 1;

  virtual ~GroupModel() = default;

  virtual GroupKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  virtual std::vector<GroupElement> generators() const = 0;

  /// Canonical Folner shape for index n under the given schedule:
  ///   Z^d         : [0, L_n)^d
  ///   Heisenberg  : (a,b) in [-L_n, L_n]^2, c in [-L_n^2, L_n^2]
  ///   lamplighter : lamps supported in [-L_n, L_n], cursor in [-L_n, L_n]
  virtual FiniteSubset folner_set(int n, const FolnerSchedule& schedule) const = 0;

  /// One-line canonical token, inverse of parse().
  virtual std::string format(const GroupElement& g) const = 0;
  virtual GroupElement parse(const std::string& token) const = 0;
};

class ZdGroup final : public GroupModel {
 public:
  explicit ZdGroup(int d);
  int dim() const { return d_; }

  GroupKind kind() const override { return GroupKind::Zd; }
  std::string name() const override;
  GroupElement identity() const override { return {}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::vector<GroupElement> generators() const override;
  FiniteSubset folner_set(int n, const FolnerSchedule& schedule) const override;
  std::string format(const GroupElement& g) const override;
  GroupElement parse(const std::string& token) const override;

  GroupElement at(std::initializer_list<std::int64_t> v) const;

 private:
  int d_;
};

/// Discrete Heisenberg group: (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
class HeisenbergGroup final : public GroupModel {
 public:
  GroupKind kind() const override { return GroupKind::Heisenberg; }
  std::string name() const override { return "heisenberg"; }
  GroupElement identity() const override { return {}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::vector<GroupElement> generators() const override;
  FiniteSubset folner_set(int n, const FolnerSchedule& schedule) const override;
  std::string format(const GroupElement& g) const override;
  GroupElement parse(const std::string& token) const override;
};

/// Lamplighter group Z2 wr Z. Lamp configurations are finite subsets of Z
/// stored as a 64-bit mask over [-LAMP_RANGE, LAMP_RANGE-1]; products whose
/// lamps leave that window raise ElementRangeError (the window is the
/// representable region, widen it by rebuilding with a larger range if a
/// computation legitimately needs more room).
class LamplighterGroup final : public GroupModel {
 public:
  static constexpr std::int64_t LAMP_RANGE = 32;

  GroupKind kind() const override { return GroupKind::Lamplighter; }
  std::string name() const override { return "lamplighter"; }
  GroupElement identity() const override { return {}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::vector<GroupElement> generators() const override;
  FiniteSubset folner_set(int n, const FolnerSchedule& schedule) const override;
  std::string format(const GroupElement& g) const override;
  GroupElement parse(const std::string& token) const override;

  GroupElement make(std::int64_t cursor, const std::vector<std::int64_t>& lamp_positions) const;
  std::vector<std::int64_t> lamp_positions(const GroupElement& g) const;
};

/// Factory from a config name: "z", "z2", "z3", "heisenberg", "lamplighter".
std::unique_ptr<GroupModel> make_group(const std::string& name);

}  // namespace folner
