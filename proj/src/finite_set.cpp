#include "folner/finite_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace folner {

FiniteSubset::FiniteSubset(const GroupModel* model, std::vector<GroupElement> elems)
    : model_(model), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteSubset FiniteSubset::from_unordered(const GroupModel* model, const ElementSet& elems) {
  return FiniteSubset(model, std::vector<GroupElement>(elems.begin(), elems.end()));
}

FiniteSubset FiniteSubset::box(const ZdGroup& model, const ZdBox& b) {
  std::vector<GroupElement> elems;
  elems.reserve(static_cast<std::size_t>(b.volume()));
  GroupElement g;
  if (b.volume() > 0) {
    std::array<std::int64_t, 3> idx = b.lo;
    const int d = model.dim();
    while (true) {
      for (int i = 0; i < d; ++i) g.coords[i] = idx[i];
      elems.push_back(g);
      int i = d - 1;
      while (i >= 0) {
        if (++idx[i] < b.hi[i]) break;
        idx[i] = b.lo[i];
        --i;
      }
      if (i < 0) break;
    }
  }
  return FiniteSubset(&model, std::move(elems));
}

FiniteSubset FiniteSubset::singleton(const GroupModel* model, const GroupElement& g) {
  return FiniteSubset(model, {g});
}

bool FiniteSubset::contains(const GroupElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

ElementSet FiniteSubset::as_hash_set() const {
  ElementSet s;
  s.reserve(elems_.size() * 2);
  s.insert(elems_.begin(), elems_.end());
  return s;
}

std::optional<ZdBox> FiniteSubset::as_box() const {
  if (box_cache_) return *box_cache_;
  std::optional<ZdBox> result;
  if (model_ && model_->kind() == GroupKind::Zd && !elems_.empty()) {
    const int d = static_cast<const ZdGroup*>(model_)->dim();
    ZdBox b;
    b.d = d;
    for (int i = 0; i < d; ++i) {
      b.lo[i] = b.hi[i] = elems_.front().coords[i];
    }
    for (const auto& g : elems_) {
      for (int i = 0; i < d; ++i) {
        b.lo[i] = std::min(b.lo[i], g.coords[i]);
        b.hi[i] = std::max(b.hi[i], g.coords[i] + 1);
      }
    }
    if (b.volume() == cardinality()) result = b;
  }
  box_cache_ = result;
  return result;
}

void require_same_model(const FiniteSubset& a, const FiniteSubset& b) {
  if (a.model() != b.model() &&
      (a.model() == nullptr || b.model() == nullptr || a.model()->name() != b.model()->name()))
    throw ModelMismatchError("sets over different group models");
}

FiniteSubset set_union(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_model(a, b);
  std::vector<GroupElement> out;
  out.reserve(a.elements().size() + b.elements().size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.model() ? a.model() : b.model(), std::move(out));
}

FiniteSubset set_difference(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_model(a, b);
  std::vector<GroupElement> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.model(), std::move(out));
}

FiniteSubset set_intersection(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_model(a, b);
  std::vector<GroupElement> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FiniteSubset(a.model(), std::move(out));
}

bool is_subset(const FiniteSubset& a, const FiniteSubset& b) {
  require_same_model(a, b);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::int64_t intersection_size(const FiniteSubset& a, const ElementSet& b) {
  std::int64_t n = 0;
  for (const auto& g : a)
    if (b.count(g)) ++n;
  return n;
}

FiniteSubset translate(const GroupElement& g, const FiniteSubset& E) {
  const GroupModel* m = E.model();
  std::vector<GroupElement> out;
  out.reserve(E.elements().size());
  for (const auto& e : E) out.push_back(m->multiply(g, e));
  return FiniteSubset(m, std::move(out));
}

FiniteSubset inverse_set(const FiniteSubset& E) {
  const GroupModel* m = E.model();
  std::vector<GroupElement> out;
  out.reserve(E.elements().size());
  for (const auto& e : E) out.push_back(m->inverse(e));
  return FiniteSubset(m, std::move(out));
}

namespace {

std::optional<ZdBox> product_box(const FiniteSubset& E, const FiniteSubset& K) {
  auto eb = E.as_box();
  auto kb = K.as_box();
  if (!eb || !kb) return std::nullopt;
  ZdBox r;
  r.d = eb->d;
  for (int i = 0; i < r.d; ++i) {
    r.lo[i] = eb->lo[i] + kb->lo[i];
    r.hi[i] = eb->hi[i] + kb->hi[i] - 1;
  }
  return r;
}

}  // namespace

FiniteSubset product_set(const FiniteSubset& E, const FiniteSubset& K) {
  require_same_model(E, K);
  if (E.empty() || K.empty()) return FiniteSubset(E.model(), {});
  if (auto pb = product_box(E, K))
    return FiniteSubset::box(*static_cast<const ZdGroup*>(E.model()), *pb);
  const GroupModel* m = E.model();
  ElementSet seen;
  seen.reserve(E.elements().size() * 2);
  for (const auto& e : E)
    for (const auto& k : K) seen.insert(m->multiply(e, k));
  return FiniteSubset::from_unordered(m, seen);
}

std::int64_t product_excess(const FiniteSubset& E, const FiniteSubset& K) {
  require_same_model(E, K);
  if (E.empty() || K.empty()) return 0;
  if (auto pb = product_box(E, K)) {
    const ZdBox eb = *E.as_box();
    std::int64_t inter = 1;
    for (int i = 0; i < pb->d; ++i) {
      const std::int64_t lo = std::max(pb->lo[i], eb.lo[i]);
      const std::int64_t hi = std::min(pb->hi[i], eb.hi[i]);
      inter *= (hi > lo) ? hi - lo : 0;
    }
    return pb->volume() - inter;
  }
  const GroupModel* m = E.model();
  ElementSet outside;
  ElementSet e_set = E.as_hash_set();
  for (const auto& e : E)
    for (const auto& k : K) {
      GroupElement p = m->multiply(e, k);
      if (!e_set.count(p)) outside.insert(p);
    }
  return static_cast<std::int64_t>(outside.size());
}

FiniteSubset tile_candidates(const FiniteSubset& E, const FiniteSubset& K) {
  require_same_model(E, K);
  if (E.empty() || K.empty()) return FiniteSubset(E.model(), {});
  if (auto eb = E.as_box()) {
    if (auto kb = K.as_box()) {
      ZdBox r;
      r.d = eb->d;
      bool nonempty = true;
      for (int i = 0; i < r.d; ++i) {
        r.lo[i] = eb->lo[i] - kb->lo[i];
        r.hi[i] = eb->hi[i] - kb->hi[i] + 1;
        if (r.hi[i] <= r.lo[i]) nonempty = false;
      }
      if (!nonempty) return FiniteSubset(E.model(), {});
      return FiniteSubset::box(*static_cast<const ZdGroup*>(E.model()), r);
    }
  }
  const GroupModel* m = E.model();
  ElementSet e_set = E.as_hash_set();
  const GroupElement k0_inv = m->inverse(K.elements().front());
  std::vector<GroupElement> out;
  for (const auto& e : E) {
    GroupElement x = m->multiply(e, k0_inv);
    bool inside = true;
    for (const auto& k : K) {
      if (!e_set.count(m->multiply(x, k))) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(x);
  }
  return FiniteSubset(m, std::move(out));
}

void write_set(std::ostream& os, const FiniteSubset& E) {
  for (const auto& g : E) os << E.model()->format(g) << '\n';
}

FiniteSubset read_set(std::istream& is, const GroupModel* model) {
  std::vector<GroupElement> elems;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    elems.push_back(model->parse(line));
  }
  return FiniteSubset(model, std::move(elems));
}

}  // namespace folner
