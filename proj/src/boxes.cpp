#include "folner/boxes.hpp"

#include <algorithm>

namespace folner {

std::optional<ZdBox> closure_box(const ZdBox& E, const ZdBox& K) {
  if (E.d != K.d || E.volume() == 0 || K.volume() == 0) return std::nullopt;
  ZdBox r;
  r.d = E.d;
  for (int i = 0; i < E.d; ++i) {
    const std::int64_t w = K.hi[i] - K.lo[i];
    r.lo[i] = E.lo[i] - (w - 1);
    r.hi[i] = E.hi[i] + (w - 1);
  }
  return r;
}

std::optional<ZdBox> interior_box(const ZdBox& E, const ZdBox& K) {
  if (E.d != K.d || E.volume() == 0 || K.volume() == 0) return std::nullopt;
  ZdBox r;
  r.d = E.d;
  for (int i = 0; i < E.d; ++i) {
    const std::int64_t w = K.hi[i] - K.lo[i];
    r.lo[i] = E.lo[i] + (w - 1);
    r.hi[i] = std::max(E.hi[i] - (w - 1), r.lo[i]);
  }
  return r;
}

BigInt cube_volume(const BigInt& side, int d) {
  BigInt v = 1;
  for (int i = 0; i < d; ++i) v *= side;
  return v;
}

BigInt cube_excess(const BigInt& a, const BigInt& f, int d) {
  return cube_volume(a + f - 1, d) - cube_volume(a, d);
}

BigInt cube_boundary(const BigInt& b, const BigInt& f, int d) {
  const BigInt outer = f + 2 * b - 2;
  BigInt inner = f - 2 * b + 2;
  if (inner < 0) inner = 0;
  return cube_volume(outer, d) - cube_volume(inner, d);
}

}  // namespace folner
