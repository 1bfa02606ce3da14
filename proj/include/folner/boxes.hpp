#pragma once

#include "folner/finite_set.hpp"
#include "folner/rational.hpp"

#include <optional>

namespace folner {

// Closed-form morphology for Z^d boxes. For any E and K,
// Cl_K(E) = E*K^-1*K; for boxes the K-interior is the correspondingly
// shrunk box, so boundary sizes reduce to volume differences. The generic
// engine cross-checks these formulas in the tests.

std::optional<ZdBox> closure_box(const ZdBox& E, const ZdBox& K);
std::optional<ZdBox> interior_box(const ZdBox& E, const ZdBox& K);  // may be empty box

// Pure side-length arithmetic for corner cubes [0,s)^d, exact at any scale.
// Used by the filtered-sequence planner where the sets never materialise.
BigInt cube_volume(const BigInt& side, int d);

/// |[0,a)^d * [0,f)^d  \  [0,a)^d|  =  (a+f-1)^d - a^d.
BigInt cube_excess(const BigInt& a, const BigInt& f, int d);

/// |boundary of [0,f)^d by translates of [0,b)^d| = (f+2b-2)^d - max(f-2b+2,0)^d.
BigInt cube_boundary(const BigInt& b, const BigInt& f, int d);

}  // namespace folner
