#pragma once

#include "todakdv/lattice/stencil.hpp"

namespace todakdv::lattice {

// Numeric D_{1,k}, D_{2,k} on the periodic lattice, rescaled to (a, b): da = N^2 dA/dt.
// The d-recursion is restarted at every site (origin d(i,0) = 0 at that site), as in the
// symbolic construction. combo = true returns the recombined flow:
// k=2: D2 + 2D1, k=3: D3 - 2D1 + 2D2, k=4: D4 + 4D1 - 2D2 + 2D3.
Rhs rhs_flow_k(const LatticeState& s, int k, bool combo);

}  // namespace todakdv::lattice
