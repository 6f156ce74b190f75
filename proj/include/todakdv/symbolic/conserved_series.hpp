#pragma once

#include "todakdv/symbolic/functional.hpp"
#include "todakdv/symbolic/normalization.hpp"

namespace todakdv::symbolic {

struct ConservedSeries {
    FSeries d1, d2, d3;
    FSeries C1, C2, C3;
};

// Expansions of the lattice invariants for A, B given by the ansatz with the standard R
// (or the supplied one), using sum_n F(eps n) = eps^-1 int F.
ConservedSeries conserved_series(bool aligned = false);
ConservedSeries conserved_series(const EpsSeries& R, bool aligned = false);

}  // namespace todakdv::symbolic
