#pragma once

#include "todakdv/lattice/state.hpp"

namespace todakdv::lattice {

// d_i(N) by running the recursion from n = 0 to N (long double).
long double conserved_d(const LatticeState& s, int i);
// Same with the aligned recursion, B(n-1) d(i-2, n-1).
long double conserved_d_aligned(const LatticeState& s, int i);

struct ConservedReport {
    double t = 0;
    long double d1 = 0, d2 = 0, d3 = 0;
    long double C1 = 0, C2 = 0, C3 = 0;
    // d_i minus its value on the background A = 2, B = -1, computed without cancellation;
    // drift is measured on these.
    long double dev1 = 0, dev2 = 0, dev3 = 0;
};

ConservedReport conserved_C(const LatticeState& s, double t = 0);
// C3 built from the aligned recursion and its normalization (diagnostic; not an invariant).
long double conserved_C3_aligned(const LatticeState& s);

}  // namespace todakdv::lattice
