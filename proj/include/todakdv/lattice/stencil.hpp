#pragma once

#include "todakdv/lattice/state.hpp"

#include <vector>

namespace todakdv::lattice {

struct Rhs {
    std::vector<double> da, db;
};

struct StencilTerms {
    double L, M, F, G;
};

// L, M, F, G at site k, G including its 1/N^2 term.
StencilTerms stencil_terms(const LatticeState& s, int k);

// da(k) = N (L(k) + eps^2 F(k)), db(k) = N (M(k) + eps^2 G(k)).
template <class Real>
void rhs_flow2(int N, const Real* a, const Real* b, Real* da, Real* db);

Rhs rhs_flow2(const LatticeState& s);

struct JacobianEntry {
    int row, col;
    double value;
};

// d(da, db)/d(a, b) with unknowns ordered (a(0..N-1), b(0..N-1)).
std::vector<JacobianEntry> rhs_flow2_jacobian(const LatticeState& s);

}  // namespace todakdv::lattice
