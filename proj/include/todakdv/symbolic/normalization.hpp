#pragma once

// Lattice invariants d_1..d_3 from period sums, and the normalizations C1..C3 built from them.
// Written once over a generic scalar so the same formulas serve exact symbolic expansion
// (Laurent series of period integrals) and the numeric lattice (split background/deviation).
//
// With A = 2 + eps^2 a, B = -1 + eps^2 b:
//   Sa = sum a, Sb = sum b, Saa = sum a^2, Saaa = sum a^3, Sab = sum a(n) b(n),
//   Samb = sum a(n-1) b(n).

#include "todakdv/diffpoly/rational.hpp"

namespace todakdv::symbolic {

enum class Recursion;

template <class T>
struct SumInputs {
    T one, N, eps;
    T Sa, Sb, Saa, Saaa, Sab, Samb;
};

template <class T>
struct DValues {
    T d1, d2, d3;
};

template <class T>
struct CValues {
    T C1, C2, C3;
};

// aligned: d_3 of the aligned recursion, which lacks the sum A(n-1) B(n) term.
template <class T>
DValues<T> d_from_sums(const SumInputs<T>& s, bool aligned = false)
{
    using R = diffpoly::Rational;
    T e2 = s.eps * s.eps;
    T e4 = e2 * e2;
    T e6 = e4 * e2;
    T P1 = s.N * R(2) + e2 * s.Sa;
    T P2 = s.N * R(4) + e2 * s.Sa * R(4) + e4 * s.Saa;
    T P3 = s.N * R(8) + e2 * s.Sa * R(12) + e4 * s.Saa * R(6) + e6 * s.Saaa;
    T Q1 = e2 * s.Sb - s.N;
    T X0 = e2 * s.Sb * R(2) - e2 * s.Sa - s.N * R(2) + e4 * s.Sab;
    T X1 = e2 * s.Sb * R(2) - e2 * s.Sa - s.N * R(2) + e4 * s.Samb;
    DValues<T> d;
    d.d1 = P1;
    d.d2 = (P1 * P1 - P2) * R(1, 2) + Q1;
    T e3 = (P1 * P1 * P1 - P1 * P2 * R(3) + P3 * R(2)) * R(1, 6);
    d.d3 = e3 + P1 * Q1 - X0;
    if (!aligned)
        d.d3 = d.d3 - X1;
    return d;
}

// C1 = (d1 - 2N)/eps
// C2 = -(4/3)(d2 - 2N^2 + 3N - (2 - eps) C1 - eps^2 C1^2 / 2)
// C3 = d3 - P(N, C1, C2), P chosen so every term below eps^5 cancels.
template <class T>
CValues<T> c_from_d(const DValues<T>& d, const T& one, const T& N, const T& eps, bool aligned = false)
{
    using R = diffpoly::Rational;
    CValues<T> c;
    c.C1 = (d.d1 - N * R(2)) * N;
    T e2 = eps * eps;
    c.C2 = (d.d2 - N * N * R(2) + N * R(3) - (one * R(2) - eps) * c.C1 - e2 * c.C1 * c.C1 * R(1, 2)) * R(-4, 3);
    T C1sq = c.C1 * c.C1;
    T P;
    if (!aligned) {
        P = N * N * N * R(4, 3) - N * N * R(6) + N * R(20, 3) + (N * R(2) - one * R(5) + eps * R(2)) * c.C1 +
            (one - N * R(3, 2)) * c.C2;
    } else {
        P = N * N * N * R(4, 3) - N * N * R(6) + N * R(14, 3) + (N * R(2) - one * R(5) + eps * R(3)) * c.C1 +
            (one * R(3, 2) - N * R(3, 2)) * c.C2;
    }
    P = P - eps * c.C1 * c.C2 * R(3, 4) + (eps - e2) * C1sq + e2 * eps * C1sq * c.C1 * R(1, 6);
    c.C3 = d.d3 - P;
    return c;
}

}  // namespace todakdv::symbolic
