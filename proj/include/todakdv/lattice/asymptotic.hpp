#pragma once

#include "todakdv/lattice/profile.hpp"
#include "todakdv/symbolic/functional.hpp"

namespace todakdv::lattice {

struct AsymptoticC {
    int depth = 0;
    double C1 = 0, C2 = 0, C3 = 0;
    // Golden third-quantity expansion eps^5 (-7/12 int f^3 + 1/8 int f f''), for comparison.
    double C3_golden = 0;
};

// Period integral of a monomial in f and its derivatives: composite trapezoid rule on m points.
double quadrature(const FourierProfile& f, const symbolic::Monomial& m, int points = 4096);

// Sums the eps-expansion of a conserved quantity through its trusted order.
double evaluate_series(const symbolic::FSeries& s, const FourierProfile& f, double eps, int points = 4096);

// Evaluates the expansions of C1 (depth >= 1), C2 (depth >= 2), C3 (depth 3) by quadrature.
AsymptoticC asymptotic_C(const Profile& f, int N, int depth);
AsymptoticC asymptotic_C(const FourierProfile& f, int N, int depth);

}  // namespace todakdv::lattice
