#pragma once

#include "todakdv/lattice/profile.hpp"

#include <vector>

namespace todakdv::bloch {

struct Monodromy2x2 {
    double m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    double trace() const { return m11 + m22; }
    double det() const { return m11 * m22 - m12 * m21; }
};

// Product over n = 0..N-1 of [[A(n) - lambda eps^2, B(n)], [1, 0]] acting on (psi(n+1), psi(n)),
// for lambda psi(n) = N^2 (-psi(n+1) + A(n) psi(n) + B(n) psi(n-1)), eps = 1/N.
Monodromy2x2 monodromy_discrete(const std::vector<double>& A, const std::vector<double>& B, double lambda);

// Period map of -psi'' + g psi = lambda psi on [0, 1], columns started from (psi, psi') = (1, 0)
// and (0, 1). Adaptive Runge-Kutta-Fehlberg 7(8) at absolute and relative tolerance tol.
Monodromy2x2 monodromy_continuous(const lattice::FourierProfile& g, double lambda, double tol = 1e-11);

// Coefficients A(n), B(n) of the discrete operator built from g through f = g/2 and the
// finite-difference R ansatz.
struct DiscreteCoefficients {
    std::vector<double> A, B;
};
DiscreteCoefficients discrete_from_potential(const lattice::FourierProfile& g, int N);

}  // namespace todakdv::bloch
