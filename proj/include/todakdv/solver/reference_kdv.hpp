#pragma once

#include "todakdv/lattice/profile.hpp"

#include <complex>
#include <vector>

namespace todakdv::solver {

struct ReferenceOptions {
    int grid = 256;        // spatial points; modes above grid/3 are zeroed
    double tol = 1e-13;    // absolute and relative tolerance of the adaptive integrator
};

// Pseudo-spectral solution of f_t = eps^2 (-f'''/4 + 3 f f') on [0, 1), periodic, using an
// integrating factor for the linear part and adaptive Dormand-Prince for the rest.
class ReferenceKdV {
public:
    ReferenceKdV(const lattice::FourierProfile& f0, double eps, ReferenceOptions opts = {});

    // Advances the internal solution to time t (t may go forward or backward).
    void advance_to(double t);
    double time() const { return t_; }
    // Value of the current solution at x, by trigonometric interpolation.
    double value(double x) const;
    std::vector<double> sample(int N) const;
    const std::vector<std::complex<double>>& coefficients() const { return fhat_; }

private:
    double eps_;
    ReferenceOptions opts_;
    double t_ = 0;
    std::vector<std::complex<double>> fhat_;  // f(x) = sum_m fhat_m e^{2 pi i m x}, m = 0..grid/2
};

// Samples f(n/N, t) of the reference solution.
lattice::Profile reference_kdv(const lattice::FourierProfile& f0, double eps, double t, int N,
                               ReferenceOptions opts = {});

}  // namespace todakdv::solver
