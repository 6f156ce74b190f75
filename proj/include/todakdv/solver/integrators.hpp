#pragma once

#include "todakdv/lattice/state.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace todakdv::solver {

using lattice::LatticeState;

enum class Scheme { rk4, crank_nicolson };

Scheme parse_scheme(const std::string& name);
const char* scheme_name(Scheme s);

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 0;
    Scheme scheme = Scheme::crank_nicolson;
    double newton_tol = 1e-12;
    int newton_max_iter = 25;
    int output_every = 1;
    // Entries beyond this magnitude count as blow-up, like non-finite ones.
    double blowup_threshold = 1e8;

    void validate() const;
};

class NumericalFailure : public std::runtime_error {
public:
    enum class Kind { blow_up, newton };
    NumericalFailure(Kind kind, const std::string& what, double last_residual = 0)
        : std::runtime_error(what), kind(kind), last_residual(last_residual)
    {
    }
    Kind kind;
    double last_residual;
    int step = -1;
};

// Classical four-stage Runge-Kutta step of the flow-2 lattice equations.
LatticeState step_rk4(const LatticeState& s, double dt, double blowup_threshold = 1e8);

struct NewtonLog {
    int iterations = 0;
    // max-norm residual before each update, then after the last one
    std::vector<double> residuals;
};

// Trapezoidal step y' = y + dt/2 (F(y) + F(y')), solved by Newton with the analytic Jacobian
// and a sparse LU factorization. Converged when the max-norm residual <= newton_tol.
LatticeState step_cn(const LatticeState& s, double dt, const SolverConfig& cfg, NewtonLog* log = nullptr);

// Largest |eigenvalue| of the Jacobian of the flow-2 right-hand side at s.
double spectral_radius(const LatticeState& s);

}  // namespace todakdv::solver
