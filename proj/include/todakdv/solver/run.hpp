#pragma once

#include "todakdv/lattice/conserved.hpp"
#include "todakdv/solver/integrators.hpp"

#include <functional>
#include <vector>

namespace todakdv::solver {

struct Snapshot {
    double t;
    LatticeState state;
    lattice::ConservedReport conserved;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    Scheme scheme = Scheme::crank_nicolson;
    double dt = 0;
    int steps = 0;
    // Max |drift| of d1..d3 against t = 0 over all recorded snapshots, relative to max(1, |d_i(0)|).
    double max_drift(int i) const;
};

// Integrates from s0 to cfg.t_end. The step count is ceil(t_end / dt); the last step is
// shortened so the final time is exactly t_end. Snapshots at t = 0, every output_every
// steps, and at t_end. A NumericalFailure carries the failing step index.
Trajectory run(const LatticeState& s0, const SolverConfig& cfg,
               const std::function<void(const Snapshot&)>& on_snapshot = {});

}  // namespace todakdv::solver
