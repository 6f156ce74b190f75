#pragma once

#include "todakdv/solver/reference_kdv.hpp"
#include "todakdv/solver/run.hpp"

#include <iosfwd>
#include <vector>

namespace todakdv::solver {

struct Comparison {
    double t = 0;
    std::vector<double> x, lattice, reference, error;
    double max_error = 0;
    double l2_error = 0;  // root mean square over the N sites
};

Comparison compare_state(const LatticeState& s, const lattice::FourierProfile& f0, double t,
                         ReferenceOptions opts = {});

// Uses the snapshot whose time matches t; throws if none does.
Comparison compare_to_kdv(const Trajectory& traj, const lattice::FourierProfile& f0, double t,
                          ReferenceOptions opts = {});

void write_comparison_csv(std::ostream& out, const Comparison& c);

}  // namespace todakdv::solver
