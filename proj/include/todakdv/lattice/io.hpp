#pragma once

#include "todakdv/lattice/conserved.hpp"
#include "todakdv/lattice/state.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace todakdv::lattice {

// Round-trip formatting (17 significant digits).
std::string fmt(double v);
std::string fmt(long double v);

void write_state_csv(std::ostream& out, const LatticeState& s);
LatticeState read_state_csv(std::istream& in);

void write_conserved_header(std::ostream& out);
void write_conserved_row(std::ostream& out, const ConservedReport& r);

// A CSV with header n,a,b is a lattice state; one with two columns (x,f or n,c) is a profile.
std::variant<LatticeState, Profile> read_init_csv(const std::string& path);

struct TimedState {
    double t;
    LatticeState state;
};
void write_trajectory_header(std::ostream& out);
void write_trajectory_rows(std::ostream& out, double t, const LatticeState& s);
std::vector<TimedState> read_trajectory_csv(std::istream& in);

}  // namespace todakdv::lattice
