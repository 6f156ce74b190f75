#include "todakdv/solver/compare.hpp"

#include "todakdv/lattice/io.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace todakdv::solver {

Comparison compare_state(const LatticeState& s, const lattice::FourierProfile& f0, double t, ReferenceOptions opts)
{
    const int N = s.N;
    auto ref = reference_kdv(f0, s.eps(), t, N, opts);
    Comparison c;
    c.t = t;
    double sq = 0;
    for (int n = 0; n < N; ++n) {
        double avg = 0.5 * (s.a[n] + s.b[n]);
        double e = avg - ref.samples[n];
        c.x.push_back(double(n) / N);
        c.lattice.push_back(avg);
        c.reference.push_back(ref.samples[n]);
        c.error.push_back(e);
        c.max_error = std::max(c.max_error, std::abs(e));
        sq += e * e;
    }
    c.l2_error = std::sqrt(sq / N);
    return c;
}

Comparison compare_to_kdv(const Trajectory& traj, const lattice::FourierProfile& f0, double t, ReferenceOptions opts)
{
    for (const auto& snap : traj.snapshots)
        if (std::abs(snap.t - t) <= 1e-9 * std::max(1.0, std::abs(t)))
            return compare_state(snap.state, f0, snap.t, opts);
    throw std::invalid_argument("no snapshot at t = " + lattice::fmt(t));
}

void write_comparison_csv(std::ostream& out, const Comparison& c)
{
    out << "x,lattice,reference,error\n";
    for (std::size_t i = 0; i < c.x.size(); ++i)
        out << lattice::fmt(c.x[i]) << ',' << lattice::fmt(c.lattice[i]) << ','
            << lattice::fmt(c.reference[i]) << ',' << lattice::fmt(c.error[i]) << '\n';
}

}  // namespace todakdv::solver
