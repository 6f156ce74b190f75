#include "todakdv/solver/run.hpp"

#include <algorithm>
#include <cmath>

namespace todakdv::solver {

double Trajectory::max_drift(int i) const
{
    if (snapshots.empty())
        return 0;
    auto dev = [i](const lattice::ConservedReport& r) {
        return i == 1 ? r.dev1 : i == 2 ? r.dev2 : r.dev3;
    };
    auto full = [i](const lattice::ConservedReport& r) {
        return i == 1 ? r.d1 : i == 2 ? r.d2 : r.d3;
    };
    const auto& r0 = snapshots.front().conserved;
    long double ref = std::max(1.0L, std::fabs(full(r0)));
    long double worst = 0;
    for (const auto& s : snapshots)
        worst = std::max(worst, std::fabs(dev(s.conserved) - dev(r0)));
    return static_cast<double>(worst / ref);
}

Trajectory run(const LatticeState& s0, const SolverConfig& cfg,
               const std::function<void(const Snapshot&)>& on_snapshot)
{
    cfg.validate();
    s0.validate();
    Trajectory traj;
    traj.scheme = cfg.scheme;
    traj.dt = cfg.dt;
    const long steps = cfg.t_end == 0 ? 0 : static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    traj.steps = static_cast<int>(steps);

    auto record = [&](double t, const LatticeState& s) {
        Snapshot snap{t, s, lattice::conserved_C(s, t)};
        if (on_snapshot)
            on_snapshot(snap);
        traj.snapshots.push_back(std::move(snap));
    };

    LatticeState s = s0;
    record(0.0, s);
    for (long k = 1; k <= steps; ++k) {
        double t0 = (k - 1) * cfg.dt;
        double t1 = k == steps ? cfg.t_end : k * cfg.dt;
        double h = t1 - t0;
        try {
            s = cfg.scheme == Scheme::rk4 ? step_rk4(s, h, cfg.blowup_threshold) : step_cn(s, h, cfg);
        } catch (NumericalFailure& e) {
            e.step = static_cast<int>(k);
            throw;
        }
        if (k % cfg.output_every == 0 || k == steps)
            record(t1, s);
    }
    return traj;
}

}  // namespace todakdv::solver
