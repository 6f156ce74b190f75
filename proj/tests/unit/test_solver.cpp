#include "todakdv/lattice/conserved.hpp"
#include "todakdv/lattice/stencil.hpp"
#include "todakdv/solver/compare.hpp"
#include "todakdv/solver/run.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace todakdv;
using namespace todakdv::solver;
using lattice::LatticeState;

namespace {

LatticeState smooth_state(int N, double amp)
{
    LatticeState s(N);
    for (int n = 0; n < N; ++n) {
        double x = double(n) / N;
        s.a[n] = amp * (std::cos(lattice::kTwoPi * x) + 0.3 * std::sin(2 * lattice::kTwoPi * x));
        s.b[n] = amp * (0.5 * std::cos(lattice::kTwoPi * x) - 0.2 * std::cos(3 * lattice::kTwoPi * x));
    }
    return s;
}

double diff(const LatticeState& x, const LatticeState& y)
{
    double m = 0;
    for (int n = 0; n < x.N; ++n)
        m = std::max({m, std::abs(x.a[n] - y.a[n]), std::abs(x.b[n] - y.b[n])});
    return m;
}

double norm(const LatticeState& x)
{
    return diff(x, LatticeState(x.N));
}

LatticeState euler(const LatticeState& s, double dt)
{
    auto r = lattice::rhs_flow2(s);
    LatticeState out = s;
    for (int n = 0; n < s.N; ++n) {
        out.a[n] += dt * r.da[n];
        out.b[n] += dt * r.db[n];
    }
    return out;
}

}  // namespace

TEST_CASE("config validation and scheme names")
{
    SolverConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.dt = 0;
    CHECK_THROWS(cfg.validate());
    cfg.dt = 1e-3;
    cfg.output_every = 0;
    CHECK_THROWS(cfg.validate());
    CHECK(parse_scheme("rk4") == Scheme::rk4);
    CHECK(parse_scheme("cn") == Scheme::crank_nicolson);
    CHECK(std::string(scheme_name(Scheme::crank_nicolson)) == "cn");
    CHECK_THROWS(parse_scheme("euler"));
}

TEST_CASE("rk4 step")
{
    LatticeState c(16);
    std::fill(c.a.begin(), c.a.end(), 0.3);
    std::fill(c.b.begin(), c.b.end(), -0.7);
    CHECK(diff(step_rk4(c, 1e-3), c) == 0);

    // distance to an Euler step shrinks like dt^2
    auto s = smooth_state(16, 2.0);
    double e1 = diff(step_rk4(s, 1e-3), euler(s, 1e-3));
    double e2 = diff(step_rk4(s, 5e-4), euler(s, 5e-4));
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));

    auto big = smooth_state(16, 1e9);
    CHECK_THROWS_AS(step_rk4(big, 1e-3), NumericalFailure);
}

TEST_CASE("crank-nicolson step")
{
    SolverConfig cfg;
    LatticeState c(16);
    std::fill(c.a.begin(), c.a.end(), 1.2);
    NewtonLog log;
    CHECK(diff(step_cn(c, 1e-2, cfg, &log), c) <= 1e-14);
    CHECK(log.iterations <= 1);

    auto s = smooth_state(32, 3.0);
    const double dt = 1e-3;
    NewtonLog lf;
    auto fwd = step_cn(s, dt, cfg, &lf);
    auto back = step_cn(fwd, -dt, cfg);
    CHECK(diff(back, s) <= 10 * cfg.newton_tol * std::max(1.0, norm(s)));

    // quadratic convergence: each residual is far below the previous one
    REQUIRE(lf.residuals.size() >= 3);
    CHECK(lf.residuals.back() <= cfg.newton_tol * std::max(1.0, norm(s)));
    CHECK(lf.residuals[1] <= 1e-2 * lf.residuals[0]);
    CHECK(lf.residuals[2] <= 1e-4 * lf.residuals[0]);

    // one step differs from rk4 at third order in dt
    double d1 = diff(step_cn(s, 2e-3, cfg), step_rk4(s, 2e-3));
    double d2 = diff(step_cn(s, 1e-3, cfg), step_rk4(s, 1e-3));
    CHECK(d1 / d2 == doctest::Approx(8.0).epsilon(0.1));

    SolverConfig strict;
    strict.newton_max_iter = 1;
    strict.newton_tol = 1e-15;
    CHECK_THROWS_AS(step_cn(s, 1e-2, strict), NumericalFailure);
}

TEST_CASE("spectral radius grows with N")
{
    double r32 = spectral_radius(LatticeState(32));
    double r64 = spectral_radius(LatticeState(64));
    CHECK(r64 / r32 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("run bookkeeping")
{
    auto s = smooth_state(16, 1.0);
    SolverConfig cfg;
    cfg.t_end = 0;
    auto t0 = run(s, cfg);
    REQUIRE(t0.snapshots.size() == 1);
    CHECK(t0.snapshots[0].t == 0);
    CHECK(t0.steps == 0);

    cfg.t_end = 0.0105;
    cfg.output_every = 4;
    int calls = 0;
    auto tr = run(s, cfg, [&](const Snapshot&) { ++calls; });
    CHECK(tr.steps == 11);
    CHECK(tr.snapshots.back().t == doctest::Approx(0.0105).epsilon(1e-14));
    CHECK(tr.snapshots.size() == 4);  // 0, 4, 8, final
    CHECK(calls == 4);
}

TEST_CASE("constant state stays put over many steps")
{
    LatticeState c(16);
    std::fill(c.a.begin(), c.a.end(), 0.5);
    std::fill(c.b.begin(), c.b.end(), 0.25);
    SolverConfig cfg;
    cfg.t_end = 1.0;
    cfg.output_every = 100;
    auto tr = run(c, cfg);
    CHECK(tr.steps == 1000);
    CHECK(diff(tr.snapshots.back().state, c) <= 1e-12);
    for (int i = 1; i <= 3; ++i)
        CHECK(tr.max_drift(i) <= 1e-12);
}

TEST_CASE("explicit stepping at a large step blows up, implicit does not")
{
    auto s = lattice::init_from_profile(lattice::sample_builtin("cos", 64));
    SolverConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 0.5;
    cfg.output_every = 10;
    cfg.scheme = Scheme::rk4;
    try {
        run(s, cfg);
        FAIL("rk4 should blow up");
    } catch (const NumericalFailure& e) {
        CHECK(e.kind == NumericalFailure::Kind::blow_up);
        CHECK(e.step > 0);
        CHECK(e.step < 50);
    }
    cfg.scheme = Scheme::crank_nicolson;
    auto tr = run(s, cfg);
    CHECK(tr.snapshots.back().state.finite());
    CHECK(tr.max_drift(1) <= 1e-12);
    CHECK(tr.max_drift(2) <= 1e-12);
}

TEST_CASE("reference kdv")
{
    auto k = lattice::builtin_profile("const:0.7");
    ReferenceKdV rc(k, 1.0 / 16);
    rc.advance_to(1.0);
    CHECK(rc.value(0.3) == doctest::Approx(0.7).epsilon(1e-13));

    auto cosf = lattice::builtin_profile("cos");
    ReferenceKdV r0(cosf, 1.0 / 16);
    CHECK(r0.value(0.2) == doctest::Approx(std::cos(lattice::kTwoPi * 0.2)).epsilon(1e-13));

    // tiny amplitude: linear dispersion f = d cos(2 pi x + eps^2 (2 pi)^3 t / 4)
    const double d = 1e-6, eps = 1.0 / 8, t = 1.0;
    lattice::FourierProfile small;
    small.modes.push_back({1, d, 0.0});
    ReferenceKdV rs(small, eps);
    rs.advance_to(t);
    const double w = eps * eps * std::pow(lattice::kTwoPi, 3) / 4;
    for (double x : {0.0, 0.17, 0.5, 0.81})
        CHECK(std::abs(rs.value(x) - d * std::cos(lattice::kTwoPi * x + w * t)) <= 1e-7 * d);  // nonlinear correction is O(d^2)

    // short time: f(t) = f0 + t eps^2 (-f'''/4 + 3 f f') + O(t^2)
    auto taylor_err = [&](double tt) {
        ReferenceKdV r(cosf, eps);
        r.advance_to(tt);
        double m = 0;
        for (int n = 0; n < 32; ++n) {
            long double x = n / 32.0L;
            double f = cosf.derivative(x, 0), f1 = cosf.derivative(x, 1), f3 = cosf.derivative(x, 3);
            m = std::max(m, std::abs(r.value(x) - (f + tt * eps * eps * (-0.25 * f3 + 3 * f * f1))));
        }
        return m;
    };
    CHECK(taylor_err(2e-3) / taylor_err(1e-3) == doctest::Approx(4.0).epsilon(0.05));

    CHECK_THROWS(ReferenceKdV(cosf, eps, ReferenceOptions{7, 1e-13}));
    lattice::FourierProfile high;
    high.modes.push_back({40, 1.0, 0.0});
    CHECK_THROWS(ReferenceKdV(high, eps, ReferenceOptions{64, 1e-13}));
}

TEST_CASE("comparison against the reference")
{
    auto k = lattice::builtin_profile("const:0.5");
    LatticeState c(16);
    std::fill(c.a.begin(), c.a.end(), 0.5);
    std::fill(c.b.begin(), c.b.end(), 0.5);
    SolverConfig cfg;
    cfg.t_end = 0.1;
    cfg.output_every = 10;
    auto tr = run(c, cfg);
    auto cmp = compare_to_kdv(tr, k, 0.1);
    CHECK(cmp.max_error <= 1e-10);
    CHECK(cmp.x.size() == 16);
    CHECK_THROWS(compare_to_kdv(tr, k, 0.055));

    auto cosf = lattice::builtin_profile("cos");
    auto s = lattice::init_from_profile(lattice::sample_profile(cosf, 64));
    auto c0 = compare_state(s, cosf, 0.0);
    CHECK(c0.max_error <= 1e-15);
    CHECK(c0.l2_error <= c0.max_error);
}
