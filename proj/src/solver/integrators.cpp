#include "todakdv/solver/integrators.hpp"

#include "todakdv/lattice/stencil.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <sstream>

namespace todakdv::solver {

Scheme parse_scheme(const std::string& name)
{
    if (name == "rk4")
        return Scheme::rk4;
    if (name == "cn" || name == "crank_nicolson")
        return Scheme::crank_nicolson;
    throw std::invalid_argument("unknown scheme '" + name + "' (expected rk4 or cn)");
}

const char* scheme_name(Scheme s)
{
    return s == Scheme::rk4 ? "rk4" : "cn";
}

void SolverConfig::validate() const
{
    if (!(dt > 0) || !std::isfinite(dt))
        throw std::invalid_argument("dt must be positive and finite");
    if (!(t_end >= 0) || !std::isfinite(t_end))
        throw std::invalid_argument("t_end must be non-negative and finite");
    if (!(newton_tol > 0))
        throw std::invalid_argument("newton_tol must be positive");
    if (newton_max_iter < 1)
        throw std::invalid_argument("newton_max_iter must be at least 1");
    if (output_every < 1)
        throw std::invalid_argument("output_every must be at least 1");
}

namespace {

using Vec = Eigen::VectorXd;

Vec pack(const LatticeState& s)
{
    Vec y(2 * s.N);
    for (int n = 0; n < s.N; ++n) {
        y[n] = s.a[n];
        y[s.N + n] = s.b[n];
    }
    return y;
}

LatticeState unpack(const Vec& y, int N)
{
    LatticeState s(N);
    for (int n = 0; n < N; ++n) {
        s.a[n] = y[n];
        s.b[n] = y[N + n];
    }
    return s;
}

Vec rhs(const Vec& y, int N)
{
    Vec f(2 * N);
    lattice::rhs_flow2(N, y.data(), y.data() + N, f.data(), f.data() + N);
    return f;
}

void check_blowup(const Vec& y, double threshold)
{
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (!std::isfinite(y[i]) || std::abs(y[i]) > threshold) {
            std::ostringstream os;
            os << "blow-up: entry " << i << " = " << y[i];
            throw NumericalFailure(NumericalFailure::Kind::blow_up, os.str());
        }
}

}  // namespace

LatticeState step_rk4(const LatticeState& s, double dt, double blowup_threshold)
{
    const int N = s.N;
    Vec y = pack(s);
    Vec k1 = rhs(y, N);
    Vec k2 = rhs(y + 0.5 * dt * k1, N);
    Vec k3 = rhs(y + 0.5 * dt * k2, N);
    Vec k4 = rhs(y + dt * k3, N);
    Vec out = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    check_blowup(out, blowup_threshold);
    return unpack(out, N);
}

LatticeState step_cn(const LatticeState& s, double dt, const SolverConfig& cfg, NewtonLog* log)
{
    const int N = s.N;
    const Vec y0 = pack(s);
    const Vec half = y0 + 0.5 * dt * rhs(y0, N);
    Vec y = y0;
    double scale = std::max(1.0, y0.lpNorm<Eigen::Infinity>());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    bool analyzed = false;
    if (log)
        *log = {};
    double res = 0;
    for (int it = 0; it <= cfg.newton_max_iter; ++it) {
        Vec F = y - 0.5 * dt * rhs(y, N) - half;
        res = F.lpNorm<Eigen::Infinity>();
        if (log)
            log->residuals.push_back(res);
        if (!std::isfinite(res))
            break;
        if (res <= cfg.newton_tol * scale) {
            if (log)
                log->iterations = it;
            Vec out = y;
            check_blowup(out, cfg.blowup_threshold);
            return unpack(out, N);
        }
        if (it == cfg.newton_max_iter)
            break;
        std::vector<Eigen::Triplet<double>> trip;
        for (const auto& e : lattice::rhs_flow2_jacobian(unpack(y, N)))
            trip.emplace_back(e.row, e.col, -0.5 * dt * e.value);
        for (int i = 0; i < 2 * N; ++i)
            trip.emplace_back(i, i, 1.0);
        Eigen::SparseMatrix<double> J(2 * N, 2 * N);
        J.setFromTriplets(trip.begin(), trip.end());
        if (!analyzed) {
            lu.analyzePattern(J);
            analyzed = true;
        }
        lu.factorize(J);
        if (lu.info() != Eigen::Success)
            throw NumericalFailure(NumericalFailure::Kind::newton, "Newton: singular Jacobian", res);
        y -= lu.solve(F);
    }
    std::ostringstream os;
    os << "Newton did not converge in " << cfg.newton_max_iter << " iterations; last residual " << res;
    throw NumericalFailure(NumericalFailure::Kind::newton, os.str(), res);
}

double spectral_radius(const LatticeState& s)
{
    const int n = 2 * s.N;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : lattice::rhs_flow2_jacobian(s))
        J(e.row, e.col) += e.value;
    Eigen::EigenSolver<Eigen::MatrixXd> es(J, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace todakdv::solver
