#include "todakdv/bloch/monodromy.hpp"

#include "todakdv/lattice/state.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <stdexcept>

namespace todakdv::bloch {

Monodromy2x2 monodromy_discrete(const std::vector<double>& A, const std::vector<double>& B, double lambda)
{
    if (A.size() != B.size() || A.empty())
        throw std::invalid_argument("A and B must be non-empty and of equal length");
    const long double N = A.size();
    const long double shift = lambda / (N * N);
    // M <- T(n) M
    long double m11 = 1, m12 = 0, m21 = 0, m22 = 1;
    for (std::size_t n = 0; n < A.size(); ++n) {
        long double t11 = A[n] - shift, t12 = B[n];
        long double n11 = t11 * m11 + t12 * m21;
        long double n12 = t11 * m12 + t12 * m22;
        m21 = m11;
        m22 = m12;
        m11 = n11;
        m12 = n12;
    }
    return {double(m11), double(m12), double(m21), double(m22)};
}

Monodromy2x2 monodromy_continuous(const lattice::FourierProfile& g, double lambda, double tol)
{
    namespace odeint = boost::numeric::odeint;
    using state_type = std::array<double, 4>;  // psi1, psi1', psi2, psi2'
    auto sys = [&](const state_type& y, state_type& dy, double x) {
        double q = g.value(x) - lambda;
        dy[0] = y[1];
        dy[1] = q * y[0];
        dy[2] = y[3];
        dy[3] = q * y[2];
    };
    state_type y{1, 0, 0, 1};
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<state_type>());
    try {
        odeint::integrate_adaptive(stepper, sys, y, 0.0, 1.0, 1e-3);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("monodromy integration failed: ") + e.what());
    }
    for (double v : y)
        if (!std::isfinite(v))
            throw std::runtime_error("monodromy integration produced non-finite values");
    return {y[0], y[2], y[1], y[3]};
}

DiscreteCoefficients discrete_from_potential(const lattice::FourierProfile& g, int N)
{
    lattice::FourierProfile f = g;
    f.mean /= 2;
    for (auto& m : f.modes) {
        m.a /= 2;
        m.b /= 2;
    }
    auto s = lattice::init_from_profile(lattice::sample_profile(f, N), lattice::InitVariant::consistent_R);
    DiscreteCoefficients c;
    for (int n = 0; n < N; ++n) {
        c.A.push_back(s.A(n));
        c.B.push_back(s.B(n));
    }
    return c;
}

}  // namespace todakdv::bloch
