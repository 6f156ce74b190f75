#include "todakdv/solver/reference_kdv.hpp"

#include <boost/numeric/odeint.hpp>
#include <fftw3.h>

#include <cmath>
#include <memory>
#include <stdexcept>

namespace todakdv::solver {

namespace {

using cplx = std::complex<double>;

// Holds FFTW plans and buffers for one grid size.
class Transform {
public:
    explicit Transform(int M)
        : M_(M),
          real_(fftw_alloc_real(M), fftw_free),
          spec_(fftw_alloc_complex(M / 2 + 1), fftw_free)
    {
        fwd_ = fftw_plan_dft_r2c_1d(M, real_.get(), spec_.get(), FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_c2r_1d(M, spec_.get(), real_.get(), FFTW_ESTIMATE);
    }
    ~Transform()
    {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;

    // spectrum (true coefficients) -> grid values
    void to_grid(const std::vector<cplx>& c, std::vector<double>& out)
    {
        for (int m = 0; m <= M_ / 2; ++m) {
            spec_.get()[m][0] = c[m].real();
            spec_.get()[m][1] = c[m].imag();
        }
        fftw_execute(bwd_);
        out.assign(real_.get(), real_.get() + M_);
    }
    void to_spectrum(const std::vector<double>& v, std::vector<cplx>& out)
    {
        std::copy(v.begin(), v.end(), real_.get());
        fftw_execute(fwd_);
        out.resize(M_ / 2 + 1);
        for (int m = 0; m <= M_ / 2; ++m)
            out[m] = cplx(spec_.get()[m][0], spec_.get()[m][1]) / double(M_);
    }

private:
    int M_;
    std::unique_ptr<double, decltype(&fftw_free)> real_;
    std::unique_ptr<fftw_complex, decltype(&fftw_free)> spec_;
    fftw_plan fwd_, bwd_;
};

}  // namespace

ReferenceKdV::ReferenceKdV(const lattice::FourierProfile& f0, double eps, ReferenceOptions opts)
    : eps_(eps), opts_(opts)
{
    if (opts_.grid < 8 || opts_.grid % 2)
        throw std::invalid_argument("reference grid must be even and at least 8");
    const int half = opts_.grid / 2;
    fhat_.assign(half + 1, cplx(0));
    fhat_[0] = f0.mean;
    for (const auto& md : f0.modes) {
        if (md.k <= 0 || 3 * md.k > opts_.grid)
            throw std::invalid_argument("profile mode outside the resolved band of the reference grid");
        // a cos + b sin = (a - i b)/2 e^{ikx} + c.c.
        fhat_[md.k] += cplx(md.a, -md.b) / 2.0;
    }
}

void ReferenceKdV::advance_to(double t)
{
    if (t == t_)
        return;
    const int M = opts_.grid;
    const int half = M / 2;
    const int cut = M / 3;
    const double e2 = eps_ * eps_;
    std::vector<double> omega(half + 1);
    for (int m = 0; m <= half; ++m) {
        double k = lattice::kTwoPi * m;
        omega[m] = e2 * k * k * k / 4.0;
    }
    // v_m = e^{-i omega_m (tau - t_)} f_m, so the stiff linear part drops out.
    using state_type = std::vector<double>;
    state_type v(2 * (half + 1));
    for (int m = 0; m <= half; ++m) {
        v[2 * m] = fhat_[m].real();
        v[2 * m + 1] = fhat_[m].imag();
    }
    Transform tr(M);
    std::vector<cplx> fh(half + 1), gh;
    std::vector<double> grid;
    const double t0 = t_;
    auto sys = [&](const state_type& x, state_type& dxdt, double tau) {
        double s = tau - t0;
        for (int m = 0; m <= half; ++m) {
            cplx vm(x[2 * m], x[2 * m + 1]);
            fh[m] = m <= cut ? std::polar(1.0, omega[m] * s) * vm : cplx(0);
        }
        tr.to_grid(fh, grid);
        for (double& g : grid)
            g = g * g;
        tr.to_spectrum(grid, gh);
        for (int m = 0; m <= half; ++m) {
            cplx d(0);
            if (m <= cut) {
                cplx nl = 1.5 * e2 * cplx(0, lattice::kTwoPi * m) * gh[m];
                d = std::polar(1.0, -omega[m] * s) * nl;
            }
            dxdt[2 * m] = d.real();
            dxdt[2 * m + 1] = d.imag();
        }
    };
    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<state_type>>(opts_.tol, opts_.tol);
    double span = t - t_;
    double dt0 = std::copysign(std::min(1e-3, std::abs(span)), span);
    odeint::integrate_adaptive(stepper, sys, v, t_, t, dt0);
    for (int m = 0; m <= half; ++m) {
        cplx vm(v[2 * m], v[2 * m + 1]);
        fhat_[m] = m <= cut ? std::polar(1.0, omega[m] * span) * vm : cplx(0);
    }
    t_ = t;
}

double ReferenceKdV::value(double x) const
{
    double s = fhat_[0].real();
    for (std::size_t m = 1; m < fhat_.size(); ++m) {
        if (fhat_[m] == cplx(0))
            continue;
        s += 2.0 * (fhat_[m] * std::polar(1.0, lattice::kTwoPi * double(m) * x)).real();
    }
    return s;
}

std::vector<double> ReferenceKdV::sample(int N) const
{
    std::vector<double> out(N);
    for (int n = 0; n < N; ++n)
        out[n] = value(double(n) / N);
    return out;
}

lattice::Profile reference_kdv(const lattice::FourierProfile& f0, double eps, double t, int N, ReferenceOptions opts)
{
    ReferenceKdV ref(f0, eps, opts);
    ref.advance_to(t);
    lattice::Profile p;
    p.samples = ref.sample(N);
    p.name = "reference";
    return p;
}

}  // namespace todakdv::solver
