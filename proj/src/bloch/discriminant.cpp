#include "todakdv/bloch/discriminant.hpp"

#include "todakdv/lattice/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <exception>
#include <stdexcept>
#include <thread>

namespace todakdv::bloch {

std::vector<double> lambda_grid(double K, int samples)
{
    if (samples < 0)
        throw std::invalid_argument("sample count must be non-negative");
    std::vector<double> out;
    if (samples == 1)
        out.push_back(0.0);
    for (int i = 0; i < samples && samples > 1; ++i)
        out.push_back(-K + 2.0 * K * i / (samples - 1));
    return out;
}

DiscriminantSample discriminant_sample(const DiscreteCoefficients& c, const lattice::FourierProfile& g,
                                       double lambda, double tol)
{
    auto md = monodromy_discrete(c.A, c.B, lambda);
    auto mc = monodromy_continuous(g, lambda, tol);
    return {lambda, md.trace(), mc.trace(), md.det(), mc.det()};
}

std::vector<DiscriminantSample> discriminant_scan(const lattice::FourierProfile& g, int N,
                                                  const std::vector<double>& lambdas, double tol)
{
    std::vector<DiscriminantSample> out;
    if (lambdas.empty())
        return out;
    const auto c = discrete_from_potential(g, N);
    const std::size_t n = lambdas.size();
    out.resize(n);
    // samples are independent; contiguous blocks keep the output order fixed
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, (n + 63) / 64);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
        try {
            for (std::size_t i = w * n / workers; i < (w + 1) * n / workers; ++i)
                out[i] = discriminant_sample(c, g, lambdas[i], tol);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

BandSet band_set(const std::vector<double>& lambda, const std::vector<double>& trace)
{
    BandSet out;
    const std::size_t n = lambda.size();
    if (n == 0)
        return out;
    auto phi = [&](std::size_t i) { return std::abs(trace[i]) - 2.0; };
    auto cross = [&](std::size_t i) {
        double p0 = phi(i), p1 = phi(i + 1);
        return lambda[i] + (lambda[i + 1] - lambda[i]) * p0 / (p0 - p1);
    };
    bool inside = phi(0) <= 0;
    double start = lambda[0];
    std::size_t start_idx = 0;
    std::size_t last_end_idx = 0;
    bool have_band = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        bool next = phi(i + 1) <= 0;
        if (next == inside)
            continue;
        double x = cross(i);
        if (!inside) {
            if (have_band && i - last_end_idx < 3)
                out.coarse = true;
            start = x;
            start_idx = i;
        } else {
            out.bands.push_back({start, x});
            if (i - start_idx < 3)
                out.coarse = true;
            last_end_idx = i;
            have_band = true;
        }
        inside = next;
    }
    if (inside)
        out.bands.push_back({start, lambda.back()});
    return out;
}

namespace {

// Largest distance from a point of X to the set Y.
double directed(const std::vector<Interval>& X, const std::vector<Interval>& Y)
{
    auto dist = [&](double x) {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& I : Y)
            d = std::min(d, x < I.lo ? I.lo - x : x > I.hi ? x - I.hi : 0.0);
        return d;
    };
    double worst = 0;
    for (const auto& I : X) {
        // dist(., Y) is piecewise linear; its maxima on I sit at the ends of I or at gap midpoints of Y.
        worst = std::max({worst, dist(I.lo), dist(I.hi)});
        for (std::size_t j = 0; j + 1 < Y.size(); ++j) {
            double mid = 0.5 * (Y[j].hi + Y[j + 1].lo);
            if (mid > I.lo && mid < I.hi)
                worst = std::max(worst, dist(mid));
        }
    }
    return worst;
}

std::vector<Interval> sorted(std::vector<Interval> v)
{
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return v;
}

}  // namespace

double hausdorff(const std::vector<Interval>& X, const std::vector<Interval>& Y)
{
    if (X.empty() && Y.empty())
        return 0;
    if (X.empty() || Y.empty())
        return std::numeric_limits<double>::infinity();
    auto xs = sorted(X), ys = sorted(Y);
    return std::max(directed(xs, ys), directed(ys, xs));
}

BandDistance band_distance(const std::vector<DiscriminantSample>& samples, double K)
{
    std::vector<double> lam, td, tc;
    for (const auto& s : samples)
        if (std::abs(s.lambda) <= K) {
            lam.push_back(s.lambda);
            td.push_back(s.trace_discrete);
            tc.push_back(s.trace_continuous);
        }
    auto d = band_set(lam, td);
    auto c = band_set(lam, tc);
    return {hausdorff(d.bands, c.bands), d.coarse || c.coarse};
}

void write_spectrum_csv(std::ostream& out, const std::vector<DiscriminantSample>& samples)
{
    out << "lambda,trace_discrete,trace_continuous,det_discrete,det_continuous\n";
    for (const auto& s : samples)
        out << lattice::fmt(s.lambda) << ',' << lattice::fmt(s.trace_discrete) << ','
            << lattice::fmt(s.trace_continuous) << ',' << lattice::fmt(s.det_discrete) << ','
            << lattice::fmt(s.det_continuous) << '\n';
}

}  // namespace todakdv::bloch
