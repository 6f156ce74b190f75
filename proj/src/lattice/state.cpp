#include "todakdv/lattice/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace todakdv::lattice {

double LatticeState::A(int n) const
{
    return 2.0 + a[wrap(n, N)] / (static_cast<double>(N) * N);
}

double LatticeState::B(int n) const
{
    return -1.0 + b[wrap(n, N)] / (static_cast<double>(N) * N);
}

bool LatticeState::finite() const
{
    for (int n = 0; n < N; ++n)
        if (!std::isfinite(a[n]) || !std::isfinite(b[n]))
            return false;
    return true;
}

void LatticeState::validate() const
{
    if (N < 1 || static_cast<int>(a.size()) != N || static_cast<int>(b.size()) != N)
        throw std::invalid_argument("LatticeState: size mismatch");
    if (!finite())
        throw std::invalid_argument("LatticeState: non-finite entry");
}

InitVariant parse_init_variant(const std::string& name)
{
    if (name == "paper" || name == "paper_25_26")
        return InitVariant::paper_25_26;
    if (name == "consistent" || name == "consistent_R")
        return InitVariant::consistent_R;
    throw std::invalid_argument("unknown init variant '" + name + "'");
}

const char* init_variant_name(InitVariant v)
{
    return v == InitVariant::paper_25_26 ? "paper" : "consistent";
}

std::vector<double> central_delta(const std::vector<double>& c)
{
    int N = static_cast<int>(c.size());
    std::vector<double> d(N);
    for (int k = 0; k < N; ++k)
        d[k] = N * (c[wrap(k + 1, N)] - c[wrap(k - 1, N)]) / 2.0;
    return d;
}

LatticeState init_from_profile(const Profile& prof, InitVariant variant)
{
    const std::vector<double>& c = prof.samples;
    int N = static_cast<int>(c.size());
    if (N < 8)
        throw std::invalid_argument("init_from_profile: N must be at least 8, got " + std::to_string(N));
    const double eps = 1.0 / N;
    const double e2 = eps * eps, e3 = e2 * eps, e4 = e3 * eps;
    std::vector<double> d1c = central_delta(c);
    std::vector<double> d3c = central_delta(central_delta(d1c));
    LatticeState s(N);
    for (int k = 0; k < N; ++k) {
        double D1 = d1c[k] - e2 * d3c[k] / 6.0;
        double D3 = d3c[k];
        if (variant == InitVariant::paper_25_26) {
            double corr = 0.25 * e2 * D1 + e3 * c[k] * c[k] / 8.0 - e4 * D3 / 192.0;
            s.a[k] = c[k] + corr;
            s.b[k] = c[k] - corr;
        } else {
            double D2 = static_cast<double>(N) * N * (c[wrap(k + 1, N)] - 2.0 * c[k] + c[wrap(k - 1, N)]);
            double R = -0.25 * D1 - eps * c[k] * c[k] / 8.0 + e2 * D3 / 192.0 +
                       e3 * (c[k] * D2 / 64.0 + D1 * D1 / 64.0 - c[k] * c[k] * c[k] / 32.0);
            s.a[k] = c[k] - eps * R;
            s.b[k] = c[k] + eps * R;
        }
    }
    return s;
}

}  // namespace todakdv::lattice
