#include "todakdv/lattice/profile.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace todakdv::lattice {

long double FourierProfile::derivative(long double x, int order) const
{
    long double v = order == 0 ? mean : 0.0L;
    for (const auto& m : modes) {
        long double w = kTwoPiL * m.k;
        long double th = w * x;
        long double c = std::cos(th), s = std::sin(th);
        // d^j/dx^j of cos and sin cycle with period 4
        long double dc, ds;
        switch (order % 4) {
        case 0: dc = c; ds = s; break;
        case 1: dc = -s; ds = c; break;
        case 2: dc = -c; ds = -s; break;
        default: dc = s; ds = -c; break;
        }
        v += std::pow(w, static_cast<long double>(order)) * (m.a * dc + m.b * ds);
    }
    return v;
}

std::vector<long double> FourierProfile::jet(long double x, int max_order) const
{
    std::vector<long double> out(max_order + 1);
    for (int k = 0; k <= max_order; ++k)
        out[k] = derivative(x, k);
    return out;
}

FourierProfile builtin_profile(const std::string& spec)
{
    FourierProfile f;
    if (spec == "zero")
        return f;
    if (spec.rfind("const:", 0) == 0) {
        std::size_t used = 0;
        std::string num = spec.substr(6);
        try {
            f.mean = std::stod(num, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != num.size())
            throw std::invalid_argument("builtin profile: bad constant in '" + spec + "'");
        return f;
    }
    if (spec == "cos") {
        f.modes.push_back({1, 1.0, 0.0});
        return f;
    }
    if (spec == "cos2") {
        f.modes.push_back({1, 1.0, 0.0});
        f.modes.push_back({2, 0.5, 0.0});
        return f;
    }
    if (spec.rfind("random:", 0) == 0) {
        unsigned long seed = std::stoul(spec.substr(7));
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        f.mean = 0.5 * u(rng);
        for (int k = 1; k <= 3; ++k)
            f.modes.push_back({k, u(rng) / k, u(rng) / k});
        return f;
    }
    throw std::invalid_argument("unknown builtin profile '" + spec + "'");
}

Profile sample_profile(const FourierProfile& f, int N, std::string name)
{
    if (N < 1)
        throw std::invalid_argument("sample_profile: N must be positive");
    Profile p;
    p.samples.resize(N);
    for (int n = 0; n < N; ++n)
        p.samples[n] = static_cast<double>(f.derivative(static_cast<long double>(n) / N, 0));
    p.closed_form = f;
    p.name = std::move(name);
    return p;
}

Profile sample_builtin(const std::string& spec, int N)
{
    return sample_profile(builtin_profile(spec), N, spec);
}

}  // namespace todakdv::lattice
