#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace todakdv::lattice {

// f(x) = mean + sum_m (a_m cos 2 pi k_m x + b_m sin 2 pi k_m x), period 1.
struct FourierProfile {
    struct Mode {
        int k;
        double a;
        double b;
    };
    double mean = 0;
    std::vector<Mode> modes;

    // order-th x-derivative at x
    long double derivative(long double x, int order) const;
    // f, f', ..., f^(max_order) at x
    std::vector<long double> jet(long double x, int max_order) const;
    double value(double x) const { return static_cast<double>(derivative(x, 0)); }
    bool is_constant() const { return modes.empty(); }
};

// Builtins: zero, const:<kappa>, cos (cos 2 pi x), cos2 (cos 2 pi x + cos 4 pi x / 2),
// random:<seed> (a few low modes with seeded amplitudes).
FourierProfile builtin_profile(const std::string& spec);

// Samples c(n) = f(n/N), optionally tagged with the closed form they came from.
struct Profile {
    std::vector<double> samples;
    std::optional<FourierProfile> closed_form;
    std::string name;

    int N() const { return static_cast<int>(samples.size()); }
};

Profile sample_profile(const FourierProfile& f, int N, std::string name = {});
Profile sample_builtin(const std::string& spec, int N);

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

}  // namespace todakdv::lattice
