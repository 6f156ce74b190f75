#pragma once

#include "todakdv/lattice/profile.hpp"

#include <vector>

namespace todakdv::lattice {

// Scaled lattice variables a(n) = N^2 (A(n) - 2), b(n) = N^2 (B(n) + 1), periodic in n.
struct LatticeState {
    int N = 0;
    std::vector<double> a, b;

    LatticeState() = default;
    explicit LatticeState(int n) : N(n), a(n, 0.0), b(n, 0.0) {}

    double eps() const { return 1.0 / N; }
    double A(int n) const;
    double B(int n) const;
    bool finite() const;
    void validate() const;
};

inline int wrap(int n, int N)
{
    int r = n % N;
    return r < 0 ? r + N : r;
}

enum class InitVariant { paper_25_26, consistent_R };

InitVariant parse_init_variant(const std::string& name);
const char* init_variant_name(InitVariant v);

// Central difference Delta(c)(k) = N (c(k+1) - c(k-1)) / 2.
std::vector<double> central_delta(const std::vector<double>& c);

// paper_25_26: a = c + eps^2/4 (D1) + eps^3 c^2/8 - eps^4 Delta^3 c / 192 and the mirrored b,
//   with D1 = Delta c - eps^2 Delta^3 c / 6.
// consistent_R: a = c - eps R_fd, b = c + eps R_fd with R through its eps^3 term and the
//   derivatives replaced by D1, N^2 second differences and Delta^3.
LatticeState init_from_profile(const Profile& c, InitVariant variant = InitVariant::consistent_R);

}  // namespace todakdv::lattice
