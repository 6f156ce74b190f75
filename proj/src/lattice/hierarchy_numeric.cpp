#include "todakdv/lattice/hierarchy_numeric.hpp"

#include "todakdv/lattice/split.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace todakdv::lattice {

namespace {

using S = Split<long double>;

struct LocalTable {
    const std::vector<S>& A;
    const std::vector<S>& B;
    int N;
    int origin;
    std::map<std::pair<int, int>, S> memo;

    const S& a_at(int n) const { return A[wrap(origin + n, N)]; }
    const S& b_at(int n) const { return B[wrap(origin + n, N)]; }

    S d(int i, int n)
    {
        if (i < 0 || (i > 0 && n == 0))
            return S{0, 0};
        if (i == 0)
            return S{1, 0};
        auto key = std::make_pair(i, n);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        S v = n > 0 ? d(i, n - 1) + a_at(n - 1) * d(i - 1, n - 1) + b_at(n - 1) * d(i - 2, n - 2)
                    : d(i, n + 1) - a_at(n) * d(i - 1, n) - b_at(n) * d(i - 2, n - 1);
        memo.emplace(key, v);
        return v;
    }
};

// XZ, YZ at one site for flow k (without the factor N).
std::pair<S, S> site_rhs(const std::vector<S>& A, const std::vector<S>& B, int N, int site, int k)
{
    LocalTable t{A, B, N, site, {}};
    if (k == 1)
        return {t.b_at(0) - t.b_at(1), t.b_at(0) * (t.a_at(0) - t.a_at(-1))};
    std::vector<std::array<S, 2>> ap(k);
    for (int p = k - 1; p >= 0; --p)
        for (int n = -1; n <= 0; ++n) {
            S x = t.d(k - p, n + k) - t.d(k - p, n);
            for (int r = p + 1; r <= k - 1; ++r)
                x = x - ap[r][n + 1] * t.d(r - p, n + r);
            ap[p][n + 1] = x;
        }
    S XZ = ap[1][1] * t.b_at(1) - ap[1][0] * t.b_at(0);
    S YZ = t.b_at(0) * (ap[0][1] - ap[0][0]);
    return {XZ, YZ};
}

Rhs single_flow(const LatticeState& s, int k)
{
    const int N = s.N;
    const long double n = N;
    const long double e2 = 1.0L / (n * n);
    std::vector<S> A(N), B(N);
    for (int i = 0; i < N; ++i) {
        A[i] = S{2, e2 * s.a[i]};
        B[i] = S{-1, e2 * s.b[i]};
    }
    Rhs r{std::vector<double>(N), std::vector<double>(N)};
    const long double n3 = n * n * n;
    for (int i = 0; i < N; ++i) {
        auto [XZ, YZ] = site_rhs(A, B, N, i, k);
        // the background is an equilibrium: base parts cancel exactly
        r.da[i] = static_cast<double>(n3 * (XZ.base + XZ.dev));
        r.db[i] = static_cast<double>(n3 * (YZ.base + YZ.dev));
    }
    return r;
}

void axpy(Rhs& acc, double c, const Rhs& x)
{
    for (std::size_t i = 0; i < acc.da.size(); ++i) {
        acc.da[i] += c * x.da[i];
        acc.db[i] += c * x.db[i];
    }
}

}  // namespace

Rhs rhs_flow_k(const LatticeState& s, int k, bool combo)
{
    if (k < 1 || k > 4)
        throw std::invalid_argument("rhs_flow_k: k=" + std::to_string(k) + " outside 1..4");
    Rhs r = single_flow(s, k);
    if (!combo || k == 1)
        return r;
    Rhs d1 = single_flow(s, 1);
    if (k == 2) {
        axpy(r, 2, d1);
        return r;
    }
    Rhs d2 = single_flow(s, 2);
    if (k == 3) {
        axpy(r, -2, d1);
        axpy(r, 2, d2);
        return r;
    }
    Rhs d3 = single_flow(s, 3);
    axpy(r, 4, d1);
    axpy(r, -2, d2);
    axpy(r, 2, d3);
    return r;
}

}  // namespace todakdv::lattice
