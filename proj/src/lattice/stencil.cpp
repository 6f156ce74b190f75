#include "todakdv/lattice/stencil.hpp"

namespace todakdv::lattice {

StencilTerms stencil_terms(const LatticeState& s, int k)
{
    int N = s.N;
    auto a = [&](int n) { return s.a[wrap(n, N)]; };
    auto b = [&](int n) { return s.b[wrap(n, N)]; };
    double iN2 = 1.0 / (static_cast<double>(N) * N);
    StencilTerms t;
    t.L = 2 * b(k + 1) - 2 * b(k) - a(k + 1) + a(k - 1);
    t.M = 2 * a(k) - 2 * a(k - 1) - b(k + 1) + b(k - 1);
    t.F = b(k + 1) * a(k) + b(k + 1) * a(k + 1) - b(k) * a(k) - b(k) * a(k - 1);
    t.G = -2 * b(k) * a(k) + 2 * b(k) * a(k - 1) + a(k) * a(k) - a(k - 1) * a(k - 1) + b(k) * b(k + 1) -
          b(k) * b(k - 1) + (-b(k) * a(k) * a(k) + b(k) * a(k - 1) * a(k - 1)) * iN2;
    return t;
}

template <class Real>
void rhs_flow2(int N, const Real* a, const Real* b, Real* da, Real* db)
{
    const Real n = N;
    const Real e2 = Real(1) / (n * n);
    for (int k = 0; k < N; ++k) {
        int kp = k + 1 == N ? 0 : k + 1;
        int km = k == 0 ? N - 1 : k - 1;
        Real L = 2 * (b[kp] - b[k]) - a[kp] + a[km];
        Real M = 2 * (a[k] - a[km]) - b[kp] + b[km];
        Real F = b[kp] * (a[k] + a[kp]) - b[k] * (a[k] + a[km]);
        Real G = -2 * b[k] * (a[k] - a[km]) + (a[k] - a[km]) * (a[k] + a[km]) + b[k] * (b[kp] - b[km]) -
                 e2 * b[k] * (a[k] - a[km]) * (a[k] + a[km]);
        da[k] = n * (L + e2 * F);
        db[k] = n * (M + e2 * G);
    }
}

template void rhs_flow2<double>(int, const double*, const double*, double*, double*);
template void rhs_flow2<long double>(int, const long double*, const long double*, long double*, long double*);

Rhs rhs_flow2(const LatticeState& s)
{
    Rhs r{std::vector<double>(s.N), std::vector<double>(s.N)};
    rhs_flow2(s.N, s.a.data(), s.b.data(), r.da.data(), r.db.data());
    return r;
}

std::vector<JacobianEntry> rhs_flow2_jacobian(const LatticeState& s)
{
    const int N = s.N;
    const double n = N;
    const double e2 = 1.0 / (n * n);
    std::vector<JacobianEntry> J;
    J.reserve(12 * N);
    auto ia = [&](int k) { return wrap(k, N); };
    auto ib = [&](int k) { return N + wrap(k, N); };
    auto a = [&](int k) { return s.a[wrap(k, N)]; };
    auto b = [&](int k) { return s.b[wrap(k, N)]; };
    for (int k = 0; k < N; ++k) {
        // da(k) = n L + n e2 F
        int r = k;
        J.push_back({r, ia(k + 1), n * (-1 + e2 * b(k + 1))});
        J.push_back({r, ia(k - 1), n * (1 - e2 * b(k))});
        J.push_back({r, ia(k), n * e2 * (b(k + 1) - b(k))});
        J.push_back({r, ib(k + 1), n * (2 + e2 * (a(k) + a(k + 1)))});
        J.push_back({r, ib(k), n * (-2 - e2 * (a(k) + a(k - 1)))});
        // db(k) = n M + n e2 G
        r = N + k;
        double ak = a(k), am = a(k - 1), bk = b(k);
        J.push_back({r, ia(k), n * (2 + e2 * (-2 * bk + 2 * ak - 2 * e2 * bk * ak))});
        J.push_back({r, ia(k - 1), n * (-2 + e2 * (2 * bk - 2 * am + 2 * e2 * bk * am))});
        J.push_back({r, ib(k + 1), n * (-1 + e2 * bk)});
        J.push_back({r, ib(k - 1), n * (1 - e2 * bk)});
        J.push_back({r, ib(k), n * e2 * (-2 * ak + 2 * am + b(k + 1) - b(k - 1) + e2 * (am * am - ak * ak))});
    }
    return J;
}

}  // namespace todakdv::lattice
