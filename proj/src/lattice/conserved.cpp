#include "todakdv/lattice/conserved.hpp"

#include "todakdv/lattice/split.hpp"
#include "todakdv/symbolic/normalization.hpp"

#include <stdexcept>
#include <string>

namespace todakdv::lattice {

namespace {

long double run_recursion(const LatticeState& s, int i, bool aligned)
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("conserved_d: i=" + std::to_string(i) + " outside 1..3");
    const int N = s.N;
    const long double e2 = 1.0L / (static_cast<long double>(N) * N);
    auto A = [&](int n) { return 2.0L + e2 * s.a[wrap(n, N)]; };
    auto B = [&](int n) { return -1.0L + e2 * s.b[wrap(n, N)]; };
    // prev2 = d_j(n-2), prev1 = d_j(n-1); start from d_j(-1) (backward step) and d_j(0).
    long double prev2[4] = {1, -A(-1), 0, 0};
    long double prev1[4] = {1, 0, 0, 0};
    long double cur[4] = {1, 0, 0, 0};
    for (int n = 1; n <= N; ++n) {
        for (int j = 1; j <= i; ++j) {
            long double back = j < 2 ? 0.0L : (aligned ? prev1[j - 2] : prev2[j - 2]);
            cur[j] = prev1[j] + A(n - 1) * prev1[j - 1] + B(n - 1) * back;
        }
        for (int j = 0; j <= 3; ++j) {
            prev2[j] = prev1[j];
            prev1[j] = cur[j];
        }
    }
    return prev1[i];
}

using Q = Split<diffpoly::Rational>;

symbolic::SumInputs<Q> sums(const LatticeState& s)
{
    const int N = s.N;
    long double Sa = 0, Sb = 0, Saa = 0, Saaa = 0, Sab = 0, Samb = 0;
    for (int n = 0; n < N; ++n) {
        long double a = s.a[n], b = s.b[n], am = s.a[wrap(n - 1, N)];
        Sa += a;
        Sb += b;
        Saa += a * a;
        Saaa += a * a * a;
        Sab += a * b;
        Samb += am * b;
    }
    using diffpoly::Rational;
    symbolic::SumInputs<Q> in;
    in.one = Q{Rational(1), 0};
    in.N = Q{Rational(N), 0};
    in.eps = Q{Rational(1, N), 0};
    in.Sa = Q{Rational(0), Sa};
    in.Sb = Q{Rational(0), Sb};
    in.Saa = Q{Rational(0), Saa};
    in.Saaa = Q{Rational(0), Saaa};
    in.Sab = Q{Rational(0), Sab};
    in.Samb = Q{Rational(0), Samb};
    return in;
}

}  // namespace

long double conserved_d(const LatticeState& s, int i)
{
    return run_recursion(s, i, false);
}

long double conserved_d_aligned(const LatticeState& s, int i)
{
    return run_recursion(s, i, true);
}

ConservedReport conserved_C(const LatticeState& s, double t)
{
    ConservedReport r;
    r.t = t;
    r.d1 = conserved_d(s, 1);
    r.d2 = conserved_d(s, 2);
    r.d3 = conserved_d(s, 3);
    auto in = sums(s);
    auto d = symbolic::d_from_sums(in);
    auto c = symbolic::c_from_d(d, in.one, in.N, in.eps);
    r.C1 = c.C1.value();
    r.C2 = c.C2.value();
    r.C3 = c.C3.value();
    r.dev1 = d.d1.dev;
    r.dev2 = d.d2.dev;
    r.dev3 = d.d3.dev;
    return r;
}

long double conserved_C3_aligned(const LatticeState& s)
{
    auto in = sums(s);
    auto d = symbolic::d_from_sums(in, true);
    return symbolic::c_from_d(d, in.one, in.N, in.eps, true).C3.value();
}

}  // namespace todakdv::lattice
