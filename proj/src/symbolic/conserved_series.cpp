#include "todakdv/symbolic/conserved_series.hpp"

#include "todakdv/symbolic/ansatz.hpp"

namespace todakdv::symbolic {

ConservedSeries conserved_series(bool aligned)
{
    return conserved_series(standard_R(), aligned);
}

ConservedSeries conserved_series(const EpsSeries& R, bool aligned)
{
    // a = f - eps R and b = f + eps R are exact through one power above the last term of R.
    int top = R.valuation() < 0 ? 0 : R.cap();
    while (top > 0 && R.coeff(top).is_zero())
        --top;
    int cap = top + 1;
    EpsSeries f = EpsSeries::monomial(cap, 0, DiffPoly::var(0));
    EpsSeries eR = R.with_cap(cap).times_eps(1);
    EpsSeries a = f - eR;
    EpsSeries b = f + eR;

    FSeries N = FSeries::eps_power(-1);
    auto sum = [&](const EpsSeries& s) { return N * FSeries::integral_of(s); };
    SumInputs<FSeries> in;
    in.one = FSeries::constant(Rational(1));
    in.N = N;
    in.eps = FSeries::eps_power(1);
    in.Sa = sum(a);
    in.Sb = sum(b);
    in.Saa = sum(a * a);
    in.Saaa = sum(a * a * a);
    in.Sab = sum(a * b);
    in.Samb = sum(diffpoly::shift(a, -1) * b);

    DValues<FSeries> d = d_from_sums(in, aligned);
    CValues<FSeries> c = c_from_d(d, in.one, in.N, in.eps, aligned);
    return {d.d1, d.d2, d.d3, c.C1, c.C2, c.C3};
}

}  // namespace todakdv::symbolic
