#include "todakdv/symbolic/ansatz.hpp"

#include <stdexcept>

namespace todakdv::symbolic {

namespace {

DiffPoly mono(long p, long q, std::vector<int> exps)
{
    return DiffPoly::term(diffpoly::Monomial::from_exponents(std::move(exps)), Rational(p, q));
}

// All shifts share the Taylor terms eps^i D^i p / i!; shift(p, n) = sum n^i T_i.
std::vector<EpsSeries> shifted_family(const EpsSeries& p, int reach)
{
    std::vector<EpsSeries> taylor{p};
    EpsSeries term = p;
    for (int i = 1; i <= p.cap(); ++i) {
        term = diffpoly::x_derive(term).times_eps(1) * Rational(1, i);
        if (term.is_zero())
            break;
        taylor.push_back(term);
    }
    std::vector<EpsSeries> out;
    for (int n = -reach; n <= reach; ++n) {
        EpsSeries s = p;
        Rational pw(1);
        for (std::size_t i = 1; i < taylor.size(); ++i) {
            pw *= Rational(n);
            if (pw.is_zero())
                break;
            s = s + taylor[i] * pw;
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

EpsSeries standard_R(int cap)
{
    EpsSeries R(cap);
    R.set_coeff(0, mono(-1, 4, {0, 1}));
    R.set_coeff(1, mono(-1, 8, {2}));
    if (cap >= 2)
        R.set_coeff(2, mono(1, 192, {0, 0, 0, 1}));
    if (cap >= 3)
        R.set_coeff(3, mono(1, 64, {1, 0, 1}) + mono(1, 64, {0, 2}) + mono(-1, 32, {3}));
    if (cap >= 4)
        R.set_coeff(4, mono(-1, 7680, {0, 0, 0, 0, 0, 1}) + mono(1, 64, {2, 1}));
    if (cap >= 5)
        R.set_coeff(5, mono(3, 256, {1, 2}) + mono(3, 512, {2, 0, 1}) + mono(-5, 512, {4}) +
                           mono(-1, 1536, {1, 0, 0, 0, 1}) + mono(-3, 2048, {0, 0, 2}) +
                           mono(-1, 384, {0, 1, 0, 1}));
    return R;
}

AnsatzPair::AnsatzPair(const EpsSeries& R, int cap, int reach) : R_(R), cap_(cap), reach_(reach)
{
    if (reach < 0)
        throw std::invalid_argument("AnsatzPair: negative reach");
    EpsSeries f_part = EpsSeries::monomial(cap, 2, DiffPoly::var(0));
    EpsSeries r3 = R.with_cap(cap).times_eps(3);
    EpsSeries A = EpsSeries::monomial(cap, 0, DiffPoly(2)) + f_part - r3;
    EpsSeries B = EpsSeries::monomial(cap, 0, DiffPoly(-1)) + f_part + r3;
    A_ = shifted_family(A, reach);
    B_ = shifted_family(B, reach);
}

const EpsSeries& AnsatzPair::A_of(int n) const
{
    if (n < -reach_ || n > reach_)
        throw std::out_of_range("AnsatzPair::A_of: shift outside precomputed reach");
    return A_[n + reach_];
}

const EpsSeries& AnsatzPair::B_of(int n) const
{
    if (n < -reach_ || n > reach_)
        throw std::out_of_range("AnsatzPair::B_of: shift outside precomputed reach");
    return B_[n + reach_];
}

AnsatzPair build_ansatz(const EpsSeries& R, int cap)
{
    return AnsatzPair(R, cap);
}

}  // namespace todakdv::symbolic
