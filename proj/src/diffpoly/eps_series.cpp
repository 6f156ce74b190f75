#include "todakdv/diffpoly/eps_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace todakdv::diffpoly {

namespace {

void check_order(const DiffPoly& p, int cap)
{
    if (p.max_order() > max_derivative_order(cap))
        throw std::domain_error("EpsSeries: derivative order " + std::to_string(p.max_order()) +
                                " exceeds bound " + std::to_string(max_derivative_order(cap)));
}

}  // namespace

EpsSeries::EpsSeries(int cap) : cap_(cap), c_(cap + 1)
{
    if (cap < 0)
        throw std::invalid_argument("EpsSeries: negative cap");
}

EpsSeries::EpsSeries(int cap, std::vector<DiffPoly> coeffs) : EpsSeries(cap)
{
    for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= cap; ++k)
        c_[k] = std::move(coeffs[k]);
}

EpsSeries EpsSeries::monomial(int cap, int power, const DiffPoly& p)
{
    EpsSeries s(cap);
    if (power >= 0 && power <= cap)
        s.c_[power] = p;
    return s;
}

const DiffPoly& EpsSeries::coeff(int k) const
{
    static const DiffPoly zero;
    if (k < 0 || k > cap_)
        return zero;
    return c_[k];
}

void EpsSeries::set_coeff(int k, DiffPoly p)
{
    if (k < 0 || k > cap_)
        throw std::out_of_range("EpsSeries::set_coeff: power outside cap");
    c_[k] = std::move(p);
}

bool EpsSeries::is_zero() const
{
    return valuation() < 0;
}

int EpsSeries::valuation() const
{
    for (int k = 0; k <= cap_; ++k)
        if (!c_[k].is_zero())
            return k;
    return -1;
}

int EpsSeries::max_order() const
{
    int m = -1;
    for (const auto& p : c_)
        m = std::max(m, p.max_order());
    return m;
}

EpsSeries EpsSeries::with_cap(int cap) const
{
    EpsSeries r(cap);
    for (int k = 0; k <= std::min(cap, cap_); ++k)
        r.c_[k] = c_[k];
    return r;
}

EpsSeries EpsSeries::times_eps(int k) const
{
    if (k < 0)
        throw std::invalid_argument("times_eps: negative power");
    EpsSeries r(cap_);
    for (int j = 0; j + k <= cap_; ++j)
        r.c_[j + k] = c_[j];
    return r;
}

EpsSeries EpsSeries::divide_eps(int k) const
{
    if (k < 0 || k > cap_)
        throw std::invalid_argument("divide_eps: bad power");
    for (int j = 0; j < k; ++j)
        if (!c_[j].is_zero())
            throw std::domain_error("divide_eps: eps^" + std::to_string(j) + " coefficient is nonzero");
    EpsSeries r(cap_ - k);
    for (int j = k; j <= cap_; ++j)
        r.c_[j - k] = c_[j];
    return r;
}

EpsSeries EpsSeries::operator-() const
{
    EpsSeries r(cap_);
    for (int k = 0; k <= cap_; ++k)
        r.c_[k] = -c_[k];
    return r;
}

EpsSeries& EpsSeries::operator*=(const Rational& c)
{
    for (auto& p : c_)
        p *= c;
    return *this;
}

bool operator==(const EpsSeries& a, const EpsSeries& b)
{
    return a.cap_ == b.cap_ && a.c_ == b.c_;
}

std::string EpsSeries::str() const
{
    std::string s;
    for (int k = 0; k <= cap_; ++k)
        s += "eps^" + std::to_string(k) + " : " + c_[k].str() + "\n";
    return s;
}

EpsSeries add(const EpsSeries& p, const EpsSeries& q)
{
    int cap = std::min(p.cap(), q.cap());
    EpsSeries r(cap);
    for (int k = 0; k <= cap; ++k)
        r.set_coeff(k, p.coeff(k) + q.coeff(k));
    return r;
}

EpsSeries sub(const EpsSeries& p, const EpsSeries& q)
{
    int cap = std::min(p.cap(), q.cap());
    EpsSeries r(cap);
    for (int k = 0; k <= cap; ++k)
        r.set_coeff(k, p.coeff(k) - q.coeff(k));
    return r;
}

EpsSeries mul(const EpsSeries& p, const EpsSeries& q)
{
    int cap = std::min(p.cap(), q.cap());
    std::vector<DiffPoly> out(cap + 1);
    for (int i = 0; i <= cap; ++i) {
        if (p.coeff(i).is_zero())
            continue;
        for (int j = 0; i + j <= cap; ++j) {
            if (q.coeff(j).is_zero())
                continue;
            out[i + j] += p.coeff(i) * q.coeff(j);
        }
    }
    return EpsSeries(cap, std::move(out));
}

EpsSeries x_derive(const EpsSeries& p)
{
    EpsSeries r(p.cap());
    for (int k = 0; k <= p.cap(); ++k) {
        DiffPoly d = p.coeff(k).derive();
        check_order(d, p.cap());
        r.set_coeff(k, std::move(d));
    }
    return r;
}

EpsSeries shift(const EpsSeries& p, int n)
{
    if (n == 0)
        return p;
    EpsSeries sum = p;
    EpsSeries term = p;
    for (int i = 1; i <= p.cap(); ++i) {
        term = x_derive(term).times_eps(1) * Rational(n, i);
        if (term.is_zero())
            break;
        sum = add(sum, term);
    }
    return sum;
}

EpsSeries dt_along(const EpsSeries& p, const EpsSeries& h)
{
    int cap = std::min(p.cap(), h.cap());
    int top = p.max_order();
    // hs[k] = (d/dx)^k h
    std::vector<EpsSeries> hs;
    if (top >= 0) {
        hs.push_back(h.with_cap(cap));
        for (int k = 1; k <= top; ++k)
            hs.push_back(x_derive(hs.back()));
    }
    std::vector<DiffPoly> out(cap + 1);
    for (int i = 0; i <= cap; ++i) {
        const DiffPoly& pi = p.coeff(i);
        if (pi.is_zero())
            continue;
        for (int k = 0; k <= pi.max_order(); ++k) {
            DiffPoly dp = pi.partial(k);
            if (dp.is_zero())
                continue;
            for (int j = 0; i + j <= cap; ++j)
                if (!hs[k].coeff(j).is_zero())
                    out[i + j] += dp * hs[k].coeff(j);
        }
    }
    return EpsSeries(cap, std::move(out));
}

}  // namespace todakdv::diffpoly
