#include "todakdv/diffpoly/diff_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace todakdv::diffpoly {

DiffPoly::DiffPoly(const Rational& c)
{
    if (!c.is_zero())
        terms_.emplace(Monomial(), c);
}

DiffPoly DiffPoly::term(const Monomial& m, const Rational& c)
{
    DiffPoly p;
    p.add_term(m, c);
    return p;
}

DiffPoly DiffPoly::var(int order)
{
    return term(Monomial::var(order));
}

Rational DiffPoly::coeff(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int DiffPoly::max_order() const
{
    int k = -1;
    for (const auto& [m, c] : terms_)
        k = std::max(k, m.max_order());
    return k;
}

DiffPoly DiffPoly::operator-() const
{
    DiffPoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b)
{
    DiffPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

bool operator==(const DiffPoly& a, const DiffPoly& b)
{
    return a.terms_ == b.terms_;
}

DiffPoly DiffPoly::derive() const
{
    DiffPoly r;
    for (const auto& [m, c] : terms_)
        for (const auto& [dm, k] : m.derive())
            r.add_term(dm, c * Rational(k));
    return r;
}

DiffPoly DiffPoly::partial(int order) const
{
    DiffPoly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(order);
        if (e > 0)
            r.add_term(m.drop(order), c * Rational(e));
    }
    return r;
}

std::string coeff_text(const Rational& c)
{
    return c.sign() < 0 ? "(" + c.str() + ")" : c.str();
}

std::string DiffPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty())
            s += " + ";
        if (m.is_one())
            s += coeff_text(c);
        else if (c == Rational(1))
            s += m.str();
        else
            s += coeff_text(c) + " * " + m.str();
    }
    return s;
}

namespace {

template <typename Real>
Real evaluate_impl(const DiffPoly& p, std::span<const Real> derivs)
{
    int need = p.max_order();
    if (need >= static_cast<int>(derivs.size()))
        throw std::invalid_argument("evaluate: missing value for " + factor_name(need));
    Real sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Real v = 1;
        const auto& e = m.exponents();
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int i = 0; i < e[k]; ++i)
                v *= derivs[k];
        Real cv;
        if constexpr (std::is_same_v<Real, long double>)
            cv = c.to_long_double();
        else
            cv = c.to_double();
        sum += cv * v;
    }
    return sum;
}

}  // namespace

double evaluate(const DiffPoly& p, std::span<const double> derivs)
{
    return evaluate_impl<double>(p, derivs);
}

long double evaluate(const DiffPoly& p, std::span<const long double> derivs)
{
    return evaluate_impl<long double>(p, derivs);
}

}  // namespace todakdv::diffpoly
