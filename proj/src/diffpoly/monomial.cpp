#include "todakdv/diffpoly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace todakdv::diffpoly {

Monomial Monomial::var(int order, int exp)
{
    if (order < 0 || exp < 0)
        throw std::invalid_argument("Monomial::var: negative order or exponent");
    Monomial m;
    if (exp == 0)
        return m;
    m.e_.assign(order + 1, 0);
    m.e_[order] = exp;
    return m;
}

Monomial Monomial::from_exponents(std::vector<int> exps)
{
    for (int e : exps)
        if (e < 0)
            throw std::invalid_argument("Monomial: negative exponent");
    Monomial m;
    m.e_ = std::move(exps);
    m.trim();
    return m;
}

void Monomial::trim()
{
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

int Monomial::exponent(int order) const
{
    if (order < 0 || order >= static_cast<int>(e_.size()))
        return 0;
    return e_[order];
}

int Monomial::degree() const
{
    int d = 0;
    for (int e : e_)
        d += e;
    return d;
}

int Monomial::weight() const
{
    int w = 0;
    for (std::size_t k = 0; k < e_.size(); ++k)
        w += static_cast<int>(k) * e_[k];
    return w;
}

int Monomial::grade() const
{
    return weight() + 2 * degree();
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.e_.assign(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] += e_[k];
    for (std::size_t k = 0; k < o.e_.size(); ++k)
        r.e_[k] += o.e_[k];
    return r;
}

Monomial Monomial::drop(int order) const
{
    if (exponent(order) <= 0)
        throw std::logic_error("Monomial::drop: factor not present");
    Monomial r = *this;
    --r.e_[order];
    r.trim();
    return r;
}

std::vector<std::pair<Monomial, long>> Monomial::derive() const
{
    std::vector<std::pair<Monomial, long>> out;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] == 0)
            continue;
        Monomial t = *this;
        --t.e_[k];
        if (t.e_.size() < k + 2)
            t.e_.resize(k + 2, 0);
        ++t.e_[k + 1];
        t.trim();
        out.emplace_back(std::move(t), e_[k]);
    }
    return out;
}

std::string factor_name(int order)
{
    switch (order) {
    case 0: return "f";
    case 1: return "f'";
    case 2: return "f''";
    default: return "f(" + std::to_string(order) + ")";
    }
}

std::string Monomial::str() const
{
    if (e_.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] == 0)
            continue;
        if (!s.empty())
            s += " * ";
        s += factor_name(static_cast<int>(k));
        if (e_[k] > 1)
            s += "^" + std::to_string(e_[k]);
    }
    return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    if (x.size() != y.size())
        return x.size() > y.size();
    for (std::size_t i = x.size(); i-- > 0;)
        if (x[i] != y[i])
            return x[i] > y[i];
    return false;
}

}  // namespace todakdv::diffpoly
