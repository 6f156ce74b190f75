#include "todakdv/symbolic/functional.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace todakdv::symbolic {

using diffpoly::MonomialOrder;

namespace {

// Integration by parts on one monomial whose top factor has exponent 1:
// s * (f^(K-1))^e * f^(K) = D[(f^(K-1))^(e+1)] s / (e+1)  ~  -s' (f^(K-1))^(e+1) / (e+1).
void reduce_into(const Monomial& m, const Rational& c, DiffPoly& out)
{
    int K = m.max_order();
    if (K <= 0 || m.exponent(K) >= 2) {
        out.add_term(m, c);
        return;
    }
    int e = m.exponent(K - 1);
    std::vector<int> sexp = m.exponents();
    sexp[K] = 0;
    sexp[K - 1] = 0;
    DiffPoly s = DiffPoly::term(Monomial::from_exponents(sexp));
    DiffPoly ds = s.derive();
    if (ds.is_zero())
        return;
    DiffPoly moved = ds * DiffPoly::term(Monomial::var(K - 1, e + 1));
    for (const auto& [mm, cc] : moved.terms())
        reduce_into(mm, -c * cc / Rational(e + 1), out);
}

}  // namespace

DiffPoly integral_normal_form(const DiffPoly& p)
{
    DiffPoly out;
    for (const auto& [m, c] : p.terms())
        reduce_into(m, c, out);
    return out;
}

bool Functional::AtomsOrder::operator()(const Atoms& a, const Atoms& b) const
{
    if (a.size() != b.size())
        return a.size() < b.size();
    MonomialOrder lt;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (lt(a[i], b[i]))
            return true;
        if (lt(b[i], a[i]))
            return false;
    }
    return false;
}

Functional::Functional(const Rational& c)
{
    add_term({}, c);
}

Functional Functional::integral(const DiffPoly& p)
{
    Functional r;
    DiffPoly nf = integral_normal_form(p);
    for (const auto& [m, c] : nf.terms()) {
        if (m.is_one())
            r.add_term({}, c);
        else
            r.add_term({m}, c);
    }
    return r;
}

void Functional::add_term(const Atoms& atoms, const Rational& c)
{
    if (c.is_zero())
        return;
    Atoms key = atoms;
    std::sort(key.begin(), key.end(), MonomialOrder());
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Functional Functional::operator-() const
{
    Functional r = *this;
    for (auto& [a, c] : r.terms_)
        c = -c;
    return r;
}

Functional& Functional::operator+=(const Functional& o)
{
    for (const auto& [a, c] : o.terms_)
        add_term(a, c);
    return *this;
}

Functional& Functional::operator-=(const Functional& o)
{
    for (const auto& [a, c] : o.terms_)
        add_term(a, -c);
    return *this;
}

Functional& Functional::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_)
        v *= c;
    return *this;
}

Functional operator*(const Functional& a, const Functional& b)
{
    Functional r;
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_) {
            Functional::Atoms z = x;
            z.insert(z.end(), y.begin(), y.end());
            r.add_term(z, cx * cy);
        }
    return r;
}

std::string Functional::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [atoms, c0] : terms_) {
        Rational c = c0;
        std::vector<std::string> parts;
        for (std::size_t i = 0; i < atoms.size();) {
            std::size_t j = i;
            while (j < atoms.size() && atoms[j] == atoms[i])
                ++j;
            const Monomial& m = atoms[i];
            Monomial shown = m;
            int K = m.max_order();
            if (K >= 1 && m.degree() == 2 && m.exponent(K) == 2) {
                shown = Monomial::var(0) * Monomial::var(2 * K);
                if (K % 2 == 1 && (j - i) % 2 == 1)
                    c = -c;
            }
            std::string atom = "int(" + shown.str() + ")";
            if (j - i > 1)
                atom += "^" + std::to_string(j - i);
            parts.push_back(atom);
            i = j;
        }
        if (!s.empty())
            s += " + ";
        if (parts.empty()) {
            s += diffpoly::coeff_text(c);
            continue;
        }
        if (!(c == Rational(1)))
            s += diffpoly::coeff_text(c) + " * ";
        for (std::size_t i = 0; i < parts.size(); ++i)
            s += (i ? " * " : "") + parts[i];
    }
    return s;
}

double Functional::evaluate(const std::function<double(const Monomial&)>& atom_value) const
{
    double sum = 0;
    for (const auto& [atoms, c] : terms_) {
        double v = c.to_double();
        for (const auto& m : atoms)
            v *= atom_value(m);
        sum += v;
    }
    return sum;
}

FSeries FSeries::constant(const Rational& c)
{
    FSeries s;
    s.set(0, Functional(c));
    return s;
}

FSeries FSeries::eps_power(int power)
{
    FSeries s;
    s.low_ = power;
    s.set(power, Functional(Rational(1)));
    return s;
}

FSeries FSeries::integral_of(const EpsSeries& e)
{
    FSeries s;
    s.low_ = 0;
    s.cap_ = e.cap();
    for (int k = 0; k <= e.cap(); ++k)
        s.set(k, Functional::integral(e.coeff(k)));
    return s;
}

void FSeries::set(int k, Functional v)
{
    if (k > cap_ || v.is_zero()) {
        c_.erase(k);
        return;
    }
    c_[k] = std::move(v);
    low_ = std::min(low_, k);
}

Functional FSeries::coeff(int k) const
{
    auto it = c_.find(k);
    return it == c_.end() ? Functional() : it->second;
}

int FSeries::valuation() const
{
    return c_.empty() ? cap_ + 1 : c_.begin()->first;
}

FSeries FSeries::operator-() const
{
    FSeries r = *this;
    for (auto& [k, v] : r.c_)
        v = -v;
    return r;
}

FSeries& FSeries::operator*=(const Rational& c)
{
    for (auto it = c_.begin(); it != c_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? c_.erase(it) : std::next(it);
    }
    return *this;
}

FSeries operator+(const FSeries& a, const FSeries& b)
{
    FSeries r;
    r.cap_ = std::min(a.cap_, b.cap_);
    r.low_ = std::min(a.low_, b.low_);
    for (const auto& [k, v] : a.c_)
        if (k <= r.cap_)
            r.set(k, r.coeff(k) + v);
    for (const auto& [k, v] : b.c_)
        if (k <= r.cap_)
            r.set(k, r.coeff(k) + v);
    return r;
}

FSeries operator-(const FSeries& a, const FSeries& b)
{
    return a + (-b);
}

FSeries operator*(const FSeries& a, const FSeries& b)
{
    int va = a.valuation(), vb = b.valuation();
    FSeries r;
    long ca = static_cast<long>(a.cap_) + vb, cb = static_cast<long>(b.cap_) + va;
    r.cap_ = static_cast<int>(std::min<long>({ca, cb, FSeries::kExact}));
    r.low_ = std::min(va + vb, r.cap_ + 1);
    for (const auto& [i, x] : a.c_)
        for (const auto& [j, y] : b.c_)
            if (i + j <= r.cap_)
                r.set(i + j, r.coeff(i + j) + x * y);
    return r;
}

std::string FSeries::str(int from) const
{
    std::string s;
    for (int k = from; k <= cap_; ++k)
        s += "eps^" + std::to_string(k) + " : " + coeff(k).str() + "\n";
    return s;
}

namespace {

std::string trim(std::string_view v)
{
    auto b = v.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = v.find_last_not_of(" \t\r\n");
    return std::string(v.substr(b, e - b + 1));
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(std::string_view s, std::string_view sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (depth == 0 && s.substr(i, sep.size()) == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + sep.size();
            i = start - 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

}  // namespace

Functional parse_functional(std::string_view text)
{
    Functional r;
    std::string t = trim(text);
    if (t.empty())
        throw std::invalid_argument("parse_functional: empty input");
    if (t == "0")
        return r;
    for (const auto& term : split_top(t, " + ")) {
        Functional prod(Rational(1));
        for (const auto& factor : split_top(term, "*")) {
            if (factor.rfind("int(", 0) == 0) {
                auto close = factor.rfind(')');
                if (close == std::string::npos)
                    throw std::invalid_argument("parse_functional: unbalanced '" + factor + "'");
                Functional atom = Functional::integral(diffpoly::parse_diffpoly(factor.substr(4, close - 4)));
                int power = 1;
                std::string rest = trim(std::string_view(factor).substr(close + 1));
                if (!rest.empty()) {
                    if (rest[0] != '^')
                        throw std::invalid_argument("parse_functional: bad factor '" + factor + "'");
                    power = std::stoi(rest.substr(1));
                }
                for (int i = 0; i < power; ++i)
                    prod = prod * atom;
            } else {
                std::string c = factor;
                if (!c.empty() && c.front() == '(' && c.back() == ')')
                    c = c.substr(1, c.size() - 2);
                prod *= Rational::parse(trim(c));
            }
        }
        r += prod;
    }
    return r;
}

std::map<int, Functional> parse_functional_series(std::string_view text)
{
    std::map<int, Functional> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        auto colon = line.find(':');
        auto caret = line.find('^');
        if (colon == std::string::npos || caret == std::string::npos || caret > colon)
            throw std::invalid_argument("parse_functional_series: bad line '" + line + "'");
        int k = std::stoi(line.substr(caret + 1, colon - caret - 1));
        out[k] += parse_functional(line.substr(colon + 1));
    }
    return out;
}

}  // namespace todakdv::symbolic
