#pragma once

#include "todakdv/diffpoly/eps_series.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace todakdv::symbolic {

using diffpoly::DiffPoly;
using diffpoly::EpsSeries;
using diffpoly::Monomial;
using diffpoly::Rational;

// Representative of p modulo total x-derivatives: every monomial is either a power of f or has
// its highest derivative raised to a power >= 2.
DiffPoly integral_normal_form(const DiffPoly& p);

// Polynomial in the period integrals int(m), m canonical; the empty product is the constant 1.
class Functional {
public:
    using Atoms = std::vector<Monomial>;  // sorted by MonomialOrder
    struct AtomsOrder {
        bool operator()(const Atoms& a, const Atoms& b) const;
    };
    using Terms = std::map<Atoms, Rational, AtomsOrder>;

    Functional() = default;
    Functional(const Rational& c);
    // int_0^1 p dx, reduced to normal form.
    static Functional integral(const DiffPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const Atoms& atoms, const Rational& c);

    Functional operator-() const;
    Functional& operator+=(const Functional& o);
    Functional& operator-=(const Functional& o);
    Functional& operator*=(const Rational& c);
    friend Functional operator+(Functional a, const Functional& b) { return a += b; }
    friend Functional operator-(Functional a, const Functional& b) { return a -= b; }
    friend Functional operator*(Functional a, const Rational& c) { return a *= c; }
    friend Functional operator*(const Functional& a, const Functional& b);
    friend bool operator==(const Functional& a, const Functional& b) { return a.terms_ == b.terms_; }

    // Quadratic atoms int(f^(m)^2) print as (-1)^m int(f * f^(2m)).
    std::string str() const;
    double evaluate(const std::function<double(const Monomial&)>& atom_value) const;

private:
    Terms terms_;
};

// Laurent series in eps with Functional coefficients, known exactly for powers <= cap.
class FSeries {
public:
    static constexpr int kExact = 1 << 20;

    FSeries() = default;
    static FSeries constant(const Rational& c);
    // eps^power, exact
    static FSeries eps_power(int power);
    // sum_k eps^k int(s_k), known through s.cap()
    static FSeries integral_of(const EpsSeries& s);

    int low() const { return low_; }
    int cap() const { return cap_; }
    Functional coeff(int k) const;
    // Smallest power with a nonzero coefficient, or cap + 1.
    int valuation() const;

    FSeries operator-() const;
    FSeries& operator*=(const Rational& c);
    friend FSeries operator*(FSeries a, const Rational& c) { return a *= c; }
    friend FSeries operator+(const FSeries& a, const FSeries& b);
    friend FSeries operator-(const FSeries& a, const FSeries& b);
    friend FSeries operator*(const FSeries& a, const FSeries& b);

    // Lines "eps^k : ..." from `from` through cap.
    std::string str(int from) const;

private:
    void set(int k, Functional v);

    int low_ = 0;
    int cap_ = kExact;
    std::map<int, Functional> c_;
};

// Parses "1/4 * int(f^3) + (-1/24) * int(f * f'')".
Functional parse_functional(std::string_view text);
// Parses "eps^k : <functional>" lines into power -> coefficient.
std::map<int, Functional> parse_functional_series(std::string_view text);

}  // namespace todakdv::symbolic
