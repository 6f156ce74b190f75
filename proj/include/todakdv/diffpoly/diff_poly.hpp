#pragma once

#include "todakdv/diffpoly/monomial.hpp"
#include "todakdv/diffpoly/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace todakdv::diffpoly {

// Polynomial in f, f', f'', ... with rational coefficients, kept in canonical form.
class DiffPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    DiffPoly() = default;
    DiffPoly(const Rational& c);
    DiffPoly(long c) : DiffPoly(Rational(c)) {}
    static DiffPoly term(const Monomial& m, const Rational& c = Rational(1));
    // The single factor f^(order).
    static DiffPoly var(int order);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    // Highest derivative order present; -1 for constants and zero.
    int max_order() const;

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const Rational& c);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend bool operator==(const DiffPoly& a, const DiffPoly& b);

    // d/dx with d/dx f^(k) = f^(k+1).
    DiffPoly derive() const;
    // Partial derivative with respect to the symbol f^(order).
    DiffPoly partial(int order) const;

    std::string str() const;

private:
    Terms terms_;
};

// Coefficient rendering used by the canonical text format: "3", "(-1/8)".
std::string coeff_text(const Rational& c);

// Substitutes derivs[k] for f^(k); throws if a needed value is missing.
double evaluate(const DiffPoly& p, std::span<const double> derivs);
long double evaluate(const DiffPoly& p, std::span<const long double> derivs);

// Parses the canonical text form, e.g. "(-1/4) * f(3) + 3 * f * f'".
DiffPoly parse_diffpoly(std::string_view text);

}  // namespace todakdv::diffpoly
