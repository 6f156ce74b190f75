#pragma once

#include <string>
#include <utility>
#include <vector>

namespace todakdv::diffpoly {

// Product of powers of f, f', f'', ... stored densely by derivative order.
class Monomial {
public:
    Monomial() = default;
    // f^(order) raised to exp.
    static Monomial var(int order, int exp = 1);
    static Monomial from_exponents(std::vector<int> exps);

    bool is_one() const { return e_.empty(); }
    int exponent(int order) const;
    int max_order() const { return static_cast<int>(e_.size()) - 1; }
    int degree() const;
    // Sum of order * exponent.
    int weight() const;
    // Sum of (order + 2) * exponent; the grading under which eps-coefficients are homogeneous.
    int grade() const;
    const std::vector<int>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    // m with one factor f^(order) removed; requires exponent(order) > 0.
    Monomial drop(int order) const;

    // d/dx as a list of (monomial, integer coefficient).
    std::vector<std::pair<Monomial, long>> derive() const;

    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    void trim();
    std::vector<int> e_;
};

// Canonical order: compare from the highest derivative order down, larger exponent first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Renders f^(k): f, f', f'', f(3), ...
std::string factor_name(int order);

}  // namespace todakdv::diffpoly
