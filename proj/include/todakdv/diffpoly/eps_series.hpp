#pragma once

#include "todakdv/diffpoly/diff_poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace todakdv::diffpoly {

inline constexpr int kDefaultCap = 11;

// sum_{k=0}^{cap} c_k eps^k with DiffPoly coefficients; everything beyond cap is dropped.
class EpsSeries {
public:
    explicit EpsSeries(int cap = kDefaultCap);
    EpsSeries(int cap, std::vector<DiffPoly> coeffs);
    // p * eps^power
    static EpsSeries monomial(int cap, int power, const DiffPoly& p);

    int cap() const { return cap_; }
    const DiffPoly& coeff(int k) const;
    const std::vector<DiffPoly>& coeffs() const { return c_; }
    void set_coeff(int k, DiffPoly p);
    bool is_zero() const;
    // Smallest k with a nonzero coefficient, or -1.
    int valuation() const;
    int max_order() const;

    EpsSeries with_cap(int cap) const;
    // Multiplies by eps^k (k >= 0), keeping the cap.
    EpsSeries times_eps(int k) const;
    // Divides by eps^k; coefficients below k must vanish. Cap drops by k.
    EpsSeries divide_eps(int k) const;

    EpsSeries operator-() const;
    EpsSeries& operator*=(const Rational& c);
    friend EpsSeries operator*(EpsSeries a, const Rational& c) { return a *= c; }
    friend EpsSeries operator*(const Rational& c, EpsSeries a) { return a *= c; }
    friend bool operator==(const EpsSeries& a, const EpsSeries& b);

    std::string str() const;

private:
    int cap_;
    std::vector<DiffPoly> c_;
};

EpsSeries add(const EpsSeries& p, const EpsSeries& q);
EpsSeries sub(const EpsSeries& p, const EpsSeries& q);
EpsSeries mul(const EpsSeries& p, const EpsSeries& q);
EpsSeries x_derive(const EpsSeries& p);
// Taylor model of evaluation at x + n*eps.
EpsSeries shift(const EpsSeries& p, int n);
// Time derivative given df/dt = h, with d/dt commuting with d/dx.
EpsSeries dt_along(const EpsSeries& p, const EpsSeries& h);

inline EpsSeries operator+(const EpsSeries& p, const EpsSeries& q) { return add(p, q); }
inline EpsSeries operator-(const EpsSeries& p, const EpsSeries& q) { return sub(p, q); }
inline EpsSeries operator*(const EpsSeries& p, const EpsSeries& q) { return mul(p, q); }

// Derivative-order bound for a given cap; exceeding it throws std::domain_error.
inline int max_derivative_order(int cap) { return 2 * cap; }

// Parses lines "eps^k : <diffpoly>"; unlisted powers are zero.
EpsSeries parse_series(std::string_view text, int cap);

}  // namespace todakdv::diffpoly
