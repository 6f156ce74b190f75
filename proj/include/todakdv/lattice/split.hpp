#pragma once

#include "todakdv/diffpoly/rational.hpp"

namespace todakdv::lattice {

// base + dev, where base carries the exact background (A = 2, B = -1) and dev the small
// deviation; products never mix the two scales in one rounding step.
template <class Base>
struct Split {
    Base base{};
    long double dev = 0;

    static long double to_ld(const Base& b)
    {
        if constexpr (std::is_same_v<Base, diffpoly::Rational>)
            return b.to_long_double();
        else
            return static_cast<long double>(b);
    }
    static Base from_rational(const diffpoly::Rational& r)
    {
        if constexpr (std::is_same_v<Base, diffpoly::Rational>)
            return r;
        else
            return static_cast<Base>(r.to_long_double());
    }

    long double value() const { return to_ld(base) + dev; }

    friend Split operator+(const Split& x, const Split& y) { return {x.base + y.base, x.dev + y.dev}; }
    friend Split operator-(const Split& x, const Split& y) { return {x.base - y.base, x.dev - y.dev}; }
    friend Split operator-(const Split& x) { return {Base{} - x.base, -x.dev}; }
    friend Split operator*(const Split& x, const Split& y)
    {
        return {x.base * y.base, to_ld(x.base) * y.dev + x.dev * to_ld(y.base) + x.dev * y.dev};
    }
    friend Split operator*(const Split& x, const diffpoly::Rational& c)
    {
        return {x.base * from_rational(c), x.dev * c.to_long_double()};
    }
};

}  // namespace todakdv::lattice
