#include "todakdv/diffpoly/eps_series.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace todakdv::diffpoly;

namespace {

DiffPoly f(int k = 0) { return DiffPoly::var(k); }
DiffPoly P(std::string_view s) { return parse_diffpoly(s); }

EpsSeries eps_term(int cap, int power, const DiffPoly& p) { return EpsSeries::monomial(cap, power, p); }

DiffPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> ord(0, 3), ex(0, 2), coef(-5, 5), nterms(1, 4);
    DiffPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(4);
        for (int& v : e)
            v = ex(rng) * (ord(rng) < 2);
        p.add_term(Monomial::from_exponents(e), Rational(coef(rng), 1 + ex(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational lowest terms")
{
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
}

TEST_CASE("monomial rendering and weights")
{
    auto m = Monomial::var(0, 2) * Monomial::var(1) * Monomial::var(3, 2);
    CHECK(m.str() == "f^2 * f' * f(3)^2");
    CHECK(m.degree() == 5);
    CHECK(m.weight() == 7);
    CHECK(Monomial().is_one());
    CHECK(Monomial::var(2).str() == "f''");
}

TEST_CASE("canonical polynomial text")
{
    auto p = Rational(-1, 4) * f(3) + Rational(3) * f() * f(1);
    CHECK(p.str() == "(-1/4) * f(3) + 3 * f * f'");
    CHECK(DiffPoly().str() == "0");
    CHECK(P("(-1/4) * f(3) + 3 * f * f'") == p);
    CHECK(P(p.str()) == p);
    CHECK(P("f' * f") == f() * f(1));
}

TEST_CASE("add")
{
    auto R = parse_series("eps^0 : (-1/4) * f'\neps^1 : (-1/8) * f^2\n", 4);
    CHECK(add(R, EpsSeries(4)) == R);
    CHECK(add(eps_term(4, 2, f()), eps_term(4, 2, f())) == eps_term(4, 2, Rational(2) * f()));
    CHECK(add(R, -R).is_zero());
    CHECK(add(EpsSeries(3), EpsSeries(5)).cap() == 3);
}

TEST_CASE("mul")
{
    CHECK(mul(eps_term(4, 1, f()), eps_term(4, 1, f())) == eps_term(4, 2, f() * f()));
    auto one = eps_term(4, 0, DiffPoly(1));
    auto R = parse_series("eps^0 : f'\neps^3 : f^2 * f''\n", 4);
    CHECK(mul(R, one) == R);
    auto p = add(one, eps_term(2, 1, f()));
    auto q = sub(eps_term(2, 0, DiffPoly(1)), eps_term(2, 1, f()));
    auto expect = sub(eps_term(2, 0, DiffPoly(1)), eps_term(2, 2, f() * f()));
    CHECK(mul(p, q) == expect);
}

TEST_CASE("x_derive")
{
    CHECK((f() * f()).derive() == Rational(2) * f() * f(1));
    CHECK(DiffPoly(Rational(7, 3)).derive().is_zero());
    CHECK((f() * f(1)).derive() == f(1) * f(1) + f() * f(2));
    CHECK_THROWS(x_derive(eps_term(2, 0, f(4))));
}

TEST_CASE("shift")
{
    auto p = eps_term(2, 0, f());
    CHECK(shift(p, 0) == p);
    auto expect = parse_series("eps^0 : f\neps^1 : f'\neps^2 : 1/2 * f''\n", 2);
    CHECK(shift(p, 1) == expect);
    auto q = parse_series("eps^0 : f^2\neps^1 : f * f'\neps^3 : f(3)\n", 5);
    CHECK(shift(shift(q, 1), -1) == q);
    CHECK(shift(shift(q, 2), 1) == shift(q, 3));
}

TEST_CASE("dt_along")
{
    auto h = parse_series("eps^0 : f''\neps^2 : f * f'\n", 4);
    CHECK(dt_along(eps_term(4, 0, f()), h) == h);
    CHECK(dt_along(eps_term(4, 0, f() * f()), h) == mul(eps_term(4, 0, Rational(2) * f()), h));
    auto mf1 = eps_term(3, 0, -f(1));
    CHECK(dt_along(eps_term(3, 0, f(1)), mf1) == eps_term(3, 0, -f(2)));
}

TEST_CASE("evaluate")
{
    std::vector<double> v{3};
    CHECK(evaluate(f() * f(), v) == 9);
    std::vector<double> w{2, 0, 5};
    CHECK(evaluate(f() * f(2), w) == 10);
    std::vector<double> u{0.3, 4};
    CHECK(evaluate(Rational(-1, 4) * f(1), u) == -1);
    CHECK_THROWS(evaluate(f(3), w));
}

TEST_CASE("divide_eps requires vanishing low coefficients")
{
    auto s = eps_term(5, 3, f());
    CHECK(s.divide_eps(3) == eps_term(2, 0, f()));
    CHECK_THROWS(s.divide_eps(4));
}

TEST_CASE("ring and derivation properties on random inputs")
{
    std::mt19937 rng(5);
    std::vector<double> pt{0.7, -1.3, 0.4, 2.1, -0.6, 1.7};
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q).derive() == p.derive() * q + p * q.derive());
        CHECK(evaluate(p * q, pt) == doctest::Approx(evaluate(p, pt) * evaluate(q, pt)).epsilon(1e-12));

        auto P1 = EpsSeries(4, {p, q, r, p, q});
        auto H = EpsSeries(4, {q, r, DiffPoly(), p, DiffPoly()});
        CHECK(dt_along(x_derive(P1), H) == x_derive(dt_along(P1, H)));
        auto Q1 = EpsSeries(4, {r, DiffPoly(), p, DiffPoly(), q});
        CHECK(dt_along(mul(P1, Q1), H) == add(mul(dt_along(P1, H), Q1), mul(P1, dt_along(Q1, H))));
    }
}

TEST_CASE("shift is the truncated exponential of d/dx")
{
    auto p = parse_series("eps^0 : f^2 * f'\neps^2 : f''\n", 5);
    for (int n : {-2, 1, 3}) {
        EpsSeries sum(5), term = p;
        Rational fact(1);
        for (int i = 0; i <= 5; ++i) {
            sum = add(sum, term.times_eps(i) * fact);
            term = x_derive(term);
            fact = fact * Rational(n, i + 1);
        }
        CHECK(shift(p, n) == sum);
    }
}

TEST_CASE("series text round trip")
{
    auto s = parse_series("eps^0 : (-1/4) * f'\neps^1 : 0\neps^2 : 1/192 * f(3)\n", 2);
    CHECK(s.str() == "eps^0 : (-1/4) * f'\neps^1 : 0\neps^2 : 1/192 * f(3)\n");
    CHECK(parse_series(s.str(), 2) == s);
}
