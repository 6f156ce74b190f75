#include "todakdv/bloch/discriminant.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace todakdv;
using namespace todakdv::bloch;

namespace {

const lattice::FourierProfile kZero = lattice::builtin_profile("zero");

}  // namespace

TEST_CASE("discrete monodromy of the free lattice")
{
    for (int N : {1, 2, 5, 16}) {
        auto M = monodromy_discrete(std::vector<double>(N, 2.0), std::vector<double>(N, -1.0), 0.0);
        CHECK(M.m11 == doctest::Approx(N + 1));
        CHECK(M.m12 == doctest::Approx(-N));
        CHECK(M.m21 == doctest::Approx(N));
        CHECK(M.m22 == doctest::Approx(1 - N));
    }
    auto c16 = discrete_from_potential(kZero, 16);
    CHECK(c16.A == std::vector<double>(16, 2.0));
    CHECK(c16.B == std::vector<double>(16, -1.0));
    // N = 1: trace is A - lambda
    auto M1 = monodromy_discrete({2.5}, {-1.0}, 0.75);
    CHECK(M1.trace() == doctest::Approx(2.5 - 0.75));

    // band edges of the free lattice
    const int N = 12;
    auto c = discrete_from_potential(kZero, N);
    for (int m = 0; m < N / 2; ++m) {
        double even = 2.0 * N * N * (1 - std::cos(2 * M_PI * m / N));
        double odd = 2.0 * N * N * (1 - std::cos(M_PI * (2 * m + 1) / N));
        CHECK(monodromy_discrete(c.A, c.B, even).trace() == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(monodromy_discrete(c.A, c.B, odd).trace() == doctest::Approx(-2.0).epsilon(1e-9));
    }
}

TEST_CASE("discrete determinant is the product of -B")
{
    std::vector<double> A{2.1, 1.9, 2.0, 2.3}, B{-1.1, -0.9, -1.0, -1.2};
    double prod = 1;
    for (double b : B)
        prod *= -b;
    for (double lam : {0.0, 3.0, -7.5})
        CHECK(monodromy_discrete(A, B, lam).det() == doctest::Approx(prod).epsilon(1e-12));
    CHECK_THROWS(monodromy_discrete({1.0}, {1.0, 2.0}, 0.0));
}

TEST_CASE("continuous monodromy")
{
    auto M0 = monodromy_continuous(kZero, 0.0);
    CHECK(M0.m11 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(M0.m12 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(M0.m21) < 1e-10);
    CHECK(M0.m22 == doctest::Approx(1.0).epsilon(1e-10));

    CHECK(monodromy_continuous(kZero, M_PI * M_PI).trace() == doctest::Approx(-2.0).epsilon(1e-9));
    for (double lam : {-20.0, 5.0, 60.0})
        CHECK(monodromy_continuous(kZero, lam).trace() ==
              doctest::Approx(lam >= 0 ? 2 * std::cos(std::sqrt(lam)) : 2 * std::cosh(std::sqrt(-lam))).epsilon(1e-9));

    auto g = lattice::builtin_profile("cos2");
    for (double lam : {-3.0, 10.0, 80.0})
        CHECK(monodromy_continuous(g, lam).det() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("discrete trace converges at second order")
{
    const double lam = 10.0;
    auto err = [&](int N) {
        auto c = discrete_from_potential(kZero, N);
        return std::abs(monodromy_discrete(c.A, c.B, lam).trace() - 2 * std::cos(std::sqrt(lam)));
    };
    CHECK(err(32) / err(64) == doctest::Approx(4.0).epsilon(0.1));
    CHECK(err(64) / err(128) == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("scan and csv")
{
    CHECK(discriminant_scan(kZero, 16, {}).empty());
    auto grid = lambda_grid(10.0, 5);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == -10.0);
    CHECK(grid[2] == doctest::Approx(0.0));
    CHECK(grid.back() == 10.0);
    auto samples = discriminant_scan(kZero, 16, grid);
    REQUIRE(samples.size() == 5);
    CHECK(samples[2].trace_discrete == doctest::Approx(2.0));
    CHECK(samples[2].trace_continuous == doctest::Approx(2.0));
    std::ostringstream out;
    write_spectrum_csv(out, samples);
    CHECK(out.str().rfind("lambda,", 0) == 0);
}

TEST_CASE("band sets")
{
    std::vector<double> lam, tr;
    const int n = 4001;
    for (int i = 0; i < n; ++i) {
        lam.push_back(2 * M_PI * i / (n - 1));
        tr.push_back(3 * std::cos(lam.back()));
    }
    auto bs = band_set(lam, tr);
    REQUIRE(bs.bands.size() == 2);
    CHECK_FALSE(bs.coarse);
    double a = std::acos(2.0 / 3);
    CHECK(bs.bands[0].lo == doctest::Approx(a).epsilon(1e-5));
    CHECK(bs.bands[0].hi == doctest::Approx(M_PI - a).epsilon(1e-5));
    CHECK(bs.bands[1].lo == doctest::Approx(M_PI + a).epsilon(1e-5));
    CHECK(bs.bands[1].hi == doctest::Approx(2 * M_PI - a).epsilon(1e-5));

    std::vector<double> few_l, few_t;
    for (int i = 0; i < 9; ++i) {
        few_l.push_back(2 * M_PI * i / 8);
        few_t.push_back(3 * std::cos(few_l.back()));
    }
    CHECK(band_set(few_l, few_t).coarse);
}

TEST_CASE("hausdorff distance")
{
    CHECK(hausdorff({{0, 1}}, {{2, 3}}) == doctest::Approx(2.0));
    CHECK(hausdorff({{0, 1}}, {{0, 1}}) == 0);
    CHECK(hausdorff({}, {}) == 0);
    CHECK(std::isinf(hausdorff({{0, 1}}, {})));
    // a gap inside Y is far from X = [0, 10]
    CHECK(hausdorff({{0, 10}}, {{0, 2}, {8, 10}}) == doctest::Approx(3.0));
    CHECK(hausdorff({{0, 1}}, {{0, 1.5}}) == doctest::Approx(0.5));
}

TEST_CASE("identical traces are at distance zero")
{
    std::vector<DiscriminantSample> s;
    for (double l : lambda_grid(50.0, 1001)) {
        double t = 2 * std::cos(std::sqrt(std::abs(l))) * 1.1;
        s.push_back({l, t, t, 1, 1});
    }
    auto d = band_distance(s, 50.0);
    CHECK(d.distance == 0);
    CHECK_FALSE(d.coarse_grid);
}
