#include "todakdv/lattice/asymptotic.hpp"

#include "todakdv/symbolic/conserved_series.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace todakdv::lattice {

double quadrature(const FourierProfile& f, const symbolic::Monomial& m, int points)
{
    int top = std::max(m.max_order(), 0);
    long double sum = 0;
    for (int i = 0; i < points; ++i) {
        auto jet = f.jet(static_cast<long double>(i) / points, top);
        long double v = 1;
        const auto& e = m.exponents();
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int r = 0; r < e[k]; ++r)
                v *= jet[k];
        sum += v;
    }
    return static_cast<double>(sum / points);
}

double evaluate_series(const symbolic::FSeries& s, const FourierProfile& f, double eps, int points)
{
    std::map<std::vector<int>, double> cache;
    auto atom = [&](const symbolic::Monomial& m) {
        auto it = cache.find(m.exponents());
        if (it != cache.end())
            return it->second;
        double v = quadrature(f, m, points);
        cache.emplace(m.exponents(), v);
        return v;
    };
    double sum = 0;
    for (int k = s.low(); k <= s.cap(); ++k)
        sum += s.coeff(k).evaluate(atom) * std::pow(eps, k);
    return sum;
}

AsymptoticC asymptotic_C(const Profile& f, int N, int depth)
{
    if (!f.closed_form)
        throw std::invalid_argument("asymptotic_C: profile '" + f.name + "' has no closed form");
    return asymptotic_C(*f.closed_form, N, depth);
}

AsymptoticC asymptotic_C(const FourierProfile& f, int N, int depth)
{
    if (depth < 1 || depth > 3)
        throw std::invalid_argument("asymptotic_C: depth must be 1..3");
    static const symbolic::ConservedSeries series = symbolic::conserved_series();
    const double eps = 1.0 / N;
    AsymptoticC r;
    r.depth = depth;
    r.C1 = evaluate_series(series.C1, f, eps);
    if (depth >= 2)
        r.C2 = evaluate_series(series.C2, f, eps);
    if (depth >= 3) {
        r.C3 = evaluate_series(series.C3, f, eps);
        using symbolic::Monomial;
        double f3 = quadrature(f, Monomial::var(0, 3));
        double ffpp = quadrature(f, Monomial::var(0) * Monomial::var(2));
        r.C3_golden = std::pow(eps, 5) * (-7.0 / 12.0 * f3 + 1.0 / 8.0 * ffpp);
    }
    return r;
}

}  // namespace todakdv::lattice
