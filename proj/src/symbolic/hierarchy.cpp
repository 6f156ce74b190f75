#include "todakdv/symbolic/hierarchy.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace todakdv::symbolic {

FlowTable::FlowTable(const AnsatzPair& ansatz, Recursion rec, int max_i)
    : ansatz_(ansatz), rec_(rec), max_i_(max_i), zero_(ansatz.cap()),
      one_(EpsSeries::monomial(ansatz.cap(), 0, DiffPoly(1)))
{
}

const EpsSeries& FlowTable::d(int i, int n)
{
    if (i < 0)
        return zero_;
    if (i == 0)
        return one_;
    if (n == 0)
        return zero_;
    if (i > max_i_ || n > ansatz_.reach() + 1 || n < -ansatz_.reach())
        throw std::out_of_range("d(" + std::to_string(i) + "," + std::to_string(n) + "): outside table range");
    auto key = std::make_pair(i, n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    EpsSeries v;
    if (n > 0) {
        int m = n - 1;
        int back = rec_ == Recursion::staggered ? n - 2 : n - 1;
        v = d(i, m) + ansatz_.A_of(m) * d(i - 1, m) + ansatz_.B_of(m) * d(i - 2, back);
    } else {
        int back = rec_ == Recursion::staggered ? n - 1 : n;
        v = d(i, n + 1) - ansatz_.A_of(n) * d(i - 1, n) - ansatz_.B_of(n) * d(i - 2, back);
    }
    return memo_.emplace(key, std::move(v)).first->second;
}

const EpsSeries& d_coeff(FlowTable& table, int i, int n)
{
    return table.d(i, n);
}

TodaRhs toda_rhs(int k, FlowTable& table, bool allow_higher)
{
    if (k < 1 || (!allow_higher && k > 4))
        throw std::invalid_argument("toda_rhs: flow index " + std::to_string(k) + " outside 1..4");
    const AnsatzPair& an = table.ansatz();
    if (k == 1)
        return {an.B_of(0) - an.B_of(1), an.B_of(0) * (an.A_of(0) - an.A_of(-1))};

    // a[p][n+1] for n in {-1, 0}
    std::vector<std::array<EpsSeries, 2>> a(k);
    for (int p = k - 1; p >= 0; --p) {
        for (int n = -1; n <= 0; ++n) {
            EpsSeries x = table.d(k - p, n + k) - table.d(k - p, n);
            for (int r = p + 1; r <= k - 1; ++r)
                x = x - a[r][n + 1] * table.d(r - p, n + r);
            a[p][n + 1] = std::move(x);
        }
    }
    EpsSeries XZ = a[1][1] * an.B_of(1) - a[1][0] * an.B_of(0);
    EpsSeries YZ = an.B_of(0) * (a[0][1] - a[0][0]);
    return {std::move(XZ), std::move(YZ)};
}

Hierarchy::Hierarchy(EpsSeries R, int cap, Recursion rec)
    : cap_(cap), rec_(rec), ansatz_(R, cap + 3, 10), table_(ansatz_, rec)
{
}

void Hierarchy::check_flow_index(int j) const
{
    if (j < 1 || j > 4)
        throw std::invalid_argument("flow index " + std::to_string(j) + " outside 1..4");
}

const TodaRhs& Hierarchy::rhs(int k)
{
    check_flow_index(k);
    if (auto it = rhs_.find(k); it != rhs_.end())
        return it->second;
    return rhs_.emplace(k, toda_rhs(k, table_)).first->second;
}

const EpsSeries& Hierarchy::aa(int k)
{
    if (auto it = aa_.find(k); it != aa_.end())
        return it->second;
    const TodaRhs& t = rhs(k);
    EpsSeries v = (t.XZ + t.YZ).divide_eps(3) * Rational(1, 2);
    return aa_.emplace(k, v.with_cap(cap_)).first->second;
}

FlowEquation Hierarchy::flow(int j)
{
    check_flow_index(j);
    if (auto it = z_.find(j); it != z_.end())
        return {j, it->second};
    EpsSeries z;
    switch (j) {
    case 1: z = aa(1); break;
    case 2: z = aa(2) + flow(1).Z * Rational(2); break;
    case 3: z = aa(3) - flow(1).Z * Rational(6) + flow(2).Z * Rational(2); break;
    default:
        z = aa(4) + flow(1).Z * Rational(20) - flow(2).Z * Rational(6) + flow(3).Z * Rational(2);
        break;
    }
    z_.emplace(j, z);
    return {j, z};
}

EpsSeries Hierarchy::residual(int j, int through)
{
    check_flow_index(j);
    EpsSeries lhs = diffpoly::dt_along(ansatz_.B_of(0), aa(j));
    EpsSeries r = lhs - rhs(j).YZ.divide_eps(1);
    return r.with_cap(std::min(through, r.cap()));
}

EpsSeries Hierarchy::residual_A(int j, int through)
{
    check_flow_index(j);
    EpsSeries lhs = diffpoly::dt_along(ansatz_.A_of(0), aa(j));
    EpsSeries r = lhs - rhs(j).XZ.divide_eps(1);
    return r.with_cap(std::min(through, r.cap()));
}

FlowEquation flow_rhs_combined(int j, Hierarchy& h)
{
    return h.flow(j);
}

EpsSeries residual(int j, Hierarchy& h)
{
    return h.residual(j);
}

std::optional<int> first_nonzero(const EpsSeries& s)
{
    int v = s.valuation();
    if (v < 0)
        return std::nullopt;
    return v;
}

LeadingTerm kdv_leading(int j, Hierarchy& h)
{
    EpsSeries z = h.flow(j).Z;
    int v = z.valuation();
    if (v < 0)
        return {};
    return {v, z.coeff(v)};
}

}  // namespace todakdv::symbolic
