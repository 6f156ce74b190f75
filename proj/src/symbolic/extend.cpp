#include "todakdv/symbolic/extend.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace todakdv::symbolic {

using diffpoly::Monomial;
using diffpoly::MonomialOrder;

std::vector<Monomial> monomials_of_grade(int g)
{
    std::vector<Monomial> out;
    std::vector<int> exps;
    // parts are order + 2, chosen in non-increasing order
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(Monomial::from_exponents(exps));
            return;
        }
        for (int part = std::min(left, max_part); part >= 2; --part) {
            int k = part - 2;
            if (static_cast<int>(exps.size()) <= k)
                exps.resize(k + 1, 0);
            ++exps[k];
            rec(left - part, part);
            --exps[k];
        }
    };
    rec(g, g);
    return out;
}

EpsSeries project_constant(const EpsSeries& s)
{
    EpsSeries r(s.cap());
    for (int k = 0; k <= s.cap(); ++k) {
        DiffPoly p;
        for (const auto& [m, c] : s.coeff(k).terms())
            if (m.max_order() <= 0)
                p.add_term(m, c);
        r.set_coeff(k, std::move(p));
    }
    return r;
}

namespace {

// Residual of the chosen flow through `through` for a given R.
EpsSeries flow_residual(const EpsSeries& R, int through, const ExtendOptions& opts)
{
    Hierarchy h(R, std::max(through, 4), opts.recursion);
    EpsSeries r = h.residual(opts.flow, through);
    return opts.constant_f ? project_constant(r) : r;
}

struct Solution {
    bool consistent = true;
    std::vector<Rational> x;
    int free = 0;
    DiffPoly remainder;
};

// Solves sum_i x_i cols[i] = rhs over the monomial coordinates, free unknowns set to zero.
Solution solve(const std::vector<DiffPoly>& cols, const DiffPoly& rhs)
{
    std::map<Monomial, int, MonomialOrder> index;
    for (const auto& c : cols)
        for (const auto& [m, v] : c.terms())
            index.emplace(m, 0);
    for (const auto& [m, v] : rhs.terms())
        index.emplace(m, 0);
    int rows = 0;
    for (auto& [m, i] : index)
        i = rows++;
    int n = static_cast<int>(cols.size());
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(n + 1));
    for (int j = 0; j < n; ++j)
        for (const auto& [m, v] : cols[j].terms())
            M[index[m]][j] = v;
    for (const auto& [m, v] : rhs.terms())
        M[index[m]][n] = v;

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int p = r;
        while (p < rows && M[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(M[p], M[r]);
        Rational inv = Rational(1) / M[r][c];
        for (int j = c; j <= n; ++j)
            M[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero())
                continue;
            Rational fac = M[i][c];
            for (int j = c; j <= n; ++j)
                M[i][j] -= fac * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    Solution s;
    s.x.assign(n, Rational());
    s.free = n - static_cast<int>(pivot_col.size());
    for (int i = 0; i < r; ++i)
        s.x[pivot_col[i]] = M[i][n];
    for (int i = r; i < rows; ++i)
        if (!M[i][n].is_zero())
            s.consistent = false;
    DiffPoly fit;
    for (int j = 0; j < n; ++j)
        fit += cols[j] * s.x[j];
    s.remainder = rhs - fit;
    return s;
}

}  // namespace

ExtendResult extend_R(const EpsSeries& R, int m, const ExtendOptions& opts)
{
    ExtendResult res;
    res.order = m + 1;
    int cap = std::max(R.cap(), m + 1);
    EpsSeries base(cap);
    for (int k = 0; k <= m; ++k)
        base.set_coeff(k, R.coeff(k));

    // The new coefficient enters A, B at eps^(m+4); its first effect on the residual sits just above.
    int through = m + 5;
    EpsSeries r0 = flow_residual(base, through, opts);
    int o = r0.valuation();
    std::ostringstream rep;

    std::vector<Monomial> basis = monomials_of_grade(m + 4);
    if (opts.constant_f) {
        std::vector<Monomial> keep;
        for (const auto& b : basis)
            if (b.max_order() <= 0)
                keep.push_back(b);
        basis = keep;
    }

    if (o < 0) {
        res.ok = true;
        res.free_unknowns = static_cast<int>(basis.size());
        res.R = base;
        rep << "residual vanishes through eps^" << through << "; eps^" << res.order
            << " coefficient set to 0 (canonical choice)";
        res.report = rep.str();
        return res;
    }
    res.residual_power = o;

    std::vector<DiffPoly> cols;
    for (const auto& b : basis) {
        EpsSeries trial = base;
        trial.set_coeff(m + 1, DiffPoly::term(b));
        EpsSeries r = flow_residual(trial, o, opts);
        cols.push_back(r.coeff(o) - r0.coeff(o));
    }
    Solution sol = solve(cols, -r0.coeff(o));
    res.free_unknowns = sol.free;
    if (!sol.consistent) {
        res.remainder = -sol.remainder;
        rep << "obstruction at eps^" << o << ": no eps^" << res.order
            << " coefficient of grade " << (m + 4) << " cancels the residual; remainder " << res.remainder.str();
        res.report = rep.str();
        return res;
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        res.coefficient.add_term(basis[i], sol.x[i]);
    res.R = base;
    res.R.set_coeff(m + 1, res.coefficient);

    EpsSeries check = flow_residual(res.R, o, opts);
    if (!check.coeff(o).is_zero()) {
        res.remainder = check.coeff(o);
        rep << "linear fit did not cancel eps^" << o << " residual: " << res.remainder.str();
        res.report = rep.str();
        return res;
    }
    res.ok = true;
    rep << "eps^" << res.order << " coefficient: " << res.coefficient.str() << " (cancels residual at eps^" << o
        << ", " << sol.free << " free unknowns set to 0)";
    res.report = rep.str();
    return res;
}

}  // namespace todakdv::symbolic
