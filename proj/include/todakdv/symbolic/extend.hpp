#pragma once

#include "todakdv/symbolic/hierarchy.hpp"

#include <string>
#include <vector>

namespace todakdv::symbolic {

// Every monomial whose eps-grade (sum of (order + 2) * exponent) equals g.
std::vector<diffpoly::Monomial> monomials_of_grade(int g);

struct ExtendOptions {
    int flow = 1;
    // Treat f as constant: all derivative monomials are projected out.
    bool constant_f = false;
    Recursion recursion = Recursion::staggered;
};

struct ExtendResult {
    bool ok = false;
    // Power of the new coefficient of R.
    int order = 0;
    DiffPoly coefficient;
    // R with the new coefficient installed (valid when ok).
    EpsSeries R;
    // Lowest residual power the new coefficient had to cancel; -1 if nothing was left.
    int residual_power = -1;
    // What the best fit left behind (zero when ok).
    DiffPoly remainder;
    // Unknowns left free by the linear system, set to zero.
    int free_unknowns = 0;
    std::string report;
};

// Given R verified through eps^m, solves for the eps^(m+1) coefficient that cancels the lowest
// surviving residual of the chosen flow. Non-solvability is reported, not thrown.
ExtendResult extend_R(const EpsSeries& R, int m, const ExtendOptions& opts = {});

// Drops every monomial containing a derivative.
EpsSeries project_constant(const EpsSeries& s);

}  // namespace todakdv::symbolic
