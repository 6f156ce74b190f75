#pragma once

#include "todakdv/symbolic/ansatz.hpp"

#include <map>
#include <optional>
#include <utility>

namespace todakdv::symbolic {

// staggered: d(i,n) = d(i,n-1) + A(n-1) d(i-1,n-1) + B(n-1) d(i-2,n-2)
// aligned:   d(i,n) = d(i,n-1) + A(n-1) d(i-1,n-1) + B(n-1) d(i-2,n-1)
enum class Recursion { staggered, aligned };

// Memoized d(i,n) over one ansatz.
class FlowTable {
public:
    FlowTable(const AnsatzPair& ansatz, Recursion rec = Recursion::staggered, int max_i = 8);

    const EpsSeries& d(int i, int n);
    const AnsatzPair& ansatz() const { return ansatz_; }

private:
    const AnsatzPair& ansatz_;
    Recursion rec_;
    int max_i_;
    EpsSeries zero_, one_;
    std::map<std::pair<int, int>, EpsSeries> memo_;
};

const EpsSeries& d_coeff(FlowTable& table, int i, int n);

struct TodaRhs {
    EpsSeries XZ;
    EpsSeries YZ;
};

// D_{1,k}, D_{2,k} without the overall factor N. k in 1..4 (larger k with allow_higher).
TodaRhs toda_rhs(int k, FlowTable& table, bool allow_higher = false);

struct FlowEquation {
    int j = 0;
    EpsSeries Z;
};

// Lowest nonvanishing coefficient of a flow.
struct LeadingTerm {
    int power = -1;
    DiffPoly poly;
};

// Flow equations, residuals and their recombinations for one choice of R.
class Hierarchy {
public:
    explicit Hierarchy(EpsSeries R, int cap = diffpoly::kDefaultCap, Recursion rec = Recursion::staggered);

    int cap() const { return cap_; }
    const AnsatzPair& ansatz() const { return ansatz_; }
    const TodaRhs& rhs(int k);
    // AA[k] = (XZ + YZ) / (2 eps^3) at the flow cap.
    const EpsSeries& aa(int k);
    // Cumulative recombination: Z1 = AA1, Z2 = AA2 + 2Z1, Z3 = AA3 - 6Z1 + 2Z2,
    // Z4 = AA4 + 20Z1 - 6Z2 + 2Z3.
    FlowEquation flow(int j);
    // dt_along(B(0), AA[j]) - YZ/eps through eps^8 (or through `through`).
    EpsSeries residual(int j, int through = 8);
    // Same check on the A-equation: dt_along(A(0), AA[j]) - XZ/eps.
    EpsSeries residual_A(int j, int through = 8);

private:
    void check_flow_index(int j) const;

    int cap_;
    Recursion rec_;
    AnsatzPair ansatz_;
    FlowTable table_;
    std::map<int, TodaRhs> rhs_;
    std::map<int, EpsSeries> aa_;
    std::map<int, EpsSeries> z_;
};

FlowEquation flow_rhs_combined(int j, Hierarchy& h);
EpsSeries residual(int j, Hierarchy& h);
// kdv_leading for the standard R.
LeadingTerm kdv_leading(int j, Hierarchy& h);

// First power with a nonzero coefficient, if any.
std::optional<int> first_nonzero(const EpsSeries& s);

}  // namespace todakdv::symbolic
