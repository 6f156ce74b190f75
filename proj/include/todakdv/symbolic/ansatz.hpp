#pragma once

#include "todakdv/diffpoly/eps_series.hpp"

#include <vector>

namespace todakdv::symbolic {

using diffpoly::DiffPoly;
using diffpoly::EpsSeries;
using diffpoly::Rational;

// Working truncation for XZ/YZ: three powers above the flow cap, since AA divides by eps^3.
inline constexpr int kWorkingCap = diffpoly::kDefaultCap + 3;

// The correction series R(f) through eps^5, stored at the given cap.
EpsSeries standard_R(int cap = diffpoly::kDefaultCap);

// A(n) = shift(2 + eps^2 f - eps^3 R, n), B(n) = shift(-1 + eps^2 f + eps^3 R, n),
// precomputed for |n| <= reach.
class AnsatzPair {
public:
    AnsatzPair(const EpsSeries& R, int cap, int reach = 10);

    const EpsSeries& R() const { return R_; }
    int cap() const { return cap_; }
    int reach() const { return reach_; }
    const EpsSeries& A_of(int n) const;
    const EpsSeries& B_of(int n) const;

private:
    EpsSeries R_;
    int cap_;
    int reach_;
    std::vector<EpsSeries> A_, B_;
};

AnsatzPair build_ansatz(const EpsSeries& R, int cap = kWorkingCap);

}  // namespace todakdv::symbolic
