#pragma once

#include "todakdv/bloch/monodromy.hpp"

#include <iosfwd>
#include <vector>

namespace todakdv::bloch {

struct DiscriminantSample {
    double lambda;
    double trace_discrete, trace_continuous;
    double det_discrete, det_continuous;
};

std::vector<double> lambda_grid(double K, int samples);

DiscriminantSample discriminant_sample(const DiscreteCoefficients& c, const lattice::FourierProfile& g,
                                       double lambda, double tol = 1e-11);

std::vector<DiscriminantSample> discriminant_scan(const lattice::FourierProfile& g, int N,
                                                  const std::vector<double>& lambdas, double tol = 1e-11);

struct Interval {
    double lo, hi;
};

// {lambda : |trace| <= 2} restricted to the grid range, as a union of intervals whose
// end points are located by linear interpolation of |trace| - 2 between samples.
struct BandSet {
    std::vector<Interval> bands;
    bool coarse = false;  // some band or gap spans fewer than 3 grid steps
};
BandSet band_set(const std::vector<double>& lambda, const std::vector<double>& trace);

// Hausdorff distance between two finite unions of closed intervals. Infinite if exactly
// one is empty, 0 if both are.
double hausdorff(const std::vector<Interval>& X, const std::vector<Interval>& Y);

struct BandDistance {
    double distance;
    bool coarse_grid;
};
// Compares the discrete and continuous band sets of samples with |lambda| <= K.
BandDistance band_distance(const std::vector<DiscriminantSample>& samples, double K);

void write_spectrum_csv(std::ostream& out, const std::vector<DiscriminantSample>& samples);

}  // namespace todakdv::bloch
