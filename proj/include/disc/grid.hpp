#pragma once

#include <vector>

#include "disc/fft.hpp"

namespace disc {

// Uniform boundary samples: value j lives at angle theta_j = 2*pi*j/n.
struct BoundaryGrid {
    int n = 0;
    std::vector<cdouble> values;

    double angle(int j) const { return 2.0 * M_PI * double(j) / double(n); }
};

// Grid of zeros; n must be a power of two, n >= 16.
BoundaryGrid make_grid(int n);

// Taylor coefficients a_0..a_K. analyze() fills the analyticity defect
// (energy in the discarded negative frequencies).
struct TaylorCoefficients {
    std::vector<cdouble> coeffs;
    double analyticity_defect = 0.0;

    // |a_K| / max_j |a_j|, the tail-decay diagnostic.
    double tail_ratio() const;
};

// Discrete Fourier analysis keeping indices 0..n/2.
TaylorCoefficients analyze(const BoundaryGrid& b);

// Horner evaluation of sum a_j z^j; requires |z| <= 1.
cdouble synthesize(const TaylorCoefficients& c, cdouble z);
cdouble horner(const std::vector<cdouble>& coeffs, cdouble z);

// Values of sum a_k (r e^{i theta_j})^k at all n grid angles, via FFT.
std::vector<cdouble> synthesize_circle(const std::vector<cdouble>& coeffs, double r, int n);

// Coefficients of the z-derivative.
std::vector<cdouble> derivative(const std::vector<cdouble>& coeffs);

// Cauchy product truncated to the longer operand's length (exact for the
// leading coefficients of the underlying power series).
std::vector<cdouble> cauchy_product(const std::vector<cdouble>& a, const std::vector<cdouble>& b);

// Taylor coefficients of exp(sum h_k z^k), truncated at the input length.
// Exact: coefficient m depends on h_1..h_m only.
std::vector<cdouble> exp_series(const std::vector<cdouble>& h);

}  // namespace disc
