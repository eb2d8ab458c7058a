#pragma once

#include <vector>

#include "disc/grid.hpp"

namespace disc {

// Discrete Herglotz potential of a real boundary datum w on the uniform grid:
//
//   h(z) = (1/n) sum_j w_j (e^{i theta_j} + z) / (e^{i theta_j} - z),
//
// the trapezoid rule for (1/2pi) int (e^{it}+z)/(e^{it}-z) w(t) dt. Outer
// functions are exp(h). The class carries the datum and its spectrum and
// offers the evaluation paths used throughout:
//   - eval/g_eval:      direct trapezoid sums at one interior point
//   - eval_circle/...:  the same sums at all n angles of a circle, done
//                       exactly as a circulant correlation via FFT
//   - series:           Taylor coefficients of h (degree n/2 truncation)
//   - boundary:         w_j + i * (band-limited conjugate), so the boundary
//                       modulus of exp(h) is exp(w_j) exactly on nodes
class HerglotzPotential {
  public:
    explicit HerglotzPotential(std::vector<double> data);

    int size() const { return n_; }
    const std::vector<double>& data() const { return data_; }

    cdouble eval(cdouble z) const;
    cdouble g_eval(cdouble z) const;  // (2/n) sum w_j e^{it_j}/(e^{it_j}-z)^2

    std::vector<cdouble> series() const;
    std::vector<cdouble> boundary() const;

    std::vector<cdouble> eval_circle(double r) const;
    std::vector<cdouble> g_circle(double r) const;
    // (1/n) sum_j m_j / |e^{i theta_j} - r e^{i theta_l}|^2 for all l,
    // used with m = -w restricted to an arc union (the a_gamma kernel).
    static std::vector<double> quadratic_kernel_circle(const std::vector<double>& m, double r);

  private:
    int n_;
    std::vector<double> data_;
    std::vector<cdouble> spec_;  // DFT(data)/n
};

// Pointwise scale/add helpers for potential data.
std::vector<double> scaled(const std::vector<double>& w, double s);
std::vector<double> masked(const std::vector<double>& w, const std::vector<std::uint8_t>& mask);
std::vector<double> added(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace disc
