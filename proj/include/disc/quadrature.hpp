#pragma once

#include <vector>

#include "disc/arcs.hpp"

namespace disc {

// Gauss-Legendre nodes/weights mapped to (0,1).
void gauss_legendre01(int N, std::vector<double>& x, std::vector<double>& w);

// Tensor grid for area integrals over the disc with dA = (1/pi) r dr dt:
// Gauss-Legendre radii on (0,1) times the n uniform boundary angles.
struct AnnularGrid {
    int radial = 0;
    int angular = 0;
    std::vector<double> r;
    std::vector<double> w;

    AnnularGrid(int radial_nodes, int angular_nodes);
    // weight of one grid cell at radius index i (area measure)
    double cell_weight(int i) const { return w[std::size_t(i)] * r[std::size_t(i)] / M_PI * (2.0 * M_PI / double(angular)); }
};

// int_T log(1/d(e^{it}, E)) dt with chordal d, by quadrature graded
// geometrically (ratio 1/2, 40 levels) toward each point of E.
// refinement is the total node budget, >= 2^12.
double carleson_integral(const BoundaryPointSet& E, int refinement);

// Variant with d measured to a fattened set: the union of arcs of total
// length total_arc_length centered at the points of E. Returns +infinity
// when the integrand diverges on a node set of proportion > 8/refinement.
double carleson_integral_fattened(const BoundaryPointSet& E, double total_arc_length,
                                  int refinement);

}  // namespace disc
