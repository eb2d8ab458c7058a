#pragma once

#include <cstdint>
#include <vector>

#include "disc/fft.hpp"

namespace disc {

// Open arc of the circle, start in [0, 2*pi), 0 < length <= 2*pi.
// Arcs crossing angle 0 are represented by their start and length.
struct Arc {
    double start = 0.0;
    double length = 0.0;

    double end() const;  // start + length reduced mod 2*pi
    bool contains(double theta) const;        // open-arc membership
    bool contains_halfopen(double theta) const;  // [start, start+length)
};

struct ArcSet {
    std::vector<Arc> arcs;

    double total_measure() const;
    std::size_t size() const { return arcs.size(); }
    bool empty() const { return arcs.empty(); }
};

// Finite set of angles on the circle, kept sorted and distinct mod 2*pi.
struct BoundaryPointSet {
    std::vector<double> points;

    static BoundaryPointSet from_angles(std::vector<double> angles);
    bool empty() const { return points.empty(); }
};

double reduce_angle(double theta);               // into [0, 2*pi)
double chordal_distance(double t1, double t2);   // |e^{i t1} - e^{i t2}|

// min over xi in E of |e^{i theta} - xi|; E must be nonempty.
double distance_to_set(double theta, const BoundaryPointSet& E);

// min over endpoints of |z - a|, |z - b| for an interior point.
double distance_to_endpoints(cdouble z, const Arc& gamma);

// Throws if arcs overlap as subsets of the circle.
void validate_disjoint(const ArcSet& s);

// Arcs of T \ E between consecutive points, then normalized to length < 1/2.
ArcSet complement_arcs(const BoundaryPointSet& E);

// Splits every arc of length >= 1/2 into equal subarcs of length < 1/2.
ArcSet normalize_arcset(const ArcSet& s);

// Union of arcs with index >= n in the stored order; n past the end gives
// the empty set.
ArcSet tail_arcs(const ArcSet& s, std::size_t n);

// Node membership for quadrature: theta_j in [start, start+length) for some
// arc. The left-closed convention tiles the circle exactly, so disjoint arc
// unions have disjoint masks and the complement mask is the bitwise
// complement.
std::vector<std::uint8_t> node_mask(int n, const ArcSet& s);
std::vector<std::uint8_t> mask_complement(std::vector<std::uint8_t> m);

// Dyadic subdivision of T \ E accumulating at the points of E, ordered
// coarse to fine; pieces smaller than min_cells grid cells are dropped.
// Tail unions of this family shrink into E.
ArcSet graded_complement(const BoundaryPointSet& E, int n, int min_cells);

}  // namespace disc
