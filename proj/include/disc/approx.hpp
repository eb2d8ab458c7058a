#pragma once

#include <string>

#include "disc/norms.hpp"

namespace disc {

// Convex weights on a candidate list, summing to 1.
struct SimplexWeights {
    std::vector<double> weights;
};

struct ConvexResult {
    SimplexWeights weights;
    double distance = 0.0;  // achieved ||sum c_i v_i - target||_D
    int iterations = 0;
};

// Conditional-gradient (Frank-Wolfe) minimization of the Dirichlet-space
// distance to the target over the simplex, inner product
// <a,b> = sum_k (1+k) a_k conj(b_k). Stops at tol or budget.
ConvexResult convex_approx(const std::vector<DiscFunction>& candidates,
                           const DiscFunction& target, int budget = 500, double tol = 1e-6);

// Outer function with boundary modulus min(1, (d(xi,E')/delta)^M). The log
// datum is floored at min(lambda, M|log(halfcell/delta)|+1): a deeper notch
// at a zero node only injects clamp-scale Dirichlet noise.
DiscFunction pinching_factor(const BoundaryPointSet& Eprime, double M, double delta, int n,
                             double lambda = 30.0);

struct PinchResult {
    DiscFunction factor;
    double delta = 0.0;
    double achieved = 0.0;  // ||F f - f||_{A_alpha} at the returned delta
    bool ok = false;
};

// Bisection on delta (largest delta whose error meets eps). Requires f to
// vanish on E' (boundary samples below e^{-lambda/2} at the nearest nodes).
PinchResult pinch_to_tolerance(const DiscFunction& f, const BoundaryPointSet& Eprime, double M,
                               double eps, double alpha);

struct ApproxStep {
    int m = 0;
    double err_power = 0.0;   // ||f O^{1/m} - f||
    double err_convex = 0.0;  // ||f O^{1/m} k_m - f O^{1/m}||
    double err_pinch = 0.0;   // ||f O^{1/m} k_m F_m - f O^{1/m} k_m||
    double err_total = 0.0;   // ||f g_m - f||
    double c_m = 0.0;         // max |g_m(xi)| / d^M(xi, E_f)
    double delta = 0.0;
    double decay_slope = 0.0;
    double convex_distance = 0.0;
};

struct ApproxRun {
    double alpha = 0.0;
    double M = 0.0;
    int N = 0;
    double eps = 0.0;
    double norm_f = 0.0;  // A_alpha norm of the (rescaled) input
    std::vector<int> schedule;
    std::vector<ApproxStep> steps;
    bool converged = false;  // terminal err_total < eps

    std::string csv() const;
};

// The approximating sequence g_m = O_f^{1/m} k_m F_m. f is rescaled to unit
// A_alpha norm internally; eps is relative to that normalization (callers
// passing eps = c * ||f||_{A_alpha} should pass c here times the norm, the
// run records both). The boundary zero set is detected from clamped nodes.
ApproxRun theorem1_pipeline(const DiscFunction& f, double alpha, double M, double eps, int N,
                            std::vector<int> schedule = {1, 2, 3, 4, 5, 6, 7, 8});

// Boundary zeros detected as runs of clamped nodes, collapsed to midpoints.
BoundaryPointSet detect_boundary_zeros(const DiscFunction& f);

struct MembershipVerdict {
    bool member = false;
    double boundary_max = 0.0;     // max |f| at nodes nearest E
    double sup_ratio = 0.0;        // sup over the annular grid of |f/U| (resynthesized)
    double division_defect = 0.0;  // relative negative-frequency energy of f/U samples
    std::string note;
};

// Standard-ideal membership: f vanishes on E and U divides f in H-infinity.
MembershipVerdict ideal_membership(const DiscFunction& f, const BoundaryPointSet& E,
                                   const BlaschkeProduct& U, double tol);

}  // namespace disc
