#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "disc/arcs.hpp"
#include "disc/grid.hpp"
#include "disc/potential.hpp"

namespace disc {

// Boundary log-modulus log|f(e^{i theta_j})| clamped from below at -lambda.
struct LogModulus {
    std::vector<double> values;
    double lambda = 30.0;
    double clamped_fraction = 0.0;

    int n() const { return int(values.size()); }

    static LogModulus from_samples(const std::vector<cdouble>& samples, double lambda = 30.0);
    static LogModulus from_values(std::vector<double> values, double lambda = 30.0);

    // values restricted to the arc union (left-closed node membership)
    std::vector<double> masked_values(const ArcSet& gamma) const;
};

// An analytic function carried as boundary samples plus Taylor coefficients;
// outer functions (built from a Herglotz potential) also carry the potential
// and can be evaluated through it anywhere in the disc.
struct DiscFunction {
    BoundaryGrid boundary;
    TaylorCoefficients coeffs;
    std::optional<HerglotzPotential> potential;
    double lambda = 30.0;

    int n() const { return boundary.n; }

    // value at an interior/boundary point (potential path when present,
    // Horner on the coefficients otherwise)
    cdouble eval(cdouble z) const;
    // modulus via the potential when present (exact trapezoid positivity)
    double modulus(cdouble z) const;

    // band-limited values/derivative values on the circle of radius r
    std::vector<cdouble> circle_values(double r) const;
    std::vector<cdouble> derivative_circle(double r) const;
    // modulus on the circle through the potential (falls back to the
    // coefficient path when no potential is attached)
    std::vector<double> modulus_circle(double r) const;

    static DiscFunction from_samples(std::vector<cdouble> samples, double lambda = 30.0);
    static DiscFunction from_potential(HerglotzPotential h, double lambda = 30.0);
};

double default_eval_margin(int n);  // delta_eval = 10/n

// Herglotz potential of the (optionally arc-restricted) log-modulus at z.
// Requires |z| <= 1 - delta_eval.
cdouble herglotz_potential(const LogModulus& L, cdouble z);
cdouble herglotz_potential(const LogModulus& L, const ArcSet& gamma, cdouble z);

// The outer function exp(h): full-circle version is O_f, the arc-restricted
// version is the localized outer factor f_Gamma. Rejects data whose clamped
// fraction is >= 0.25.
DiscFunction outer_from_modulus(const LogModulus& L);
DiscFunction outer_from_modulus(const LogModulus& L, const ArcSet& gamma);

// f_Gamma^N = exp(N h_Gamma).
DiscFunction localized_outer_power(const LogModulus& L, const ArcSet& gamma, int N);

// g_Gamma(z) = (1/pi) int_Gamma e^{it}/(e^{it}-z)^2 log|f| dt; for the full
// circle and outer f this is f'/f. Requires |z| <= 1 - delta_eval.
cdouble g_kernel(const LogModulus& L, cdouble z);
cdouble g_kernel(const LogModulus& L, const ArcSet& gamma, cdouble z);

struct BlaschkeProduct {
    std::vector<std::pair<cdouble, int>> zeros;  // (point in D, multiplicity)
};

cdouble blaschke_eval(const BlaschkeProduct& B, cdouble z);

struct FactorizationResult {
    DiscFunction inner;
    DiscFunction outer;
    double defect = 0.0;  // sup over unclamped boundary nodes of ||inner|-1|
};

// Canonical inner/outer splitting from the boundary modulus. Throws when the
// defect exceeds 0.05 (under-resolved data or a singular inner part).
FactorizationResult inner_outer_split(const DiscFunction& f);

// f^rho = exp(rho h) through the potential; requires the potential.
DiscFunction outer_power(const DiscFunction& f, double rho);

// Pointwise boundary product with exact truncated-Cauchy coefficients;
// potentials add when both factors carry one.
DiscFunction product(const DiscFunction& a, const DiscFunction& b);
DiscFunction difference(const DiscFunction& a, const DiscFunction& b);
DiscFunction linear_combination(const std::vector<DiscFunction>& fns,
                                const std::vector<double>& weights);

}  // namespace disc
