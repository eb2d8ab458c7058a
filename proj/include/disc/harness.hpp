#pragma once

#include <cstdint>
#include <string>

#include "disc/approx.hpp"

namespace disc {

enum class RegionLabel { D1, D21, D22, D23 };

// Region thresholds, natural logs, ties exactly as printed:
//   d < 2(1-|z|)                     -> D1
//   a <= 8|log d|/d                  -> D21
//   a >= 8|log d|/(1-|z|)            -> D23
//   otherwise                        -> D22
// d is the (capped) distance min(|z-a|,|z-b|) to the endpoints of gamma.
RegionLabel classify_region(cdouble z, double d, double a);

// mu_z = 1 - 8|log d|/a for region-22 points; checks the region-22 lower
// threshold and that 1 - mu <= d.
double mu_z(cdouble z, double d, double a);

// a_gamma(z) = (1/2pi) int_{Lambda_gamma} (-log|f|)/|e^{it}-z|^2 dt, with
// Lambda_gamma = Gamma when gamma is not contained in Gamma and T\Gamma
// otherwise. Requires z in the sector over gamma, |z| <= 1 - delta_eval,
// and L <= 0; the (evid) bound a <= C/d^2 is checked inline.
double a_gamma(const LogModulus& L, const ArcSet& Gamma, const Arc& gamma, cdouble z);

struct Config {
    double alpha = 0.5;
    double rho = 1.5;
    int N = 4;
    double M = 3.0;
    int grid_n = 4096;
    double lambda = 30.0;
    std::uint64_t seed = 42;
    int trials = 50;
    std::vector<int> arc_counts{8, 16, 32, 64};
    double constant_cap = 100.0;

    void validate() const;
};

struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    std::vector<std::pair<std::string, double>> rhs_components;
    double empirical_constant = 0.0;
    long node_count = 0;
    bool passed = false;
};

// Geometry for one check: gamma and Gamma are drawn from the same normalized
// family (so Lambda_gamma never meets the sector); LOCAL uses a raw
// complement arc (endpoints in E_f) with d capped at 1/2.
struct CheckGeometry {
    Arc gamma{};
    ArcSet Gamma;
    ArcSet family;
    BoundaryPointSet Ef;
    bool gamma_in_Gamma = false;
};

extern const std::vector<std::string> kInequalityChecks;

CheckGeometry default_check_geometry(const std::string& name, const DiscFunction& f,
                                     const Config& cfg);

InequalityReport run_inequality(const std::string& name, const DiscFunction& f,
                                const CheckGeometry& geo, const Config& cfg);
InequalityReport run_inequality(const std::string& name, const DiscFunction& f,
                                const Config& cfg);

struct SweepRow {
    int arc_count = 0;
    double max = 0.0;
    double mean = 0.0;
    double min = 0.0;
};

struct SweepReport {
    double frho_norm = 0.0;   // ||f^rho||_{A_alpha} of the rescaled function
    std::vector<SweepRow> rows;
    bool verdict = false;     // bounded by 5x baseline, <= 1.1x per doubling
    std::string csv() const;
};

// Random arc-union sweep of ||f^rho f_Gamma^N||_{A_alpha}; Gamma is a
// uniformly drawn subset of the normalized complement arcs of E_f, per-trial
// streams derived from (seed, arc_count, trial).
SweepReport sweep_theorem2(const DiscFunction& f, const Config& cfg);

// Deterministic RNG used for all seeded draws.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next();
    std::uint64_t bounded(std::uint64_t n);  // uniform-ish in [0, n)
};
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t k,
                                                    SplitMix64& rng);

// Exercises the (simple) inequality chain node-wise with the all-trapezoid
// evaluation family; returns (lhs, rhs) integrals over the Delta^2 part of
// the sector.
std::pair<double, double> simple_chain_integrals(const DiscFunction& f, const CheckGeometry& geo,
                                                 const Config& cfg);

}  // namespace disc
