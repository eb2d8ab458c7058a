#pragma once

#include <functional>

#include "disc/function.hpp"
#include "disc/quadrature.hpp"

namespace disc {

struct NormReport {
    double sup_norm = 0.0;
    double lip_seminorm = 0.0;  // sup (1-|z|)^{1-alpha} |f'(z)|
    double lip_norm = 0.0;      // sup_norm + lip_seminorm
    double dirichlet = 0.0;     // D(f)
    double aalpha = 0.0;        // lip_norm + sqrt(dirichlet)
    double alpha = 0.0;
};

// Sampling radii for the weighted-derivative sup: r = 0 and r_k = 1 - 2^-k
// while 2^-k > 10 * 2*pi / n.
std::vector<double> lip_radii(int n);

double sup_norm(const DiscFunction& f);
double sup_norm(const DiscFunction& f, const AnnularGrid& grid);
double lip_seminorm(const DiscFunction& f, double alpha);

struct DirichletPair {
    double energy = 0.0;  // D(f) = sum k |a_k|^2
    double norm2 = 0.0;   // ||f||_D^2 = sum (1+k) |a_k|^2
};
DirichletPair dirichlet_energy_coeff(const DiscFunction& f);

// Region of the disc for restricted area integrals.
struct Region {
    enum class Kind { Disc, Sector, Custom } kind = Kind::Disc;
    Arc sector{};  // for Kind::Sector: z/|z| in the arc (left-closed)
    std::function<bool(double r, double theta, cdouble z)> custom;

    static Region disc();
    static Region sector_over(const Arc& gamma);
    static Region predicate(std::function<bool(double, double, cdouble)> p);

    bool contains(double r, double theta, cdouble z) const;
};

struct QuadResult {
    double value = 0.0;
    long nodes = 0;  // zero nodes means the warning case
};

// Annular-grid quadrature of |f'|^2 over the region, dA = (1/pi) r dr dt.
QuadResult dirichlet_energy_quad(const DiscFunction& f, const Region& region,
                                 const AnnularGrid& grid);
QuadResult dirichlet_energy_quad(const DiscFunction& f, const Region& region);

NormReport aalpha_norm(const DiscFunction& f, double alpha);
NormReport aalpha_norm(const DiscFunction& f, double alpha, const AnnularGrid& grid);

int default_radial_nodes();

}  // namespace disc
