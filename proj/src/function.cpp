#include "disc/function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disc {

LogModulus LogModulus::from_samples(const std::vector<cdouble>& samples, double lambda) {
    std::vector<double> v(samples.size());
    std::size_t clamped = 0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        double m = std::abs(samples[j]);
        double L = (m > 0.0) ? std::log(m) : -lambda;
        if (L < -lambda) {
            L = -lambda;
            ++clamped;
        }
        v[j] = L;
    }
    LogModulus out;
    out.values = std::move(v);
    out.lambda = lambda;
    out.clamped_fraction = double(clamped) / double(samples.size());
    return out;
}

LogModulus LogModulus::from_values(std::vector<double> values, double lambda) {
    std::size_t clamped = 0;
    for (auto& L : values) {
        if (!std::isfinite(L)) throw std::invalid_argument("LogModulus: non-finite value");
        if (L < -lambda) {
            L = -lambda;
            ++clamped;
        }
    }
    LogModulus out;
    out.lambda = lambda;
    out.clamped_fraction = double(clamped) / double(values.size());
    out.values = std::move(values);
    return out;
}

std::vector<double> LogModulus::masked_values(const ArcSet& gamma) const {
    return masked(values, node_mask(n(), gamma));
}

double default_eval_margin(int n) { return 10.0 / double(n); }

cdouble DiscFunction::eval(cdouble z) const {
    if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("DiscFunction::eval: |z| > 1");
    if (potential && std::abs(z) < 1.0) return std::exp(potential->eval(z));
    return horner(coeffs.coeffs, z);
}

double DiscFunction::modulus(cdouble z) const {
    if (potential && std::abs(z) < 1.0) return std::exp(potential->eval(z).real());
    return std::abs(horner(coeffs.coeffs, z));
}

std::vector<cdouble> DiscFunction::circle_values(double r) const {
    return synthesize_circle(coeffs.coeffs, r, n());
}

std::vector<cdouble> DiscFunction::derivative_circle(double r) const {
    return synthesize_circle(derivative(coeffs.coeffs), r, n());
}

std::vector<double> DiscFunction::modulus_circle(double r) const {
    const std::size_t nn = std::size_t(n());
    std::vector<double> out(nn);
    // Neither evaluation path resolves radii within ~1/n of the circle: the
    // trapezoid kernel carries an aliased Poisson mass 1 + 2r^n/(1-r^n) and
    // the truncated series leaves its tail out. Past the margin the discrete
    // object's boundary behavior is its samples.
    const double rcap = 1.0 - 25.0 / double(n());
    if (r > rcap || r >= 1.0) {
        for (std::size_t j = 0; j < nn; ++j) out[j] = std::abs(boundary.values[j]);
    } else if (potential) {
        auto h = potential->eval_circle(r);
        for (std::size_t j = 0; j < nn; ++j) out[j] = std::exp(h[j].real());
    } else {
        auto v = circle_values(r);
        for (std::size_t j = 0; j < nn; ++j) out[j] = std::abs(v[j]);
    }
    return out;
}

DiscFunction DiscFunction::from_samples(std::vector<cdouble> samples, double lambda) {
    DiscFunction f;
    f.boundary.n = int(samples.size());
    f.boundary.values = std::move(samples);
    f.coeffs = analyze(f.boundary);
    f.lambda = lambda;
    return f;
}

DiscFunction DiscFunction::from_potential(HerglotzPotential h, double lambda) {
    DiscFunction f;
    const int n = h.size();
    f.boundary.n = n;
    auto hb = h.boundary();
    f.boundary.values.resize(std::size_t(n));
    for (int j = 0; j < n; ++j) f.boundary.values[std::size_t(j)] = std::exp(hb[std::size_t(j)]);
    f.coeffs.coeffs = disc::exp_series(h.series());
    f.coeffs.analyticity_defect = 0.0;
    f.potential = std::move(h);
    f.lambda = lambda;
    return f;
}

namespace {

void check_margin(int n, cdouble z, const char* what) {
    if (std::abs(z) > 1.0 - default_eval_margin(n))
        throw std::invalid_argument(std::string(what) +
                                    ": z too close to the boundary for the trapezoid rule; "
                                    "refine the grid or use the boundary path");
}

void check_clamped(const LogModulus& L, const char* what) {
    if (L.clamped_fraction >= 0.25)
        throw std::runtime_error(std::string(what) + ": clamped fraction >= 0.25, "
                                                     "modulus data too degenerate");
}

}  // namespace

cdouble herglotz_potential(const LogModulus& L, cdouble z) {
    check_margin(L.n(), z, "herglotz_potential");
    return HerglotzPotential(L.values).eval(z);
}

cdouble herglotz_potential(const LogModulus& L, const ArcSet& gamma, cdouble z) {
    check_margin(L.n(), z, "herglotz_potential");
    if (gamma.empty()) return cdouble(0.0, 0.0);
    return HerglotzPotential(L.masked_values(gamma)).eval(z);
}

DiscFunction outer_from_modulus(const LogModulus& L) {
    check_clamped(L, "outer_from_modulus");
    return DiscFunction::from_potential(HerglotzPotential(L.values), L.lambda);
}

DiscFunction outer_from_modulus(const LogModulus& L, const ArcSet& gamma) {
    check_clamped(L, "outer_from_modulus");
    return DiscFunction::from_potential(HerglotzPotential(L.masked_values(gamma)), L.lambda);
}

DiscFunction localized_outer_power(const LogModulus& L, const ArcSet& gamma, int N) {
    if (N < 1) throw std::invalid_argument("localized_outer_power: N >= 1 required");
    check_clamped(L, "localized_outer_power");
    auto w = L.masked_values(gamma);
    for (auto& v : w) v *= double(N);
    return DiscFunction::from_potential(HerglotzPotential(std::move(w)), L.lambda);
}

cdouble g_kernel(const LogModulus& L, cdouble z) {
    check_margin(L.n(), z, "g_kernel");
    return HerglotzPotential(L.values).g_eval(z);
}

cdouble g_kernel(const LogModulus& L, const ArcSet& gamma, cdouble z) {
    check_margin(L.n(), z, "g_kernel");
    if (gamma.empty()) return cdouble(0.0, 0.0);
    return HerglotzPotential(L.masked_values(gamma)).g_eval(z);
}

cdouble blaschke_eval(const BlaschkeProduct& B, cdouble z) {
    if (std::abs(z) > 1.0 + 1e-12) throw std::invalid_argument("blaschke_eval: |z| > 1");
    cdouble prod(1.0, 0.0);
    for (const auto& [a, mult] : B.zeros) {
        if (std::abs(a) >= 1.0) throw std::invalid_argument("blaschke_eval: zero outside D");
        cdouble factor;
        if (std::abs(a) < 1e-300) {
            factor = z;
        } else {
            factor = (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
        }
        for (int k = 0; k < mult; ++k) prod *= factor;
    }
    return prod;
}

FactorizationResult inner_outer_split(const DiscFunction& f) {
    const int n = f.n();
    double peak = 0.0;
    for (const auto& v : f.boundary.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) throw std::invalid_argument("inner_outer_split: f is identically zero");
    LogModulus L = LogModulus::from_samples(f.boundary.values, f.lambda);
    if (L.clamped_fraction > 0.25)
        throw std::runtime_error("inner_outer_split: boundary modulus below clamp on > 25% of nodes");
    FactorizationResult res{DiscFunction{}, outer_from_modulus(L), 0.0};
    std::vector<cdouble> q(static_cast<std::size_t>(n));
    double defect = 0.0;
    const double floor = std::exp(-f.lambda / 2.0);
    for (int j = 0; j < n; ++j) {
        q[std::size_t(j)] = f.boundary.values[std::size_t(j)] / res.outer.boundary.values[std::size_t(j)];
        if (std::abs(f.boundary.values[std::size_t(j)]) > floor)
            defect = std::max(defect, std::abs(std::abs(q[std::size_t(j)]) - 1.0));
    }
    res.inner = DiscFunction::from_samples(std::move(q), f.lambda);
    res.defect = defect;
    if (defect > 0.05)
        throw std::runtime_error(
            "inner_outer_split: factorization defect > 0.05 (singular inner part or "
            "under-resolved grid)");
    return res;
}

DiscFunction outer_power(const DiscFunction& f, double rho) {
    if (!f.potential)
        throw std::invalid_argument(
            "outer_power: no potential attached; run inner_outer_split and use the outer part");
    if (rho < 0.0) throw std::invalid_argument("outer_power: rho >= 0 required");
    return DiscFunction::from_potential(HerglotzPotential(scaled(f.potential->data(), rho)),
                                        f.lambda);
}

DiscFunction product(const DiscFunction& a, const DiscFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("product: grid size mismatch");
    DiscFunction out;
    out.boundary.n = a.n();
    out.boundary.values.resize(std::size_t(a.n()));
    for (std::size_t j = 0; j < out.boundary.values.size(); ++j)
        out.boundary.values[j] = a.boundary.values[j] * b.boundary.values[j];
    out.coeffs.coeffs = cauchy_product(a.coeffs.coeffs, b.coeffs.coeffs);
    out.coeffs.analyticity_defect = a.coeffs.analyticity_defect + b.coeffs.analyticity_defect;
    out.lambda = std::min(a.lambda, b.lambda);
    if (a.potential && b.potential)
        out.potential = HerglotzPotential(added(a.potential->data(), b.potential->data()));
    return out;
}

DiscFunction difference(const DiscFunction& a, const DiscFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("difference: grid size mismatch");
    DiscFunction out;
    out.boundary.n = a.n();
    out.boundary.values.resize(std::size_t(a.n()));
    for (std::size_t j = 0; j < out.boundary.values.size(); ++j)
        out.boundary.values[j] = a.boundary.values[j] - b.boundary.values[j];
    const std::size_t K = std::max(a.coeffs.coeffs.size(), b.coeffs.coeffs.size());
    out.coeffs.coeffs.assign(K, cdouble(0, 0));
    for (std::size_t k = 0; k < K; ++k) {
        cdouble va = k < a.coeffs.coeffs.size() ? a.coeffs.coeffs[k] : cdouble(0, 0);
        cdouble vb = k < b.coeffs.coeffs.size() ? b.coeffs.coeffs[k] : cdouble(0, 0);
        out.coeffs.coeffs[k] = va - vb;
    }
    out.lambda = std::min(a.lambda, b.lambda);
    return out;
}

DiscFunction linear_combination(const std::vector<DiscFunction>& fns,
                                const std::vector<double>& weights) {
    if (fns.empty() || fns.size() != weights.size())
        throw std::invalid_argument("linear_combination: size mismatch");
    DiscFunction out;
    const int n = fns.front().n();
    out.boundary.n = n;
    out.boundary.values.assign(std::size_t(n), cdouble(0, 0));
    std::size_t K = 0;
    for (const auto& f : fns) K = std::max(K, f.coeffs.coeffs.size());
    out.coeffs.coeffs.assign(K, cdouble(0, 0));
    out.lambda = fns.front().lambda;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        if (fns[i].n() != n) throw std::invalid_argument("linear_combination: grid mismatch");
        for (std::size_t j = 0; j < std::size_t(n); ++j)
            out.boundary.values[j] += weights[i] * fns[i].boundary.values[j];
        for (std::size_t k = 0; k < fns[i].coeffs.coeffs.size(); ++k)
            out.coeffs.coeffs[k] += weights[i] * fns[i].coeffs.coeffs[k];
        out.lambda = std::min(out.lambda, fns[i].lambda);
    }
    return out;
}

}  // namespace disc
