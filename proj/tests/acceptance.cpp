// Acceptance suite: the toolkit's exit gate. Runs every criterion at its
// stated tolerance and prints one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "disc/families.hpp"
#include "disc/io.hpp"

using namespace disc;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] C%d %s: %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

DiscFunction monomial(int n, int k) {
    std::vector<cdouble> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[j] = std::polar(1.0, k * 2 * M_PI * j / double(n));
    return DiscFunction::from_samples(std::move(s));
}

// --- criterion 1: norm oracles ---------------------------------------------
void c1() {
    double t0 = now_seconds();
    const int n = 256;
    auto z5 = monomial(n, 5);
    double dcoef = dirichlet_energy_coeff(z5).energy;
    double dquad = dirichlet_energy_quad(z5, Region::disc()).value;
    auto rz = aalpha_norm(monomial(n, 1), 0.5);
    double dt = now_seconds() - t0;
    bool ok = std::abs(dcoef - 5.0) < 1e-12 && std::abs(dquad - 5.0) < 1e-6 &&
              std::abs(rz.aalpha - 3.0) < 1e-8 && dt < 1.0;
    report(1, "norm oracles", ok,
           fmt("D(z^5) coeff err %.2e, quad err %.2e, ||z||_A err %.2e, %.2fs", dcoef - 5.0,
               dquad - 5.0, rz.aalpha - 3.0, dt));
}

// --- criterion 2: outer reconstruction --------------------------------------
void c2() {
    const int n = 4096;
    std::vector<cdouble> s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s[j] = 2.0 + std::polar(1.0, 2 * M_PI * j / double(n));
    auto f = outer_from_modulus(LogModulus::from_samples(s));
    double head = std::abs(f.coeffs.coeffs[0] - 2.0) + std::abs(f.coeffs.coeffs[1] - 1.0);
    double tail = 0.0;
    for (std::size_t k = 2; k < f.coeffs.coeffs.size(); ++k) tail += std::norm(f.coeffs.coeffs[k]);
    auto split = inner_outer_split(make_test_function("z_times_affine", n));
    bool ok = head < 1e-6 && tail < 1e-10 && split.defect < 1e-6;
    report(2, "outer reconstruction", ok,
           fmt("|a0-2|+|a1-1| = %.2e, tail = %.2e, split defect = %.2e", head, tail, split.defect));
}

// --- criterion 3: kernel identities ------------------------------------------
void c3() {
    double t0 = now_seconds();
    const int n = 1 << 14;
    const int N = 4;
    auto f = make_test_function("canonical", n, 30.0);
    LogModulus L = LogModulus::from_samples(f.boundary.values, 30.0);
    auto family = complement_arcs(BoundaryPointSet::from_angles({0.0}));
    const std::size_t P = family.size();
    auto dcoef = derivative(f.coeffs.coeffs);
    double worst1 = 0.0, worst2 = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        SplitMix64 rng(mix_seed(42, std::uint64_t(trial), P));
        std::size_t count = 1 + std::size_t(rng.bounded(P - 1));
        auto idx = sample_without_replacement(P, count, rng);
        ArcSet G;
        for (auto i : idx) G.arcs.push_back(family.arcs[i]);
        HerglotzPotential pg(L.masked_values(G));
        HerglotzPotential pc(masked(L.values, mask_complement(node_mask(n, G))));
        auto fG = DiscFunction::from_potential(
            HerglotzPotential(scaled(L.masked_values(G), double(N))));
        auto dG = derivative(fG.coeffs.coeffs);
        double err1 = 0.0, scale1 = 0.0, err2 = 0.0, scale2 = 0.0;
        for (double r = 0.1; r < 0.95; r += 0.1) {
            auto fp = synthesize_circle(dcoef, r, n);
            auto fv = f.circle_values(r);
            auto g1 = pg.g_circle(r);
            auto g2 = pc.g_circle(r);
            auto lhs = synthesize_circle(dG, r, n);
            auto gv = fG.circle_values(r);
            for (int j = 0; j < n; ++j) {
                err1 = std::max(err1, std::abs(fp[j] - fv[j] * (g1[j] + g2[j])));
                scale1 = std::max(scale1, std::abs(fp[j]));
                err2 = std::max(err2, std::abs(lhs[j] - double(N) * gv[j] * g1[j]));
                scale2 = std::max(scale2, std::abs(lhs[j]));
            }
        }
        worst1 = std::max(worst1, err1 / scale1);
        worst2 = std::max(worst2, err2 / scale2);
    }
    double dt = now_seconds() - t0;
    bool ok = worst1 < 1e-3 && worst2 < 1e-3 && dt < 60.0;
    report(3, "kernel identities", ok,
           fmt("rel err f'=f(gG+gC): %.2e, (fG^N)'=N fG^N gG: %.2e, %.1fs", worst1, worst2, dt));
}

// --- criterion 4: Carleson closed form ---------------------------------------
void c4() {
    auto E0 = BoundaryPointSet::from_angles({0.0});
    double v = carleson_integral(E0, 1 << 14);
    std::vector<double> pts;
    for (int k = 0; k < 64; ++k) pts.push_back(2 * M_PI * k / 64.0);
    double fat = carleson_integral_fattened(BoundaryPointSet::from_angles(std::move(pts)), 0.5,
                                            1 << 14);
    bool ok = std::abs(v) < 1e-3 && std::isinf(fat);
    report(4, "Carleson closed form", ok,
           fmt("integral({0}) = %.2e, fattened-set sentinel: %s", v,
               std::isinf(fat) ? "raised" : "missing"));
}

// --- criterion 5: Theorem 2 sweep --------------------------------------------
SweepReport run_sweep(const Config& cfg) {
    auto f = make_test_function("canonical_samples", cfg.grid_n, cfg.lambda);
    return sweep_theorem2(f, cfg);
}

void c5(std::string* csv_out) {
    double t0 = now_seconds();
    Config cfg;  // rho 1.5, N 4, counts {8,16,32,64}, 50 trials, seed 42
    cfg.grid_n = 1 << 12;
    auto rep = run_sweep(cfg);
    *csv_out = rep.csv();
    double worst_ratio = 0.0;
    for (const auto& r : rep.rows) worst_ratio = std::max(worst_ratio, r.max / rep.frho_norm);
    double worst_growth = 0.0;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        worst_growth = std::max(worst_growth, rep.rows[i].max / rep.rows[i - 1].max);
    double dt = now_seconds() - t0;
    bool ok = worst_ratio <= 5.0 && worst_growth <= 1.1 && dt < 300.0 && rep.verdict;
    report(5, "Theorem 2 sweep", ok,
           fmt("max/||f^rho|| = %.3f (cap 5), growth per doubling = %.3f (cap 1.1), %.1fs",
               worst_ratio, worst_growth, dt));
}

// --- criterion 6: lemma suite -------------------------------------------------
void c6(std::string* json_out) {
    double t0 = now_seconds();
    bool ok = true;
    std::string detail;
    for (const char* fam : {"canonical", "two_zeros"}) {
        double worst_c = 0.0, worst_drift = 0.0;
        for (const auto& name : kInequalityChecks) {
            Config c12;
            c12.grid_n = 1 << 12;
            Config c13;
            c13.grid_n = 1 << 13;
            auto f12 = make_test_function(std::string(fam) + "_samples", c12.grid_n);
            auto f13 = make_test_function(std::string(fam) + "_samples", c13.grid_n);
            auto r12 = run_inequality(name, f12, c12);
            auto r13 = run_inequality(name, f13, c13);
            if (name == std::string("LOCAL") && fam == std::string("canonical"))
                *json_out = to_json(r12);
            if (!r12.passed || !r13.passed) ok = false;
            worst_c = std::max(worst_c, r12.empirical_constant);
            double drift = (r12.empirical_constant > 1e-12)
                               ? std::abs(r13.empirical_constant - r12.empirical_constant) /
                                     r12.empirical_constant
                               : 0.0;
            if (drift >= 0.10) ok = false;
            worst_drift = std::max(worst_drift, drift);
        }
        detail += fmt("%s: max C %.2f, max drift %.1f%%; ", fam, worst_c, 100 * worst_drift);
    }
    double dt = now_seconds() - t0;
    report(6, "lemma suite", ok, detail + fmt("%.1fs", dt));
}

// --- criterion 7: Theorem 1 convergence ---------------------------------------
ApproxRun run_pipeline(int n) {
    auto f = make_test_function("canonical", n);
    double norm = aalpha_norm(f, 0.5).aalpha;
    return theorem1_pipeline(f, 0.5, 3.0, 0.1 * norm, 6);
}

void c7(std::string* json_out) {
    double t0 = now_seconds();
    auto run = run_pipeline(1 << 14);
    *json_out = to_json(run);
    bool decay_ok = true, slope_ok = true;
    for (const auto& s : run.steps) {
        if (!std::isfinite(s.c_m) || s.c_m <= 0.0) decay_ok = false;
        if (!(s.decay_slope >= 2.5)) slope_ok = false;
    }
    double terminal = run.steps.empty() ? 1e300 : run.steps.back().err_total;
    double dt = now_seconds() - t0;
    bool terminal_ok = terminal < run.eps;
    bool ok = terminal_ok && decay_ok && slope_ok && dt < 600.0;
    std::string note = terminal_ok ? "" :
        " [terminal bound unattainable at schedule m<=8 and desk-scale grids; "
        "see the convergence analysis in the run log]";
    report(7, "Theorem 1 convergence", ok,
           fmt("terminal %.4f vs eps %.4f, C_m finite %s, slope >= 2.5 %s, %.1fs", terminal,
               run.eps, decay_ok ? "yes" : "no", slope_ok ? "yes" : "no", dt) + note);
}

// --- criterion 8: region machinery --------------------------------------------
void c8() {
    bool ok = true;
    std::string detail;
    // partition exactness plus the pointwise D23/D22 bounds on a function
    // whose far-boundary regions are populated (deep clamped belts), and on
    // the canonical test (vacuously: both regions empty there)
    for (int which = 0; which < 2; ++which) {
        const int n = 1 << 11;
        Config cfg;
        cfg.grid_n = n;
        DiscFunction f = make_test_function("canonical", n);
        CheckGeometry geo;
        if (which == 1) {
            cfg.lambda = 200.0;
            std::vector<double> w(static_cast<std::size_t>(n), 0.0);
            for (int j = 0; j < n; ++j) {
                double t = 2 * M_PI * j / double(n);
                for (double c : {M_PI - 0.6, M_PI + 0.6}) {
                    double rel = std::abs(reduce_angle(t - c));
                    rel = std::min(rel, 2 * M_PI - rel);
                    if (rel <= 0.35) w[j] = -cfg.lambda;
                }
            }
            f = outer_from_modulus(LogModulus::from_values(std::move(w), cfg.lambda));
            auto Ef = detect_boundary_zeros(f);
            geo.Ef = Ef;
            geo.family = complement_arcs(Ef);
            geo.gamma = geo.family.arcs[1];
            for (std::size_t i = 0; i < geo.family.size(); ++i)
                if (i != 1) geo.Gamma.arcs.push_back(geo.family.arcs[i]);
        } else {
            geo = default_check_geometry("D22", f, cfg);
        }
        auto lem6 = run_inequality("LEM6", f, geo, cfg);
        auto d23 = run_inequality("D23", f, geo, cfg);
        double ptw = 0.0;
        for (const auto& [k, v] : d23.rhs_components)
            if (k == "pointwise_max_f_over_d8") ptw = v;
        bool bounds = (lem6.node_count == 0 || lem6.empirical_constant <= 1.1) && ptw <= 1.1;
        if (!bounds) ok = false;
        detail += fmt("%s: D22 nodes %ld (|f(mu z)|/d^2 max %.3f), D23 nodes %ld (max |f|/d^8 "
                      "%.3f); ",
                      which ? "belts" : "canonical", lem6.node_count, lem6.empirical_constant,
                      d23.node_count, ptw);
    }
    // exact partition: every sector node gets exactly one label by
    // construction of classify_region (if/else chain); verified by counting
    const int n = 1 << 11;
    Config cfg;
    cfg.grid_n = n;
    auto f = make_test_function("canonical", n);
    auto geo = default_check_geometry("D21", f, cfg);
    LogModulus L = LogModulus::from_samples(f.boundary.values, f.lambda);
    auto maskL = node_mask(n, geo.Gamma);
    std::vector<double> mw(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
        if (maskL[j]) mw[j] = std::max(-L.values[j], 0.0);
    AnnularGrid grid(default_radial_nodes(), n);
    long counts[4] = {0, 0, 0, 0};
    long total = 0;
    for (int i = 0; i < grid.radial; ++i) {
        auto av = HerglotzPotential::quadratic_kernel_circle(mw, grid.r[i]);
        for (int j = 0; j < n; ++j) {
            double theta = 2 * M_PI * j / double(n);
            if (!geo.gamma.contains_halfopen(theta)) continue;
            cdouble z = std::polar(grid.r[i], theta);
            double d = std::min(distance_to_endpoints(z, geo.gamma), 0.5);
            if (d <= 0.0) continue;
            ++total;
            counts[int(classify_region(z, d, std::max(av[j], 0.0)))]++;
        }
    }
    if (counts[0] + counts[1] + counts[2] + counts[3] != total) ok = false;
    detail += fmt("partition %ld+%ld+%ld+%ld = %ld", counts[0], counts[1], counts[2], counts[3],
                  total);
    report(8, "region machinery", ok, detail);
}

// --- criterion 9: determinism ---------------------------------------------------
void c9(const std::string& sweep_csv, const std::string& lemma_json,
        const std::string& pipeline_json) {
    Config cfg;
    cfg.grid_n = 1 << 12;
    auto rep = run_sweep(cfg);
    bool ok = rep.csv() == sweep_csv;
    Config c12;
    c12.grid_n = 1 << 12;
    auto f12 = make_test_function("canonical_samples", c12.grid_n);
    ok = ok && to_json(run_inequality("LOCAL", f12, c12)) == lemma_json;
    ok = ok && to_json(run_pipeline(1 << 14)) == pipeline_json;
    report(9, "determinism", ok,
           ok ? "sweep CSV, lemma JSON and pipeline JSON reproduce byte-for-byte"
              : "re-run outputs differ");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    c1();
    c2();
    c3();
    c4();
    std::string sweep_csv, lemma_json, pipeline_json;
    c5(&sweep_csv);
    c6(&lemma_json);
    c7(&pipeline_json);
    c8();
    c9(sweep_csv, lemma_json, pipeline_json);
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
