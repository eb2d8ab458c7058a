#include "disc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace disc {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;

// Legendre nodes on (-1,1) by Newton iteration on P_N.
void legendre_nodes(int N, std::vector<double>& x, std::vector<double>& w) {
    x.resize(std::size_t(N));
    w.resize(std::size_t(N));
    for (int i = 0; i < (N + 1) / 2; ++i) {
        double t = std::cos(M_PI * (double(i) + 0.75) / (double(N) + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int k = 0; k < N; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * t * p1 - double(k) * p2) / double(k + 1);
            }
            double dp = double(N) * (t * p0 - p1) / (t * t - 1.0);
            double t1 = t - p0 / dp;
            if (std::abs(t1 - t) < 1e-15) {
                t = t1;
                break;
            }
            t = t1;
        }
        p0 = 1.0;
        p1 = 0.0;
        for (int k = 0; k < N; ++k) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k + 1.0) * t * p1 - double(k) * p2) / double(k + 1);
        }
        double dp = double(N) * (t * p0 - p1) / (t * t - 1.0);
        x[std::size_t(i)] = -t;
        x[std::size_t(N - 1 - i)] = t;
        double wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[std::size_t(i)] = wi;
        w[std::size_t(N - 1 - i)] = wi;
    }
}

const std::pair<std::vector<double>, std::vector<double>>& gl_cached(int N) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<double> x, w;
    legendre_nodes(N, x, w);
    return cache.emplace(N, std::make_pair(std::move(x), std::move(w))).first->second;
}

}  // namespace

void gauss_legendre01(int N, std::vector<double>& x, std::vector<double>& w) {
    if (N < 1) throw std::invalid_argument("gauss_legendre01: N >= 1 required");
    const auto& base = gl_cached(N);
    x.resize(std::size_t(N));
    w.resize(std::size_t(N));
    for (int i = 0; i < N; ++i) {
        x[std::size_t(i)] = 0.5 * (base.first[std::size_t(i)] + 1.0);
        w[std::size_t(i)] = 0.5 * base.second[std::size_t(i)];
    }
}

AnnularGrid::AnnularGrid(int radial_nodes, int angular_nodes)
    : radial(radial_nodes), angular(angular_nodes) {
    if (radial_nodes < 2 || angular_nodes < 16)
        throw std::invalid_argument("AnnularGrid: too few nodes");
    gauss_legendre01(radial_nodes, r, w);
}

namespace {

// Integrate log(1/d(e^{it})) over [a, b] with the integrable singularity at
// the endpoint `sing` (= a or b): geometric grading, ratio 1/2, 40 levels,
// Gauss-Legendre of order q per level.
template <typename DistFn>
double graded_side(double sing, double far, int q, const DistFn& dist) {
    const auto& base = gl_cached(q);
    const double len = far - sing;  // signed
    double total = 0.0;
    const int levels = 40;
    double hi = 1.0;
    for (int l = 0; l < levels; ++l) {
        double lo = (l == levels - 1) ? 0.0 : hi * 0.5;
        double t0 = sing + len * lo;
        double t1 = sing + len * hi;
        double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
        for (int i = 0; i < q; ++i) {
            double t = mid + half * base.first[std::size_t(i)];
            double d = dist(t);
            double v = (d > 0.0) ? std::log(1.0 / d) : 0.0;
            total += std::abs(half) * base.second[std::size_t(i)] * v;
        }
        hi = lo;
    }
    return total;
}

}  // namespace

double carleson_integral(const BoundaryPointSet& E, int refinement) {
    if (E.empty()) throw std::invalid_argument("carleson_integral: empty E");
    if (refinement < (1 << 12))
        throw std::invalid_argument("carleson_integral: refinement >= 4096 required");
    auto dist = [&E](double t) { return distance_to_set(t, E); };
    const auto& p = E.points;
    const std::size_t gaps = p.size();
    int q = std::max(2, int(double(refinement) / (double(2 * gaps) * 41.0)));
    double total = 0.0;
    for (std::size_t i = 0; i < gaps; ++i) {
        double a = p[i];
        double b = (i + 1 < gaps) ? p[i + 1] : p[0] + kTwoPi;
        if (gaps == 1) b = a + kTwoPi;
        double mid = 0.5 * (a + b);
        total += graded_side(a, mid, q, dist);
        total += graded_side(b, mid, q, dist);
    }
    return total;
}

double carleson_integral_fattened(const BoundaryPointSet& E, double total_arc_length,
                                  int refinement) {
    if (E.empty()) throw std::invalid_argument("carleson_integral_fattened: empty E");
    if (refinement < (1 << 12))
        throw std::invalid_argument("carleson_integral_fattened: refinement >= 4096 required");
    if (total_arc_length < 0.0 || total_arc_length >= kTwoPi)
        throw std::invalid_argument("carleson_integral_fattened: bad arc length");
    const double half = 0.5 * total_arc_length / double(E.points.size());
    // distance to the union of closed arcs [p - half, p + half]
    auto dist = [&](double t) {
        double best = 2.0;
        for (double p : E.points) {
            double rel = reduce_angle(t - p);
            if (rel > M_PI) rel -= kTwoPi;  // rel in (-pi, pi]
            if (std::abs(rel) <= half) return 0.0;
            double d = std::min(chordal_distance(t, p - half), chordal_distance(t, p + half));
            best = std::min(best, d);
        }
        return best;
    };
    const auto& p = E.points;
    const std::size_t gaps = p.size();
    int q = std::max(2, int(double(refinement) / (double(2 * gaps) * 41.0)));
    double total = 0.0;
    long zero_nodes = 0, nodes = 0;
    const auto& base = gl_cached(q);
    for (std::size_t i = 0; i < gaps; ++i) {
        double a = p[i] + half;
        double b = ((i + 1 < gaps) ? p[i + 1] : p[0] + kTwoPi) - half;
        if (gaps == 1) b = p[0] + kTwoPi - half;
        if (b <= a) {
            zero_nodes += 2 * q;
            nodes += 2 * q;
            continue;
        }
        double mid = 0.5 * (a + b);
        total += graded_side(a, mid, q, dist);
        total += graded_side(b, mid, q, dist);
        nodes += 2 * 41 * q;
        // sample the fattened arcs themselves: d = 0 there
        double mid2 = p[i];
        double hw = half;
        for (int k = 0; k < q; ++k) {
            double t = mid2 + hw * base.first[std::size_t(k)];
            ++nodes;
            if (dist(t) == 0.0) ++zero_nodes;
        }
    }
    if (half > 0.0 && double(zero_nodes) > 8.0 / double(refinement) * double(nodes))
        return std::numeric_limits<double>::infinity();
    return total;
}

}  // namespace disc
