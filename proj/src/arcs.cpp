#include "disc/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disc {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kMaxArcLength = 0.5;
}  // namespace

double reduce_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

double Arc::end() const { return reduce_angle(start + length); }

bool Arc::contains(double theta) const {
    double rel = reduce_angle(theta - start);
    return rel > 0.0 && rel < length;
}

bool Arc::contains_halfopen(double theta) const {
    double rel = reduce_angle(theta - start);
    return rel < length;
}

double ArcSet::total_measure() const {
    double s = 0.0;
    for (const auto& a : arcs) s += a.length;
    return s;
}

BoundaryPointSet BoundaryPointSet::from_angles(std::vector<double> angles) {
    for (auto& t : angles) t = reduce_angle(t);
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 1; i < angles.size(); ++i)
        if (angles[i] - angles[i - 1] < 1e-14)
            throw std::invalid_argument("BoundaryPointSet: points must be distinct mod 2*pi");
    if (angles.size() >= 2 && (angles.front() + kTwoPi - angles.back()) < 1e-14)
        throw std::invalid_argument("BoundaryPointSet: points must be distinct mod 2*pi");
    BoundaryPointSet s;
    s.points = std::move(angles);
    return s;
}

double chordal_distance(double t1, double t2) {
    return 2.0 * std::abs(std::sin(0.5 * (t1 - t2)));
}

double distance_to_set(double theta, const BoundaryPointSet& E) {
    if (E.empty()) throw std::invalid_argument("distance_to_set: empty set");
    double d = 2.0;
    for (double p : E.points) d = std::min(d, chordal_distance(theta, p));
    return d;
}

double distance_to_endpoints(cdouble z, const Arc& gamma) {
    cdouble a = std::polar(1.0, gamma.start);
    cdouble b = std::polar(1.0, gamma.start + gamma.length);
    return std::min(std::abs(z - a), std::abs(z - b));
}

void validate_disjoint(const ArcSet& s) {
    if (s.arcs.size() < 2) return;
    std::vector<std::pair<double, double>> iv;  // (start, end) unrolled
    for (const auto& a : s.arcs) {
        if (a.length <= 0.0 || a.length > kTwoPi)
            throw std::invalid_argument("ArcSet: arc length out of range");
        iv.emplace_back(reduce_angle(a.start), reduce_angle(a.start) + a.length);
    }
    std::sort(iv.begin(), iv.end());
    for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i].first < iv[i - 1].second - 1e-14)
            throw std::invalid_argument("ArcSet: arcs overlap");
    // wrap check: last arc against first
    if (iv.back().second - kTwoPi > iv.front().first + 1e-14)
        throw std::invalid_argument("ArcSet: arcs overlap (wrap)");
}

ArcSet normalize_arcset(const ArcSet& s) {
    validate_disjoint(s);
    ArcSet out;
    for (const auto& a : s.arcs) {
        int k = int(std::floor(a.length / kMaxArcLength)) + 1;
        double piece = a.length / double(k);
        for (int i = 0; i < k; ++i)
            out.arcs.push_back({reduce_angle(a.start + piece * double(i)), piece});
    }
    return out;
}

ArcSet complement_arcs(const BoundaryPointSet& E) {
    if (E.empty()) throw std::invalid_argument("complement_arcs: empty point set");
    ArcSet raw;
    const auto& p = E.points;
    if (p.size() == 1) {
        raw.arcs.push_back({p[0], kTwoPi});
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            double a = p[i];
            double b = (i + 1 < p.size()) ? p[i + 1] : p[0] + kTwoPi;
            raw.arcs.push_back({a, b - a});
        }
    }
    return normalize_arcset(raw);
}

ArcSet tail_arcs(const ArcSet& s, std::size_t n) {
    ArcSet out;
    if (n >= s.arcs.size()) return out;
    out.arcs.assign(s.arcs.begin() + std::ptrdiff_t(n), s.arcs.end());
    return out;
}

std::vector<std::uint8_t> node_mask(int n, const ArcSet& s) {
    std::vector<std::uint8_t> m(std::size_t(n), 0);
    for (const auto& a : s.arcs) {
        // node j in [start, start+length): j from ceil(start/h) upward
        const double h = kTwoPi / double(n);
        double st = reduce_angle(a.start);
        long j0 = long(std::ceil(st / h - 1e-12));
        long count = long(std::ceil((st + a.length) / h - 1e-12)) - j0;
        for (long k = 0; k < count; ++k) {
            long j = (j0 + k) % n;
            if (j < 0) j += n;
            m[std::size_t(j)] = 1;
        }
    }
    return m;
}

std::vector<std::uint8_t> mask_complement(std::vector<std::uint8_t> m) {
    for (auto& v : m) v = v ? 0 : 1;
    return m;
}

ArcSet graded_complement(const BoundaryPointSet& E, int n, int min_cells) {
    if (E.empty()) throw std::invalid_argument("graded_complement: empty point set");
    const double h = kTwoPi / double(n);
    const double min_len = double(min_cells) * h;
    // raw complement arcs (no length normalization here)
    std::vector<Arc> raw;
    const auto& p = E.points;
    if (p.size() == 1) {
        raw.push_back({p[0], kTwoPi});
    } else {
        for (std::size_t i = 0; i < p.size(); ++i) {
            double a = p[i];
            double b = (i + 1 < p.size()) ? p[i + 1] : p[0] + kTwoPi;
            raw.push_back({a, b - a});
        }
    }
    struct Piece {
        Arc arc;
        int level;
        int side;
    };
    std::vector<Piece> pieces;
    for (const auto& r : raw) {
        const double half = r.length / 2.0;
        int levels = std::max(1, int(std::floor(std::log2(half / min_len))));
        for (int j = 0; j < levels; ++j) {
            double len = half * std::pow(2.0, -(j + 1));
            pieces.push_back({{reduce_angle(r.start + len), len}, j, 0});
            pieces.push_back({{reduce_angle(r.start + r.length - 2.0 * len), len}, j, 1});
        }
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.level != b.level) return a.level < b.level;
        return a.side < b.side;
    });
    ArcSet out;
    for (const auto& q : pieces) out.arcs.push_back(q.arc);
    return out;
}

}  // namespace disc
