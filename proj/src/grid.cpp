#include "disc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disc {

BoundaryGrid make_grid(int n) {
    if (n < 16 || !is_power_of_two(std::size_t(n)))
        throw std::invalid_argument("make_grid: n must be a power of two >= 16");
    BoundaryGrid g;
    g.n = n;
    g.values.assign(std::size_t(n), cdouble(0.0, 0.0));
    return g;
}

double TaylorCoefficients::tail_ratio() const {
    if (coeffs.empty()) return 0.0;
    double mx = 0.0;
    for (const auto& a : coeffs) mx = std::max(mx, std::abs(a));
    if (mx == 0.0) return 0.0;
    return std::abs(coeffs.back()) / mx;
}

TaylorCoefficients analyze(const BoundaryGrid& b) {
    const int n = b.n;
    if (n < 16 || b.values.size() != std::size_t(n))
        throw std::invalid_argument("analyze: invalid grid");
    for (const auto& v : b.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("analyze: non-finite sample");
    std::vector<cdouble> c = fft(b.values);
    const double s = 1.0 / double(n);
    TaylorCoefficients out;
    out.coeffs.resize(std::size_t(n / 2 + 1));
    for (int j = 0; j <= n / 2; ++j) out.coeffs[std::size_t(j)] = c[std::size_t(j)] * s;
    double defect = 0.0;
    for (int j = n / 2 + 1; j < n; ++j) defect += std::norm(c[std::size_t(j)] * s);
    out.analyticity_defect = defect;
    return out;
}

cdouble horner(const std::vector<cdouble>& coeffs, cdouble z) {
    cdouble r(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * z + *it;
    return r;
}

cdouble synthesize(const TaylorCoefficients& c, cdouble z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::invalid_argument("synthesize: |z| > 1");
    return horner(c.coeffs, z);
}

std::vector<cdouble> synthesize_circle(const std::vector<cdouble>& coeffs, double r, int n) {
    std::vector<cdouble> full(std::size_t(n), cdouble(0.0, 0.0));
    const std::size_t K = std::min(coeffs.size(), std::size_t(n));
    double rk = 1.0;
    for (std::size_t k = 0; k < K; ++k) {
        full[k] = coeffs[k] * rk;
        rk *= r;
    }
    fft_inplace(full, true);
    for (auto& v : full) v *= double(n);
    return full;
}

std::vector<cdouble> derivative(const std::vector<cdouble>& coeffs) {
    if (coeffs.size() <= 1) return {};
    std::vector<cdouble> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * double(k);
    return d;
}

std::vector<cdouble> cauchy_product(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    const std::size_t K = std::max(a.size(), b.size());
    if (a.empty() || b.empty()) return std::vector<cdouble>(K, cdouble(0.0, 0.0));
    // FFT convolution, truncated to K terms.
    std::size_t m = 1;
    while (m < 2 * K) m <<= 1;
    std::vector<cdouble> fa(m, cdouble(0, 0)), fb(m, cdouble(0, 0));
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft_inplace(fa, false);
    fft_inplace(fb, false);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fb[i];
    fft_inplace(fa, true);
    fa.resize(K);
    return fa;
}

std::vector<cdouble> exp_series(const std::vector<cdouble>& h) {
    const std::size_t K = h.size();
    std::vector<cdouble> b(K, cdouble(0.0, 0.0));
    if (K == 0) return b;
    b[0] = std::exp(h[0]);
    // b_m = (1/m) sum_{k=1..m} k h_k b_{m-k}
    std::vector<cdouble> kh(K);
    for (std::size_t k = 0; k < K; ++k) kh[k] = h[k] * double(k);
    for (std::size_t m = 1; m < K; ++m) {
        cdouble acc(0.0, 0.0);
        for (std::size_t k = 1; k <= m; ++k) acc += kh[k] * b[m - k];
        b[m] = acc / double(m);
    }
    return b;
}

}  // namespace disc
