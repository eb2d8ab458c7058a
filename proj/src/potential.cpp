#include "disc/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace disc {

namespace {

// circular correlation c_l = (1/n) sum_j w_j row(theta_{j-l}):
// reverse the row (with wrap) and convolve via FFT.
std::vector<cdouble> correlate(const std::vector<cdouble>& spec_w, std::vector<cdouble> row) {
    const std::size_t n = row.size();
    std::vector<cdouble> rev(n);
    rev[0] = row[0];
    for (std::size_t k = 1; k < n; ++k) rev[k] = row[n - k];
    fft_inplace(rev, false);
    for (std::size_t k = 0; k < n; ++k) rev[k] *= spec_w[k];
    fft_inplace(rev, true);
    return rev;
}

}  // namespace

HerglotzPotential::HerglotzPotential(std::vector<double> data) : n_(int(data.size())) {
    if (!is_power_of_two(data.size()) || n_ < 16)
        throw std::invalid_argument("HerglotzPotential: size must be a power of two >= 16");
    for (double v : data)
        if (!std::isfinite(v)) throw std::invalid_argument("HerglotzPotential: non-finite datum");
    data_ = std::move(data);
    std::vector<cdouble> tmp(data_.begin(), data_.end());
    fft_inplace(tmp, false);
    spec_ = std::move(tmp);
    // keep DFT(w) itself; divide by n where used
}

cdouble HerglotzPotential::eval(cdouble z) const {
    cdouble acc(0.0, 0.0);
    for (int j = 0; j < n_; ++j) {
        if (data_[std::size_t(j)] == 0.0) continue;
        cdouble e = std::polar(1.0, 2.0 * M_PI * double(j) / double(n_));
        acc += data_[std::size_t(j)] * (e + z) / (e - z);
    }
    return acc / double(n_);
}

cdouble HerglotzPotential::g_eval(cdouble z) const {
    cdouble acc(0.0, 0.0);
    for (int j = 0; j < n_; ++j) {
        if (data_[std::size_t(j)] == 0.0) continue;
        cdouble e = std::polar(1.0, 2.0 * M_PI * double(j) / double(n_));
        cdouble d = e - z;
        acc += data_[std::size_t(j)] * e / (d * d);
    }
    return acc * (2.0 / double(n_));
}

std::vector<cdouble> HerglotzPotential::series() const {
    const int K = n_ / 2;
    std::vector<cdouble> s(std::size_t(K + 1));
    const double inv = 1.0 / double(n_);
    s[0] = spec_[0] * inv;
    for (int k = 1; k < K; ++k) s[std::size_t(k)] = 2.0 * spec_[std::size_t(k)] * inv;
    s[std::size_t(K)] = spec_[std::size_t(K)] * inv;
    return s;
}

std::vector<cdouble> HerglotzPotential::boundary() const {
    // analytic-signal completion; then overwrite the real part with the
    // exact datum so |exp(h)| = exp(w) on nodes
    std::vector<cdouble> h(std::size_t(n_), cdouble(0, 0));
    h[0] = spec_[0];
    for (int k = 1; k < n_ / 2; ++k) h[std::size_t(k)] = 2.0 * spec_[std::size_t(k)];
    h[std::size_t(n_ / 2)] = spec_[std::size_t(n_ / 2)];
    fft_inplace(h, true);
    for (int j = 0; j < n_; ++j)
        h[std::size_t(j)] = cdouble(data_[std::size_t(j)], h[std::size_t(j)].imag());
    return h;
}

std::vector<cdouble> HerglotzPotential::eval_circle(double r) const {
    std::vector<cdouble> row(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        cdouble e = std::polar(1.0, 2.0 * M_PI * double(j) / double(n_));
        row[std::size_t(j)] = (e + r) / (e - r);
    }
    auto out = correlate(spec_, std::move(row));
    for (auto& v : out) v /= double(n_);
    return out;
}

std::vector<cdouble> HerglotzPotential::g_circle(double r) const {
    std::vector<cdouble> row(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        cdouble e = std::polar(1.0, 2.0 * M_PI * double(j) / double(n_));
        cdouble d = e - r;
        row[std::size_t(j)] = 2.0 * e / (d * d);
    }
    auto out = correlate(spec_, std::move(row));
    for (int l = 0; l < n_; ++l)
        out[std::size_t(l)] *= std::polar(1.0 / double(n_), -2.0 * M_PI * double(l) / double(n_));
    return out;
}

std::vector<double> HerglotzPotential::quadratic_kernel_circle(const std::vector<double>& m,
                                                               double r) {
    const std::size_t n = m.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("quadratic_kernel_circle: bad size");
    std::vector<cdouble> row(n), spec(m.begin(), m.end());
    for (std::size_t j = 0; j < n; ++j) {
        double c = std::cos(2.0 * M_PI * double(j) / double(n));
        row[j] = 1.0 / (1.0 - 2.0 * r * c + r * r);
    }
    fft_inplace(spec, false);
    auto out = correlate(spec, std::move(row));
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) res[j] = out[j].real() / double(n);
    return res;
}

std::vector<double> scaled(const std::vector<double>& w, double s) {
    std::vector<double> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] * s;
    return out;
}

std::vector<double> masked(const std::vector<double>& w, const std::vector<std::uint8_t>& mask) {
    if (w.size() != mask.size()) throw std::invalid_argument("masked: size mismatch");
    std::vector<double> out(w.size(), 0.0);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (mask[i]) out[i] = w[i];
    return out;
}

std::vector<double> added(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("added: size mismatch");
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace disc
