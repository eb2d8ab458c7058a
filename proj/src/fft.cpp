#include "disc/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace disc {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// Twiddle tables per size, built once. Guarded for concurrent first use.
const std::vector<cdouble>& twiddles(std::size_t n) {
    static std::map<std::size_t, std::vector<cdouble>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cdouble> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        double ang = -2.0 * M_PI * double(k) / double(n);
        w[k] = cdouble(std::cos(ang), std::sin(ang));
    }
    return cache.emplace(n, std::move(w)).first->second;
}

}  // namespace

void fft_inplace(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
    if (n == 1) return;
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& w = twiddles(n);
    if (inverse)
        for (auto& v : a) v = std::conj(v);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cdouble u = a[i + k];
                cdouble v = a[i + k + len / 2] * w[k * step];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / double(n);
        for (auto& v : a) v = std::conj(v) * s;
    }
}

std::vector<cdouble> fft(std::vector<cdouble> a) {
    fft_inplace(a, false);
    return a;
}

std::vector<cdouble> ifft(std::vector<cdouble> a) {
    fft_inplace(a, true);
    return a;
}

}  // namespace disc
