#pragma once

#include <complex>
#include <vector>

namespace disc {

using cdouble = std::complex<double>;

bool is_power_of_two(std::size_t n);

// In-place radix-2 transform; n must be a power of two.
// inverse=true applies the 1/n normalization.
void fft_inplace(std::vector<cdouble>& a, bool inverse);

std::vector<cdouble> fft(std::vector<cdouble> a);
std::vector<cdouble> ifft(std::vector<cdouble> a);

}  // namespace disc
