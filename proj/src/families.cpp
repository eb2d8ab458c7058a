#include "disc/families.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace disc {

namespace {

std::vector<cdouble> sample(int n, const std::function<cdouble(cdouble)>& fn) {
    std::vector<cdouble> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out[std::size_t(j)] = fn(std::polar(1.0, 2.0 * M_PI * double(j) / double(n)));
    return out;
}

cdouble cpow(cdouble w, double p) {
    if (w == cdouble(0.0, 0.0)) return cdouble(0.0, 0.0);
    return std::exp(p * std::log(w));
}

}  // namespace

DiscFunction make_test_function(const std::string& family, int n, double lambda) {
    if (family == "canonical" || family == "canonical_samples") {
        auto s = sample(n, [](cdouble z) { return cpow((1.0 - z) / 2.0, 0.6); });
        if (family == "canonical_samples") return DiscFunction::from_samples(std::move(s), lambda);
        return outer_from_modulus(LogModulus::from_samples(s, lambda));
    }
    if (family == "two_zeros" || family == "two_zeros_samples") {
        auto s = sample(n, [](cdouble z) { return cpow((1.0 - z * z) / 4.0, 0.6); });
        if (family == "two_zeros_samples") return DiscFunction::from_samples(std::move(s), lambda);
        return outer_from_modulus(LogModulus::from_samples(s, lambda));
    }
    if (family == "affine") {
        auto s = sample(n, [](cdouble z) { return 2.0 + z; });
        return outer_from_modulus(LogModulus::from_samples(s, lambda));
    }
    if (family == "z_times_affine") {
        auto s = sample(n, [](cdouble z) { return z * (2.0 + z); });
        return DiscFunction::from_samples(std::move(s), lambda);
    }
    throw std::invalid_argument("make_test_function: unknown family '" + family + "'");
}

std::vector<std::string> test_function_families() {
    return {"canonical", "canonical_samples", "two_zeros", "two_zeros_samples", "affine",
            "z_times_affine"};
}

}  // namespace disc
