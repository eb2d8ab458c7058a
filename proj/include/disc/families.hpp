#pragma once

#include <string>

#include "disc/function.hpp"

namespace disc {

// Built-in test functions on an n-point grid:
//   canonical          ((1-z)/2)^0.6 as its discrete outer representative
//   canonical_samples  the same function from exact boundary samples
//   two_zeros          ((1-z^2)/4)^0.6 as an outer representative
//   two_zeros_samples  the same from exact samples
//   affine             2 + z (outer, no boundary zeros)
//   z_times_affine     z (2 + z) (inner factor z times an outer part)
DiscFunction make_test_function(const std::string& family, int n, double lambda = 30.0);

std::vector<std::string> test_function_families();

}  // namespace disc
