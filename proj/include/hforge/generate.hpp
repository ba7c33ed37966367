#pragma once

#include <vector>

#include "hforge/sign_matrix.hpp"

namespace hforge {

// Exhaustive classification of Hadamard matrices of order n (n == 1, 2 or a
// multiple of 4, n <= 32): backtracking over rows in a 3-row normal form,
// deduplicated by canonical certificate. Returns one representative per
// equivalence class, in deterministic order.
std::vector<SignMatrix> hadamard_classes(int n, int threads = 1);

} // namespace hforge
