#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/sign_matrix.hpp"

namespace hforge {

enum class RegularVerdict { Regular, None, Timeout };

struct RegularizeResult {
    RegularVerdict verdict = RegularVerdict::None;
    std::optional<SignMatrix> matrix; // set iff verdict == Regular
    long row_sum = 0;                 // the common line sum s of the returned matrix
};

// Complete search for an equivalent matrix with constant row and column
// sums (necessarily +/-sqrt(n); the positive sign is preferred and always
// reachable by global negation). Only sign vectors are searched: line sums
// are permutation-invariant. timeout_ms = 0 means no limit.
// Throws not_hadamard if M is not a Hadamard matrix.
RegularizeResult regularize(const SignMatrix& M, std::uint64_t timeout_ms = 0);

struct BatchVerdict {
    std::size_t index = 0;
    std::string verdict; // "regular" | "none" | "timeout" | "error"
    long s = 0;          // common line sum when regular
    std::string error;   // message when verdict == "error"
};

// One verdict per input matrix; a broken entry is recorded and the batch
// continues.
std::vector<BatchVerdict> regularize_batch(const std::vector<SignMatrix>& in,
                                           std::uint64_t timeout_ms = 0);

} // namespace hforge
