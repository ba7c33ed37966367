#pragma once

#include <optional>
#include <vector>

#include "hforge/design.hpp"
#include "hforge/incidence_matrix.hpp"
#include "hforge/sign_matrix.hpp"

namespace hforge {

struct not_hadamard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RegularityReport {
    bool is_regular = false;
    std::optional<long> row_sum;
    std::optional<long> col_sum;
};

// True iff M is square and all distinct rows are orthogonal (HH^t = nI).
bool is_hadamard(const SignMatrix& M);

// True iff M + M^t = 2I. Throws not_hadamard on a non-Hadamard input.
bool is_skew(const SignMatrix& M);

// Column negations making the first row all +1, then row negations making
// the first column all +1.
SignMatrix normalize(const SignMatrix& M);

// Constant row/column sum check for a square sign matrix.
RegularityReport regularity(const SignMatrix& M);

// Normalized M with first row and column deleted, -1 mapped to 0:
// a symmetric 2-(4a-1, 2a-1, a-1) design. Requires order 4a >= 8.
IncidenceMatrix hadamard_to_2design(const SignMatrix& M);

// Inverse construction: all-ones first row/column prepended, 0 -> -1.
// D must verify as a symmetric 2-(4a-1, 2a-1, a-1) design.
SignMatrix design2_to_hadamard(const IncidenceMatrix& D);

// One candidate 3-(4a, 2a, a-1) incidence matrix per fixed row: points are
// the n columns of M; every row s != fixed contributes the block of columns
// agreeing with the fixed row, followed (as blocks n-1..2n-3) by all the
// complements. Requires order >= 4; candidates verify the 3-design axioms
// for orders >= 8 (at order 4 lambda degenerates to 0).
std::vector<IncidenceMatrix> hadamard_to_3designs(const SignMatrix& M);

// Single-candidate variant, fixing row `fixed`.
IncidenceMatrix hadamard_to_3design(const SignMatrix& M, std::size_t fixed);

} // namespace hforge
