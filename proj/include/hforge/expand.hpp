#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hforge/design.hpp"
#include "hforge/incidence_matrix.hpp"
#include "hforge/tdm.hpp"

namespace hforge {

enum class ExpandMode { Cyc, ACyc };

struct infeasible_cell : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0/1 blocks that may replace one TDM cell; every block has constant row
// sum rho and constant column sum rho*rows/cols.
struct BlockAlphabet {
    int rows = 0;
    int cols = 0;
    int rho = 0;
    ExpandMode mode = ExpandMode::Cyc;
    // bit r*cols + c set <=> entry 1
    std::vector<std::uint16_t> blocks;
};

// throws infeasible_cell when no block exists
BlockAlphabet substitution_alphabet(int rows, int cols, int rho, ExpandMode mode);

// return false to stop the expansion early
using DesignSink = std::function<bool(const IncidenceMatrix&)>;

// Exhaustively substitutes alphabet blocks into the cells of T and streams
// every resulting incidence matrix that satisfies the design axioms.
// Returns the number of matrices emitted. Deterministic emission order when
// threads == 1; with more threads emissions may interleave.
std::uint64_t expand_tdm(const TacticalDecompositionMatrix& T, const DesignParams& p,
                         ExpandMode mode, const DesignSink& sink, int threads = 1);

// true iff cyclically shifting every length-3 point and block class
// (i -> i+1 mod 3, fixed classes pointwise) maps D to itself
bool has_order3_automorphism(const IncidenceMatrix& D, const OrbitProfile& profile);

// cell-wise incidence counts if the partition is tactical, nullopt otherwise
std::optional<TacticalDecompositionMatrix> collapse_to_tdm(const IncidenceMatrix& D,
                                                           const OrbitProfile& profile);

} // namespace hforge
