#pragma once

#include <cstddef>
#include <vector>

#include "hforge/bitrow.hpp"

namespace hforge {

// Dense 0/1 point-block incidence matrix. Rows are points, columns blocks.
class IncidenceMatrix {
public:
    IncidenceMatrix() = default;
    IncidenceMatrix(std::size_t points, std::size_t blocks)
        : v_(points), b_(blocks), r_(points, BitRow(blocks)) {}

    std::size_t v() const { return v_; }
    std::size_t b() const { return b_; }

    bool get(std::size_t p, std::size_t blk) const { return r_[p].get(blk); }
    void set(std::size_t p, std::size_t blk, bool x) { r_[p].set(blk, x); }

    const BitRow& row(std::size_t p) const { return r_[p]; }

    std::size_t row_sum(std::size_t p) const { return r_[p].count(); }

    std::size_t col_sum(std::size_t blk) const {
        std::size_t s = 0;
        for (std::size_t p = 0; p < v_; ++p) s += r_[p].get(blk);
        return s;
    }

    // Number of blocks containing both points.
    std::size_t pair_product(std::size_t p, std::size_t q) const {
        return r_[p].count_and(r_[q]);
    }

    std::size_t triple_product(std::size_t p, std::size_t q, std::size_t s) const {
        return r_[p].count_and3(r_[q], r_[s]);
    }

    bool operator==(const IncidenceMatrix& o) const = default;
    auto operator<=>(const IncidenceMatrix& o) const = default;

private:
    std::size_t v_ = 0, b_ = 0;
    std::vector<BitRow> r_;
};

} // namespace hforge
