#pragma once

#include <cstddef>
#include <vector>

#include "hforge/bitrow.hpp"

namespace hforge {

// Dense matrix over {+1, -1}, one BitRow per row (bit set <=> +1).
// There is no representable zero state.
class SignMatrix {
public:
    SignMatrix() = default;
    SignMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitRow(cols)) {}

    std::size_t n_rows() const { return rows_; }
    std::size_t n_cols() const { return cols_; }

    int get(std::size_t i, std::size_t j) const { return r_[i].get(j) ? +1 : -1; }
    void set(std::size_t i, std::size_t j, int v) { r_[i].set(j, v > 0); }

    const BitRow& row(std::size_t i) const { return r_[i]; }

    // Inner product of rows i and j: agreements minus disagreements.
    long row_dot(std::size_t i, std::size_t j) const {
        return static_cast<long>(cols_) - 2 * static_cast<long>(r_[i].count_xor(r_[j]));
    }

    long row_sum(std::size_t i) const {
        return 2 * static_cast<long>(r_[i].count()) - static_cast<long>(cols_);
    }

    long col_sum(std::size_t j) const {
        long s = 0;
        for (std::size_t i = 0; i < rows_; ++i) s += get(i, j);
        return s;
    }

    void negate_row(std::size_t i) { r_[i].flip_all(); }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) r_[i].set(j, !r_[i].get(j));
    }

    SignMatrix transposed() const {
        SignMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (r_[i].get(j)) t.r_[j].set(i, true);
        return t;
    }

    bool operator==(const SignMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitRow> r_;
};

} // namespace hforge
