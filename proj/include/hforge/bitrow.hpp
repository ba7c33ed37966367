#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hforge {

// Fixed-width packed bit vector used as a matrix row. Tail bits past
// size() are kept zero so word-wise popcounts need no masking.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        if (v)
            w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    std::size_t count_xor(const BitRow& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] ^ o.w_[k]);
        return c;
    }

    std::size_t count_and(const BitRow& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    std::size_t count_and3(const BitRow& a, const BitRow& b) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k)
            c += std::popcount(w_[k] & a.w_[k] & b.w_[k]);
        return c;
    }

    // Flip every bit, keeping tail bits zero.
    void flip_all() {
        if (n_ == 0) return;
        for (auto& w : w_) w = ~w;
        std::size_t tail = n_ & 63;
        if (tail) w_.back() &= (std::uint64_t(1) << tail) - 1;
    }

    bool operator==(const BitRow& o) const = default;
    auto operator<=>(const BitRow& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace hforge
