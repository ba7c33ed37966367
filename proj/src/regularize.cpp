#include "hforge/regularize.hpp"

#include <chrono>
#include <cmath>

#include "hforge/hadamard.hpp"

namespace hforge {

namespace {

struct Search {
    const SignMatrix& M;
    int n, s;
    std::vector<int> col_sign;  // +1/-1 per assigned column
    std::vector<int> row_part;  // partial row sums under assigned columns
    std::uint64_t deadline_ms;  // 0 = none
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::uint64_t nodes = 0;
    bool timed_out = false;

    Search(const SignMatrix& m, int s_, std::uint64_t timeout_ms)
        : M(m), n(static_cast<int>(m.n_rows())), s(s_), col_sign(n, 0), row_part(n, 0),
          deadline_ms(timeout_ms) {}

    bool out_of_time() {
        if (deadline_ms == 0) return false;
        if ((++nodes & 0x3ff) != 0) return false;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (static_cast<std::uint64_t>(ms) >= deadline_ms) timed_out = true;
        return timed_out;
    }

    // every row's partial sum must still be able to reach magnitude s
    bool feasible(int assigned) const {
        int rem = n - assigned;
        for (int i = 0; i < n; ++i)
            if (std::abs(row_part[i]) > s + rem) return false;
        return true;
    }

    std::optional<SignMatrix> leaf() const {
        for (int i = 0; i < n; ++i)
            if (std::abs(row_part[i]) != s) return std::nullopt;
        // force row signs so each row sums to +s, then the column sums decide
        std::vector<int> row_sign(n);
        for (int i = 0; i < n; ++i) row_sign[i] = row_part[i] > 0 ? 1 : -1;
        for (int j = 0; j < n; ++j) {
            int cs = 0;
            for (int i = 0; i < n; ++i)
                cs += row_sign[i] * col_sign[j] * (M.get(i, j));
            if (cs != s) return std::nullopt;
        }
        SignMatrix R = M;
        for (int i = 0; i < n; ++i)
            if (row_sign[i] < 0) R.negate_row(i);
        for (int j = 0; j < n; ++j)
            if (col_sign[j] < 0) R.negate_col(j);
        return R;
    }

    std::optional<SignMatrix> go(int j) {
        if (timed_out || out_of_time()) return std::nullopt;
        if (j == n) return leaf();
        // first column pinned to +1: global negation symmetry
        for (int sign : j == 0 ? std::vector<int>{1} : std::vector<int>{1, -1}) {
            col_sign[j] = sign;
            for (int i = 0; i < n; ++i) row_part[i] += sign * (M.get(i, j));
            if (feasible(j + 1)) {
                auto r = go(j + 1);
                if (r || timed_out) return r;
            }
            for (int i = 0; i < n; ++i) row_part[i] -= sign * (M.get(i, j));
        }
        col_sign[j] = 0;
        return std::nullopt;
    }
};

} // namespace

RegularizeResult regularize(const SignMatrix& M, std::uint64_t timeout_ms) {
    if (!is_hadamard(M)) throw not_hadamard("regularize requires a Hadamard matrix");
    int n = static_cast<int>(M.n_rows());
    int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (s * s != n) return {RegularVerdict::None, std::nullopt, 0};

    Search srch(M, s, timeout_ms);
    auto r = srch.go(0);
    if (srch.timed_out) return {RegularVerdict::Timeout, std::nullopt, 0};
    if (!r) return {RegularVerdict::None, std::nullopt, 0};
    return {RegularVerdict::Regular, std::move(r), s};
}

std::vector<BatchVerdict> regularize_batch(const std::vector<SignMatrix>& in,
                                           std::uint64_t timeout_ms) {
    std::vector<BatchVerdict> out;
    for (std::size_t i = 0; i < in.size(); ++i) {
        BatchVerdict v;
        v.index = i;
        try {
            auto r = regularize(in[i], timeout_ms);
            switch (r.verdict) {
                case RegularVerdict::Regular:
                    v.verdict = "regular";
                    v.s = r.row_sum;
                    break;
                case RegularVerdict::None: v.verdict = "none"; break;
                case RegularVerdict::Timeout: v.verdict = "timeout"; break;
            }
        } catch (const std::exception& e) {
            v.verdict = "error";
            v.error = e.what();
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace hforge
