#include "hforge/generate.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <stdexcept>

#include "hforge/canon.hpp"
#include "hforge/hadamard.hpp"

namespace hforge {

namespace {

// row as a bitmask: column j lives at bit n-1-j, so integer order is the
// lexicographic order with +1 > -1 read left to right
SignMatrix to_matrix(const std::vector<std::uint32_t>& rows, int n) {
    SignMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.set(i, j, (rows[i] >> (n - 1 - j)) & 1 ? 1 : -1);
    return M;
}

struct Generator {
    int n;
    std::vector<std::uint32_t> fixed;   // the 3 normal-form rows
    std::vector<std::uint32_t> chosen;
    std::uint32_t cells0 = 0;           // internal-pair mask of the 4 column blocks
    std::vector<std::vector<std::uint32_t>> leaves;

    explicit Generator(int n_) : n(n_) {
        std::uint32_t all = n == 32 ? 0xffffffffu : (1u << n) - 1;
        std::uint32_t half = all & ~((1u << (n / 2)) - 1);            // left half +
        std::uint32_t quart = 0;
        for (int j = 0; j < n; ++j)
            if (j % (n / 2) < n / 4) quart |= 1u << (n - 1 - j);      // alternating quarters
        fixed = {all, half, quart};
        // bit q set <=> columns at bit positions q+1 and q are in one block
        for (int q = 0; q + 1 < n; ++q)
            if (q / (n / 4) == (q + 1) / (n / 4)) cells0 |= 1u << q;
    }

    // Columns may be permuted freely inside a cell (a run of columns equal in
    // every placed row), so the lex-largest representative has each new row
    // nonincreasing there: once a -1 appears, no +1 may follow.
    static bool monotone(std::uint32_t x, std::uint32_t cells) {
        return ((~(x >> 1)) & x & cells) == 0;
    }
    static std::uint32_t refine(std::uint32_t x, std::uint32_t cells) {
        return cells & ~(x ^ (x >> 1));
    }

    bool orthogonal(std::uint32_t a, std::uint32_t b) const {
        return std::popcount(a ^ b) * 2 == n;
    }

    // all rows with leading +1, orthogonal to the three fixed rows,
    // in decreasing order
    std::vector<std::uint32_t> initial_candidates() const {
        std::vector<std::uint32_t> out;
        std::uint32_t lead = 1u << (n - 1);
        for (std::uint32_t m = (n == 32 ? 0x7fffffffu : (1u << (n - 1)) - 1);; --m) {
            std::uint32_t x = lead | m;
            if (std::popcount(x) * 2 == n && orthogonal(x, fixed[1]) && orthogonal(x, fixed[2]))
                out.push_back(x);
            if (m == 0) break;
        }
        return out;
    }

    void leaf() {
        std::vector<std::uint32_t> rows = fixed;
        rows.insert(rows.end(), chosen.begin(), chosen.end());
        leaves.push_back(std::move(rows));
    }

    // candidates are sorted decreasing; rows 3..n-1 are chosen strictly
    // decreasing (row permutation symmetry), pairwise orthogonal, and
    // nonincreasing within the current column cells
    void rec(int level, const std::vector<std::uint32_t>& cands, std::uint32_t cells) {
        if (level == n) {
            leaf();
            return;
        }
        int needed = n - level - 1;
        for (std::size_t i = 0; i + needed < cands.size() + 0u; ++i) {
            if (!monotone(cands[i], cells)) continue;
            std::vector<std::uint32_t> next;
            next.reserve(cands.size() - i - 1);
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (orthogonal(cands[i], cands[j])) next.push_back(cands[j]);
            if (static_cast<int>(next.size()) < needed) continue;
            chosen.push_back(cands[i]);
            rec(level + 1, next, refine(cands[i], cells));
            chosen.pop_back();
        }
    }
};

} // namespace

std::vector<SignMatrix> hadamard_classes(int n, int threads) {
    if (n == 1 || n == 2 || (n >= 4 && n % 4 == 0 && n <= 32)) {
        // fall through
    } else {
        throw std::invalid_argument("order must be 1, 2 or a multiple of 4 up to 32");
    }
    if (n <= 2) {
        SignMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.set(i, j, i == 1 && j == 1 ? -1 : 1);
        return {M};
    }

    Generator base(n);
    base.rec(3, base.initial_candidates(), base.cells0);

    // the search itself is cheap; the certificates dominate, so they are
    // computed in parallel across leaves and merged in leaf order
    std::vector<std::vector<std::uint8_t>> certs(base.leaves.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < base.leaves.size();)
            certs[i] = hadamard_certificate(to_matrix(base.leaves[i], n)).form;
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    std::map<std::vector<std::uint8_t>, SignMatrix> classes;
    for (size_t i = 0; i < base.leaves.size(); ++i)
        classes.emplace(std::move(certs[i]), to_matrix(base.leaves[i], n));

    std::vector<SignMatrix> out;
    for (auto& [k, v] : classes) out.push_back(std::move(v));
    return out;
}

} // namespace hforge
