#include "hforge/expand.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <mutex>

namespace hforge {

namespace {

std::uint16_t block_bits(int rows, int cols, const std::function<bool(int, int)>& f) {
    std::uint16_t b = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (f(r, c)) b |= static_cast<std::uint16_t>(1u << (r * cols + c));
    return b;
}

} // namespace

BlockAlphabet substitution_alphabet(int rows, int cols, int rho, ExpandMode mode) {
    if ((rows != 1 && rows != 3) || (cols != 1 && cols != 3))
        throw infeasible_cell("cell shape must be 1x1, 1x3, 3x1 or 3x3");
    BlockAlphabet a{rows, cols, rho, mode, {}};
    auto fail = [&] {
        throw infeasible_cell("no block with row sum " + std::to_string(rho) + " for " +
                              std::to_string(rows) + "x" + std::to_string(cols) + " cell");
    };
    if (rho < 0 || rho > cols) fail();
    // column sums must be the constant rho*rows/cols
    if ((rho * rows) % cols != 0) fail();

    if (rows == 1 && cols == 1) {
        a.blocks.push_back(rho ? 1 : 0);
    } else if (rows == 1) { // 1x3: constant column sums force all-0 or all-1
        if (rho == 0)
            a.blocks.push_back(0);
        else if (rho == 3)
            a.blocks.push_back(0b111);
        else
            fail();
    } else if (cols == 1) { // 3x1: each row carries rho in {0,1}
        if (rho == 0)
            a.blocks.push_back(0);
        else if (rho == 1)
            a.blocks.push_back(0b111);
        else
            fail();
    } else { // 3x3
        auto circ = [&](int s) {
            return block_bits(3, 3, [&](int r, int c) { return (r + s) % 3 == c; });
        };
        auto back = [&](int s) {
            return block_bits(3, 3, [&](int r, int c) { return (s - r + 3) % 3 == c; });
        };
        switch (rho) {
            case 0: a.blocks.push_back(0); break;
            case 3: a.blocks.push_back(0b111111111); break;
            case 1:
                for (int s = 0; s < 3; ++s) a.blocks.push_back(circ(s));
                if (mode == ExpandMode::ACyc)
                    for (int s = 0; s < 3; ++s) a.blocks.push_back(back(s));
                break;
            case 2:
                for (int s = 0; s < 3; ++s)
                    a.blocks.push_back(static_cast<std::uint16_t>(~circ(s) & 0b111111111));
                if (mode == ExpandMode::ACyc)
                    for (int s = 0; s < 3; ++s)
                        a.blocks.push_back(static_cast<std::uint16_t>(~back(s) & 0b111111111));
                break;
            default: fail();
        }
    }
    return a;
}

namespace {

struct Expander {
    const TacticalDecompositionMatrix& T;
    const DesignParams& p;
    int m, v;
    std::vector<int> start; // first point/block index of each class
    std::vector<std::vector<BlockAlphabet>> alpha; // [I][J]
    // per cell, exact overlap of two distinct rows inside one block is not
    // tracked; bounds per class pair and column class:
    // maxc[I][L][J], minc[I][L][J]; suffix sums over J
    std::vector<std::vector<std::vector<int>>> max_suf, min_suf;

    IncidenceMatrix D;
    std::vector<std::vector<int>> pp; // pairwise scalar products over filled columns

    const DesignSink& sink;
    std::uint64_t emitted = 0;
    std::atomic<bool>* stop = nullptr;
    std::mutex* emit_mutex = nullptr;

    Expander(const TacticalDecompositionMatrix& T_, const DesignParams& p_, ExpandMode mode,
             const DesignSink& sink_)
        : T(T_), p(p_), sink(sink_) {
        m = T.profile.classes();
        v = static_cast<int>(T.profile.v());
        start.resize(m + 1);
        for (int i = 0; i < m; ++i) start[i + 1] = start[i] + T.profile.class_size(i);
        alpha.assign(m, std::vector<BlockAlphabet>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                alpha[i][j] = substitution_alphabet(T.profile.class_size(i),
                                                    T.profile.class_size(j), T.rho[i][j], mode);

        max_suf.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(m + 1, 0)));
        min_suf = max_suf;
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b)
                for (int j = m - 1; j >= 0; --j) {
                    int w = T.profile.class_size(j);
                    int ra = T.rho[a][j], rb = T.rho[b][j];
                    int mx = a == b ? std::min(ra, w) : std::min(ra, rb);
                    int mn = std::max(0, ra + rb - w);
                    max_suf[a][b][j] = max_suf[a][b][j + 1] + mx;
                    min_suf[a][b][j] = min_suf[a][b][j + 1] + mn;
                }
        D = IncidenceMatrix(v, v);
        pp.assign(v, std::vector<int>(v, 0));
        rcls.resize(v);
        for (int c = 0; c < m; ++c)
            for (int r = start[c]; r < start[c + 1]; ++r) rcls[r] = c;
    }

    std::vector<int> rcls; // row index -> class index

    bool place(int I, int J, std::uint16_t bits, int sign) {
        int wr = T.profile.class_size(I), wc = T.profile.class_size(J);
        bool ok = true;
        // scalar products of the block's rows against every row already
        // filled in these columns (classes < I) and against each other;
        // overlaps come from `bits` so placing and removing are symmetric
        for (int r = 0; r < wr; ++r) {
            int pr = start[I] + r;
            unsigned rowbits = (bits >> (r * wc)) & ((1u << wc) - 1);
            for (int qr = 0; qr < start[I]; ++qr) {
                int olap = 0;
                for (int c = 0; c < wc; ++c)
                    olap += ((rowbits >> c) & 1) && D.get(qr, start[J] + c);
                pp[qr][pr] += sign * olap;
                if (sign > 0 && pp[qr][pr] > p.lambda) ok = false;
            }
            for (int q = 0; q < r; ++q) {
                unsigned qbits = (bits >> (q * wc)) & ((1u << wc) - 1);
                pp[start[I] + q][pr] += sign * std::popcount(rowbits & qbits);
                if (sign > 0 && pp[start[I] + q][pr] > p.lambda) ok = false;
            }
        }
        for (int r = 0; r < wr; ++r)
            for (int c = 0; c < wc; ++c)
                D.set(start[I] + r, start[J] + c, sign > 0 && ((bits >> (r * wc + c)) & 1));
        return ok;
    }

    void unplace(int I, int J, std::uint16_t bits) { place(I, J, bits, -1); }

    // pairs touching row class I must stay completable from column class J+1 on;
    // at J == m-1 the bounds collapse and force the product to equal lambda
    bool completable(int I, int J) const {
        for (int a = start[I]; a < start[I + 1]; ++a)
            for (int b = 0; b < a; ++b) {
                int cur = pp[b][a];
                if (cur + min_suf[rcls[b]][I][J + 1] > p.lambda) return false;
                if (cur + max_suf[rcls[b]][I][J + 1] < p.lambda) return false;
            }
        return true;
    }

    bool stopped() const { return stop && stop->load(std::memory_order_relaxed); }

    void emit() {
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b)
                if (pp[a][b] != p.lambda) return;
        if (emit_mutex) {
            std::lock_guard<std::mutex> lk(*emit_mutex);
            if (stopped()) return;
            ++emitted;
            if (!sink(D)) stop->store(true, std::memory_order_relaxed);
        } else {
            ++emitted;
            if (!sink(D) && stop) stop->store(true, std::memory_order_relaxed);
        }
    }

    // cells in row-class-major order: cell index t = I*m + J, so each point
    // class is completed before the next starts and its scalar products
    // against all earlier rows are checked exactly
    void search(int t) {
        if (stopped()) return;
        if (t == m * m) {
            emit();
            return;
        }
        int I = t / m, J = t % m;
        for (std::uint16_t bits : alpha[I][J].blocks) {
            bool ok = place(I, J, bits, +1);
            if (ok) ok = completable(I, J);
            if (ok) search(t + 1);
            unplace(I, J, bits);
            if (stopped()) return;
        }
    }
};

} // namespace

std::uint64_t expand_tdm(const TacticalDecompositionMatrix& T, const DesignParams& p,
                         ExpandMode mode, const DesignSink& sink, int threads) {
    if (!tdm_consistent(T, p)) return 0;
    std::atomic<bool> stop{false};
    try {
        if (threads <= 1) {
            Expander e(T, p, mode, sink);
            e.stop = &stop;
            e.search(0);
            return e.emitted;
        }
        // split on the first cell with more than one block choice
        Expander probe(T, p, mode, sink);
        int split = -1, m = T.profile.classes();
        for (int t = 0; t < m * m; ++t)
            if (probe.alpha[t / m][t % m].blocks.size() > 1) { split = t; break; }
        if (split < 0) { // at most one candidate matrix, no parallelism to exploit
            Expander e(T, p, mode, sink);
            e.stop = &stop;
            e.search(0);
            return e.emitted;
        }
        std::mutex emit_mutex;
        const auto& choices = probe.alpha[split / m][split % m].blocks;
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            std::uint64_t local = 0;
            for (size_t idx; (idx = next.fetch_add(1)) < choices.size();) {
                if (stop.load()) break;
                Expander e(T, p, mode, sink);
                e.stop = &stop;
                e.emit_mutex = &emit_mutex;
                // walk the forced prefix, pin the split cell, then search on
                bool ok = true;
                for (int t = 0; t < split && ok; ++t)
                    ok = e.place(t / m, t % m, e.alpha[t / m][t % m].blocks[0], +1);
                if (ok) ok = e.place(split / m, split % m, choices[idx], +1);
                if (ok) ok = e.completable(split / m, split % m);
                if (ok) e.search(split + 1);
                local += e.emitted;
            }
            return local;
        };
        std::vector<std::future<std::uint64_t>> futs;
        for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
        std::uint64_t total = 0;
        for (auto& f : futs) total += f.get();
        return total;
    } catch (const infeasible_cell&) {
        return 0; // a cell admits no block: nothing to emit
    }
}

bool has_order3_automorphism(const IncidenceMatrix& D, const OrbitProfile& profile) {
    if (D.v() != static_cast<std::size_t>(profile.v()) || D.b() != D.v()) return false;
    int m = profile.classes();
    std::vector<int> img(profile.v());
    int pos = 0;
    for (int c = 0; c < m; ++c) {
        int s = profile.class_size(c);
        for (int i = 0; i < s; ++i) img[pos + i] = pos + (i + 1) % s;
        pos += s;
    }
    for (std::size_t p = 0; p < D.v(); ++p)
        for (std::size_t b = 0; b < D.b(); ++b)
            if (D.get(p, b) != D.get(img[p], img[b])) return false;
    return true;
}

std::optional<TacticalDecompositionMatrix> collapse_to_tdm(const IncidenceMatrix& D,
                                                           const OrbitProfile& profile) {
    if (D.v() != static_cast<std::size_t>(profile.v()) || D.b() != D.v()) return std::nullopt;
    int m = profile.classes();
    std::vector<int> start(m + 1);
    for (int i = 0; i < m; ++i) start[i + 1] = start[i] + profile.class_size(i);

    TacticalDecompositionMatrix T;
    T.profile = profile;
    T.rho.assign(m, std::vector<int>(m, 0));
    for (int I = 0; I < m; ++I)
        for (int J = 0; J < m; ++J) {
            int rho = -1;
            for (int r = start[I]; r < start[I + 1]; ++r) {
                int cnt = 0;
                for (int c = start[J]; c < start[J + 1]; ++c) cnt += D.get(r, c);
                if (rho < 0)
                    rho = cnt;
                else if (rho != cnt)
                    return std::nullopt; // row counts not constant on the cell
            }
            // dual constancy: every block of the class meets the same number
            // of points of the class
            int kappa = -1;
            for (int c = start[J]; c < start[J + 1]; ++c) {
                int cnt = 0;
                for (int r = start[I]; r < start[I + 1]; ++r) cnt += D.get(r, c);
                if (kappa < 0)
                    kappa = cnt;
                else if (kappa != cnt)
                    return std::nullopt;
            }
            T.rho[I][J] = rho;
        }
    return T;
}

} // namespace hforge
