#include "hforge/canon.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

namespace hforge {

std::uint64_t g_canon_nodes = 0; // temp instrumentation

namespace {

using Perm = std::vector<int>;

std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void merge(int a, int b) { p[find(a)] = find(b); }
    bool same(int a, int b) { return find(a) == find(b); }
};

// Ordered partition: lab maps positions to vertices; cells are contiguous
// position ranges. cell_len is meaningful only at cell start positions.
struct Partition {
    std::vector<int> lab, pos, cell_of, cell_len; // cell_of: position -> cell start

    bool discrete() const {
        for (std::size_t c = 0; c < lab.size();) {
            if (cell_len[c] != 1) return false;
            ++c;
        }
        return true;
    }
};

class CanonSearch {
public:
    explicit CanonSearch(const ColoredGraph& g)
        : g_(g), n_(static_cast<int>(g.n)), orbits_(n_) {}

    CanonResult run() {
        Partition p = initial_partition();
        explore(p, 0, true, true, 0);
        CanonResult res;
        res.form = prefix_;
        res.form.insert(res.form.end(), best_bytes_.begin(), best_bytes_.end());
        res.labeling = best_lab_;
        res.generators = gens_;
        return res;
    }

private:
    const ColoredGraph& g_;
    int n_;

    std::vector<std::uint8_t> prefix_;

    bool have_first_ = false;
    std::vector<std::uint64_t> first_inv_;
    std::vector<int> first_choice_, first_lab_;
    std::vector<std::uint8_t> first_bytes_;

    bool best_valid_ = false;
    std::vector<std::uint64_t> best_inv_;
    std::vector<int> best_choices_, best_lab_;
    std::vector<std::uint8_t> best_bytes_;

    std::vector<std::uint64_t> cur_inv_;
    std::vector<int> cur_choices_;

    std::vector<Perm> gens_;
    Dsu orbits_;
    int jump_to_ = -1;

    Partition initial_partition() {
        Partition p;
        p.lab.resize(n_);
        p.pos.resize(n_);
        p.cell_of.resize(n_);
        p.cell_len.assign(n_, 0);
        std::vector<int> vs(n_);
        for (int i = 0; i < n_; ++i) vs[i] = i;
        std::stable_sort(vs.begin(), vs.end(),
                         [&](int a, int b) { return g_.color[a] < g_.color[b]; });
        p.lab = vs;
        for (int i = 0; i < n_; ++i) p.pos[p.lab[i]] = i;
        int start = 0;
        std::vector<std::uint32_t> colorsizes;
        for (int i = 0; i < n_; ++i) {
            if (i + 1 == n_ || g_.color[p.lab[i + 1]] != g_.color[p.lab[i]]) {
                for (int j = start; j <= i; ++j) p.cell_of[j] = start;
                p.cell_len[start] = i - start + 1;
                colorsizes.push_back(static_cast<std::uint32_t>(i - start + 1));
                start = i + 1;
            }
        }
        auto push32 = [&](std::uint32_t x) {
            for (int k = 0; k < 4; ++k) prefix_.push_back(static_cast<std::uint8_t>(x >> (8 * k)));
        };
        push32(static_cast<std::uint32_t>(n_));
        push32(static_cast<std::uint32_t>(colorsizes.size()));
        for (auto s : colorsizes) push32(s);
        return p;
    }

    // Equitable refinement to a fixpoint; split events and the final cell
    // structure are folded into the returned invariant.
    std::vector<int> deg_, idx_, newlab_, newdeg_; // refine scratch

    std::uint64_t refine(Partition& p) {
        std::uint64_t inv = 0x12345678;
        deg_.assign(n_, 0);
        auto& deg = deg_;
        // worklist of splitter cells (by start position); fragments created by
        // a split are re-enqueued, so the fixpoint is still equitable but each
        // (splitter, cell) pair is visited only when it can still matter
        std::vector<int> queue;
        std::vector<char> inq(n_, 0);
        for (int c = 0; c < n_; c += p.cell_len[c]) {
            queue.push_back(c);
            inq[c] = 1;
        }
        auto enqueue = [&](int c) {
            if (!inq[c]) {
                inq[c] = 1;
                queue.push_back(c);
            }
        };
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int sp = queue[qi];
            inq[sp] = 0;
            BitRow w(n_);
            for (int i = sp; i < sp + p.cell_len[sp]; ++i) w.set(p.lab[i], true);
            for (int cs = 0; cs < n_; cs += p.cell_len[cs]) {
                int cl = p.cell_len[cs];
                if (cl == 1) continue;
                bool uniform = true;
                int d0 = static_cast<int>(g_.adj[p.lab[cs]].count_and(w));
                deg[cs] = d0;
                for (int i = cs + 1; i < cs + cl; ++i) {
                    deg[i] = static_cast<int>(g_.adj[p.lab[i]].count_and(w));
                    if (deg[i] != d0) uniform = false;
                }
                if (uniform) continue;
                idx_.resize(cl);
                auto& idx = idx_;
                for (int i = 0; i < cl; ++i) idx[i] = cs + i;
                std::stable_sort(idx.begin(), idx.end(),
                                 [&](int a, int b) { return deg[a] < deg[b]; });
                newlab_.resize(cl);
                newdeg_.resize(cl);
                auto& newlab = newlab_;
                auto& newdeg = newdeg_;
                for (int i = 0; i < cl; ++i) {
                    newlab[i] = p.lab[idx[i]];
                    newdeg[i] = deg[idx[i]];
                }
                inv = mix64(inv, static_cast<std::uint64_t>(sp) * 1315423911u + cs);
                int gstart = 0;
                for (int i = 0; i < cl; ++i) {
                    p.lab[cs + i] = newlab[i];
                    p.pos[newlab[i]] = cs + i;
                    deg[cs + i] = newdeg[i];
                    if (i + 1 == cl || newdeg[i + 1] != newdeg[i]) {
                        int glen = i - gstart + 1;
                        for (int j = gstart; j <= i; ++j) p.cell_of[cs + j] = cs + gstart;
                        p.cell_len[cs + gstart] = glen;
                        inv = mix64(inv, (static_cast<std::uint64_t>(newdeg[i]) << 32) | glen);
                        enqueue(cs + gstart);
                        gstart = i + 1;
                    }
                }
                // if cs == sp the splitter itself just split; w still holds the
                // same vertex set, so finishing this pass with it is fine
            }
        }
        for (int c = 0; c < n_; c += p.cell_len[c])
            inv = mix64(inv, (static_cast<std::uint64_t>(c) << 20) | p.cell_len[c]);
        return inv;
    }

    int target_cell(const Partition& p) const {
        for (int c = 0; c < n_; c += p.cell_len[c])
            if (p.cell_len[c] > 1) return c;
        return -1;
    }

    std::vector<std::uint8_t> encode_leaf(const std::vector<int>& lab) const {
        std::size_t nbits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
        std::vector<std::uint8_t> bytes((nbits + 7) / 8, 0);
        std::size_t bit = 0;
        for (int pp = 0; pp < n_; ++pp)
            for (int q = pp + 1; q < n_; ++q, ++bit)
                if (g_.has_edge(lab[pp], lab[q]))
                    bytes[bit >> 3] |= static_cast<std::uint8_t>(1u << (bit & 7));
        return bytes;
    }

    void record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab,
                             bool merge) {
        Perm g(n_);
        bool ident = true;
        for (int i = 0; i < n_; ++i) {
            g[from_lab[i]] = to_lab[i];
            if (from_lab[i] != to_lab[i]) ident = false;
        }
        if (ident) return;
        assert([&] {
            for (int u = 0; u < n_; ++u) {
                if (g_.color[u] != g_.color[g[u]]) return false;
                for (int v = u + 1; v < n_; ++v)
                    if (g_.has_edge(u, v) != g_.has_edge(g[u], g[v])) return false;
            }
            return true;
        }());
        gens_.push_back(g);
        if (merge)
            for (int i = 0; i < n_; ++i)
                if (g[i] != i) orbits_.merge(i, g[i]);
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        int m = static_cast<int>(std::min(a.size(), b.size()));
        int i = 0;
        while (i < m && a[i] == b[i]) ++i;
        return i;
    }

    // fp_common: length of the leading run of choices shared with the first
    // path; the node sits on the first path iff fp_common == depth.
    void explore(Partition& p, int depth, bool inv_eq_first, bool best_eq, int fp_common) {
        ++g_canon_nodes;
        std::uint64_t inv = refine(p);
        cur_inv_.resize(depth);
        cur_inv_.push_back(inv);

        if (have_first_) {
            inv_eq_first = inv_eq_first &&
                           depth < static_cast<int>(first_inv_.size()) &&
                           inv == first_inv_[depth];
            if (best_eq) {
                if (depth < static_cast<int>(best_inv_.size())) {
                    if (inv < best_inv_[depth]) {
                        best_inv_.resize(depth + 1);
                        best_inv_[depth] = inv;
                        best_valid_ = false;
                    } else if (inv > best_inv_[depth]) {
                        best_eq = false;
                    }
                } else if (!best_valid_) {
                    best_inv_.push_back(inv);
                } else {
                    best_eq = false;
                }
            }
            if (!best_eq && !inv_eq_first) return;
        } else {
            first_inv_.push_back(inv);
        }

        if (p.discrete()) {
            leaf(p.lab, depth, inv_eq_first, best_eq);
            return;
        }

        int cell = target_cell(p);
        int cl = p.cell_len[cell];
        std::vector<int> cand(p.lab.begin() + cell, p.lab.begin() + cell + cl);

        bool on_first_path = have_first_ ? (fp_common == depth) : true;
        std::vector<int> tried;

        // Off the first path the full-group orbits are not usable, but any
        // recorded automorphism that fixes every choice made so far maps this
        // subtree onto itself, so its orbits on the candidates are.
        Dsu local(0);
        if (have_first_ && !on_first_path) {
            local = Dsu(n_);
            for (const auto& g : gens_) {
                bool fixes = true;
                for (int d = 0; d < depth; ++d)
                    if (g[cur_choices_[d]] != cur_choices_[d]) {
                        fixes = false;
                        break;
                    }
                if (fixes)
                    for (int i = 0; i < n_; ++i)
                        if (g[i] != i) local.merge(i, g[i]);
            }
        }

        for (int v : cand) {
            if (have_first_) {
                bool skip = false;
                for (int u : tried)
                    if (on_first_path ? orbits_.same(u, v) : local.same(u, v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);

            Partition child = p;
            individualize(child, cell, v);
            cur_choices_.resize(depth);
            cur_choices_.push_back(v);
            if (!have_first_) {
                if (static_cast<int>(first_choice_.size()) <= depth)
                    first_choice_.push_back(v);
            }
            int child_fp = fp_common;
            if (on_first_path) {
                if (!have_first_)
                    child_fp = depth + 1;
                else if (depth < static_cast<int>(first_choice_.size()) &&
                         first_choice_[depth] == v)
                    child_fp = depth + 1;
            }
            explore(child, depth + 1, inv_eq_first, best_eq, child_fp);

            if (jump_to_ >= 0) {
                if (jump_to_ < depth) return;
                jump_to_ = -1;
            }
        }
    }

    void individualize(Partition& p, int cell, int v) {
        int pv = p.pos[v];
        int other = p.lab[cell];
        std::swap(p.lab[cell], p.lab[pv]);
        p.pos[other] = pv;
        p.pos[v] = cell;
        int cl = p.cell_len[cell];
        p.cell_len[cell] = 1;
        p.cell_of[cell] = cell;
        if (cl > 1) {
            p.cell_len[cell + 1] = cl - 1;
            for (int i = cell + 1; i < cell + cl; ++i) p.cell_of[i] = cell + 1;
        }
    }

    void leaf(const std::vector<int>& lab, int depth, bool inv_eq_first, bool best_eq) {
        auto bytes = encode_leaf(lab);
        if (!have_first_) {
            have_first_ = true;
            first_lab_ = lab;
            first_bytes_ = bytes;
            best_lab_ = lab;
            best_bytes_ = bytes;
            best_inv_ = first_inv_;
            best_choices_ = cur_choices_;
            best_valid_ = true;
            return;
        }
        if (inv_eq_first && bytes == first_bytes_ && lab != first_lab_) {
            record_automorphism(first_lab_, lab, true);
            jump_to_ = common_prefix(cur_choices_, first_choice_);
            return;
        }
        if (!best_eq) return;
        if (!best_valid_) {
            best_lab_ = lab;
            best_bytes_ = bytes;
            best_choices_ = cur_choices_;
            best_valid_ = true;
            return;
        }
        if (bytes < best_bytes_) {
            best_lab_ = lab;
            best_bytes_ = bytes;
            best_choices_ = cur_choices_;
        } else if (bytes == best_bytes_ && lab != best_lab_) {
            record_automorphism(best_lab_, lab, true);
            jump_to_ = common_prefix(cur_choices_, best_choices_);
        }
    }
};

Perm inverse(const Perm& g) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
    return r;
}

Perm compose(const Perm& a, const Perm& b) { // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

bool is_identity(const Perm& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i)) return false;
    return true;
}

// Deterministic bottom-up Schreier-Sims stabilizer chain.
class StabChain {
public:
    explicit StabChain(int n) : n_(n) {}

    void seed(const std::vector<Perm>& gens) {
        for (const auto& g : gens) insert_initial(g);
        run();
    }

    unsigned long long order() const {
        unsigned long long o = 1;
        for (const auto& t : tr_) o *= t.size();
        return o;
    }

private:
    int n_;
    std::vector<int> base_;
    std::vector<std::vector<Perm>> S_; // S_[i]: generators fixing base_[0..i-1]
    std::vector<std::unordered_map<int, Perm>> tr_; // tr_[i][p] maps base_[i] -> p
    std::vector<std::vector<int>> orbit_; // BFS order of tr_[i] keys

    static int first_moved(const Perm& g) {
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != static_cast<int>(i)) return static_cast<int>(i);
        return -1;
    }

    void new_level(int beta) {
        base_.push_back(beta);
        S_.emplace_back();
        tr_.emplace_back();
        orbit_.emplace_back();
    }

    void insert_initial(const Perm& g) {
        if (is_identity(g)) return;
        std::size_t l = 0;
        while (l < base_.size() && g[base_[l]] == base_[l]) ++l;
        if (l == base_.size()) new_level(first_moved(g));
        for (std::size_t j = 0; j <= l; ++j) S_[j].push_back(g);
    }

    void rebuild_transversal(std::size_t level) {
        auto& t = tr_[level];
        auto& ord = orbit_[level];
        t.clear();
        ord.clear();
        Perm id(n_);
        for (int i = 0; i < n_; ++i) id[i] = i;
        t[base_[level]] = id;
        ord.push_back(base_[level]);
        for (std::size_t qi = 0; qi < ord.size(); ++qi) {
            int p = ord[qi];
            for (const auto& s : S_[level]) {
                int q = s[p];
                if (!t.count(q)) {
                    t[q] = compose(s, t.at(p));
                    ord.push_back(q);
                }
            }
        }
    }

    // Strip g through levels from..end; returns residual and stop level.
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
        for (std::size_t i = from; i < base_.size(); ++i) {
            int p = g[base_[i]];
            auto it = tr_[i].find(p);
            if (it == tr_[i].end()) return {g, i};
            g = compose(inverse(it->second), g);
        }
        return {g, base_.size()};
    }

    // Process Schreier generators of level i; on finding a new strong
    // generator, record it at levels i+1..j and return j for reprocessing.
    bool process_level(std::size_t i, std::size_t& jump) {
        rebuild_transversal(i);
        for (std::size_t qi = 0; qi < orbit_[i].size(); ++qi) {
            int p = orbit_[i][qi];
            const Perm& up = tr_[i].at(p);
            for (const auto& s : S_[i]) {
                Perm sch = compose(inverse(tr_[i].at(s[p])), compose(s, up));
                if (is_identity(sch)) continue;
                auto [h, j] = strip(std::move(sch), i + 1);
                if (is_identity(h)) continue;
                if (j == base_.size()) new_level(first_moved(h));
                for (std::size_t l = i + 1; l <= j; ++l) S_[l].push_back(h);
                jump = j;
                return false;
            }
        }
        return true;
    }

    void run() {
        if (base_.empty()) return;
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base_.size()) - 1;
        while (i >= 0) {
            std::size_t jump = 0;
            if (process_level(static_cast<std::size_t>(i), jump))
                --i;
            else
                i = static_cast<std::ptrdiff_t>(jump);
        }
    }
};

} // namespace

CanonResult canonical_form(const ColoredGraph& g) {
    if (g.n == 0) throw std::invalid_argument("canonical_form: empty graph");
    if (g.color.size() != g.n || g.adj.size() != g.n)
        throw std::invalid_argument("canonical_form: malformed graph");
    CanonSearch s(g);
    return s.run();
}

unsigned long long permutation_group_order(std::size_t n,
                                           const std::vector<std::vector<int>>& gens) {
    StabChain c(static_cast<int>(n));
    c.seed(gens);
    return c.order();
}

CanonicalCertificate graph_certificate(const ColoredGraph& g) {
    auto r = canonical_form(g);
    return {r.form, permutation_group_order(g.n, r.generators)};
}

ColoredGraph design_graph(const IncidenceMatrix& D) {
    ColoredGraph g(D.v() + D.b());
    for (std::size_t p = 0; p < D.v(); ++p) {
        g.color[p] = 0;
        for (std::size_t blk = 0; blk < D.b(); ++blk)
            if (D.get(p, blk)) g.add_edge(p, D.v() + blk);
    }
    for (std::size_t blk = 0; blk < D.b(); ++blk) g.color[D.v() + blk] = 1;
    return g;
}

CanonicalCertificate design_certificate(const IncidenceMatrix& D) {
    return graph_certificate(design_graph(D));
}

bool designs_isomorphic(const IncidenceMatrix& A, const IncidenceMatrix& B) {
    if (A.v() != B.v() || A.b() != B.b()) return false;
    return canonical_form(design_graph(A)).form == canonical_form(design_graph(B)).form;
}

ColoredGraph hadamard_graph(const SignMatrix& M) {
    if (!is_hadamard(M)) throw not_hadamard("hadamard_graph: input is not Hadamard");
    std::size_t n = M.n_rows();
    ColoredGraph g(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g.color[i] = g.color[n + i] = 0;         // r_i^+, r_i^-
        g.color[2 * n + i] = g.color[3 * n + i] = 1; // c_i^+, c_i^-
        g.add_edge(i, n + i);
        g.add_edge(2 * n + i, 3 * n + i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (M.get(i, j) > 0) {
                g.add_edge(i, 2 * n + j);         // + +
                g.add_edge(n + i, 3 * n + j);     // - -
            } else {
                g.add_edge(i, 3 * n + j);         // + -
                g.add_edge(n + i, 2 * n + j);     // - +
            }
        }
    return g;
}

CanonicalCertificate hadamard_certificate(const SignMatrix& M) {
    return graph_certificate(hadamard_graph(M));
}

bool hadamard_equivalent(const SignMatrix& A, const SignMatrix& B) {
    if (A.n_rows() != B.n_rows() || A.n_cols() != B.n_cols()) return false;
    return canonical_form(hadamard_graph(A)).form == canonical_form(hadamard_graph(B)).form;
}

std::string Hash128::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 0; i < 16; ++i) {
        std::uint64_t w = i < 8 ? hi : lo;
        int shift = 56 - 8 * (i % 8);
        std::uint8_t byte = static_cast<std::uint8_t>(w >> shift);
        s[2 * i] = digits[byte >> 4];
        s[2 * i + 1] = digits[byte & 15];
    }
    return s;
}

Hash128 hash128(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t a = 0xcbf29ce484222325ULL, b = 0x9ae16a3b2f90404fULL;
    for (std::uint8_t c : bytes) {
        a = (a ^ c) * 0x100000001b3ULL;
        b = mix64(b, c + (a << 1));
    }
    a = mix64(a, bytes.size());
    b = mix64(b, a);
    return {a, b};
}

} // namespace hforge
