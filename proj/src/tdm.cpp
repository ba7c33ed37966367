#include "hforge/tdm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hforge/canon.hpp"
#include "hforge/io.hpp"

namespace hforge {

long default_max_fixed(const DesignParams& p) {
    long d = p.k - p.lambda;
    long r = static_cast<long>(std::sqrt(static_cast<double>(d)));
    while (r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    return p.k + r;
}

std::vector<OrbitProfile> orbit_profiles(const DesignParams& p, long max_fixed) {
    std::vector<OrbitProfile> out;
    for (long f = 0; f <= max_fixed && f <= p.v; ++f)
        if ((p.v - f) % 3 == 0)
            out.push_back(OrbitProfile{f, (p.v - f) / 3});
    return out;
}

bool tdm_consistent(const TacticalDecompositionMatrix& T, const DesignParams& p) {
    const OrbitProfile& pr = T.profile;
    const int m = pr.classes();
    if (pr.v() != p.v || p.t != 2 || p.b != p.v) return false;
    if (static_cast<int>(T.rho.size()) != m) return false;
    for (const auto& row : T.rho)
        if (static_cast<int>(row.size()) != m) return false;

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int rho = T.rho[i][j];
            if (rho < 0 || rho > pr.class_size(j)) return false;
            // kappa_ij = rho_ij * |P_i| / |B_j| must be a whole number
            if ((rho * pr.class_size(i)) % pr.class_size(j) != 0) return false;
        }

    for (int i = 0; i < m; ++i) {
        long sum = 0;
        for (int j = 0; j < m; ++j) sum += T.rho[i][j];
        if (sum != p.k) return false;
    }

    // pairwise inner products, scaled by 3 to stay integral
    for (int i = 0; i < m; ++i)
        for (int l = i; l < m; ++l) {
            long lhs = 0;
            for (int j = 0; j < m; ++j)
                lhs += static_cast<long>(3 / pr.class_size(j)) * T.rho[i][j] * T.rho[l][j];
            long rhs = 3 * p.lambda + (i == l ? 3 * (p.k - p.lambda) / pr.class_size(i) : 0);
            if (i == l && (3 * (p.k - p.lambda)) % pr.class_size(i) != 0) return false;
            if (lhs != rhs) return false;
        }

    // every block class meets k points counted with class sizes
    for (int j = 0; j < m; ++j) {
        long sum = 0;
        for (int i = 0; i < m; ++i) sum += static_cast<long>(pr.class_size(i)) * T.rho[i][j];
        if (sum != p.k * pr.class_size(j)) return false;
    }
    return true;
}

std::vector<std::uint8_t> tdm_canonical_form(const TacticalDecompositionMatrix& T) {
    // Layered bipartite graph: two vertex layers per side carry the two bits
    // of each entry (entries are 0..3), pairing edges tie the layers together.
    // Colors separate side, layer, and class size, so graph isomorphism is
    // exactly simultaneous size-preserving row/column class permutation.
    const OrbitProfile& pr = T.profile;
    const int m = pr.classes();
    ColoredGraph g(4 * m);
    auto color_of = [&](int side, int layer, int cls) {
        return side * 4 + layer * 2 + (pr.class_size(cls) == 1 ? 0 : 1);
    };
    for (int i = 0; i < m; ++i) {
        g.color[i] = color_of(0, 0, i);
        g.color[m + i] = color_of(0, 1, i);
        g.color[2 * m + i] = color_of(1, 0, i);
        g.color[3 * m + i] = color_of(1, 1, i);
        g.add_edge(i, m + i);
        g.add_edge(2 * m + i, 3 * m + i);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (T.rho[i][j] & 1) g.add_edge(i, 2 * m + j);
            if (T.rho[i][j] & 2) g.add_edge(m + i, 3 * m + j);
        }
    return canonical_form(g).form;
}

namespace {

struct RowSpec {
    int size;                    // point class size, 1 or 3
    std::vector<int> max_entry;  // per column class
};

// All rows satisfying the sum and quadratic equations for one point class.
std::vector<std::vector<int>> row_candidates(const DesignParams& p, const OrbitProfile& pr,
                                             int row_size) {
    const int m = pr.classes();
    // scaled quadratic target: sum_j (3*row_size/|B_j|) rho^2
    const long quad_target = 3L * p.lambda * row_size + 3L * (p.k - p.lambda);
    std::vector<int> maxe(m), qw(m);
    for (int j = 0; j < m; ++j) {
        maxe[j] = pr.class_size(j);
        qw[j] = 3 * row_size / pr.class_size(j);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m);
    // suffix bounds on achievable remaining sum
    std::vector<long> max_sum_suffix(m + 1, 0);
    for (int j = m - 1; j >= 0; --j) max_sum_suffix[j] = max_sum_suffix[j + 1] + maxe[j];

    auto rec = [&](auto&& self, int j, long sum, long quad) -> void {
        if (sum > p.k || quad > quad_target) return;
        if (p.k - sum > max_sum_suffix[j]) return;
        if (j == m) {
            if (sum == p.k && quad == quad_target) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= maxe[j]; ++e) {
            // kappa integrality for this cell
            if ((e * row_size) % pr.class_size(j) != 0) continue;
            cur[j] = e;
            self(self, j + 1, sum + e, quad + static_cast<long>(qw[j]) * e * e);
        }
        cur[j] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

struct Enumerator {
    const DesignParams& p;
    const OrbitProfile& pr;
    int m;
    std::vector<int> row_size;   // per row index
    std::vector<long> col_need;  // k * |B_j|
    std::vector<long> col_max_rest; // per row index i: sum over rows >= i of size(i)*max entry,
                                    // same for every column within a column group
    std::vector<TacticalDecompositionMatrix> results;
    std::set<std::vector<std::uint8_t>> seen;

    std::vector<std::vector<int>> rows;      // accepted rows so far
    std::vector<long> col_sum;               // weighted partial column sums

    Enumerator(const DesignParams& p_, const OrbitProfile& pr_) : p(p_), pr(pr_) {
        m = pr.classes();
        row_size.resize(m);
        for (int i = 0; i < m; ++i) row_size[i] = pr.class_size(i);
        col_need.resize(m);
        for (int j = 0; j < m; ++j) col_need[j] = static_cast<long>(p.k) * pr.class_size(j);
        col_sum.assign(m, 0);
        rows.reserve(m); // `search` keeps pointers into `rows`; never reallocate

    }

    bool pair_ok(const std::vector<int>& a, const std::vector<int>& b) const {
        long s = 0;
        for (int j = 0; j < m; ++j) s += (3 / pr.class_size(j)) * a[j] * b[j];
        return s == 3L * p.lambda;
    }

    // cells: nondecreasing column-cell ids; a candidate row must be
    // nondecreasing within each cell (lex-minimality necessary condition)
    static bool monotone_in_cells(const std::vector<int>& row, const std::vector<int>& cell) {
        for (size_t j = 1; j < row.size(); ++j)
            if (cell[j] == cell[j - 1] && row[j] < row[j - 1]) return false;
        return true;
    }

    static std::vector<int> refine_cells(const std::vector<int>& row, const std::vector<int>& cell) {
        std::vector<int> nc(row.size());
        int id = 0;
        for (size_t j = 0; j < row.size(); ++j) {
            if (j > 0 && (cell[j] != cell[j - 1] || row[j] != row[j - 1])) ++id;
            nc[j] = id;
        }
        return nc;
    }

    bool col_feasible(int next_row) const {
        for (int j = 0; j < m; ++j) {
            long rest = 0;
            for (int i = next_row; i < m; ++i)
                rest += static_cast<long>(row_size[i]) * pr.class_size(j);
            if (col_sum[j] > col_need[j] || col_sum[j] + rest < col_need[j]) return false;
        }
        return true;
    }

    void accept() {
        TacticalDecompositionMatrix T{pr, rows};
        if (!tdm_consistent(T, p)) return;
        auto form = tdm_canonical_form(T);
        if (seen.insert(std::move(form)).second) results.push_back(std::move(T));
    }

    // candidates: rows compatible (pairwise equation) with everything placed
    void search(int i, const std::vector<const std::vector<int>*>& fixed_cands,
                const std::vector<const std::vector<int>*>& orbit_cands,
                const std::vector<int>& cell, const std::vector<int>* only = nullptr) {
        if (i == m) {
            accept();
            return;
        }
        const auto& cands = row_size[i] == 1 ? fixed_cands : orbit_cands;
        const std::vector<int>* prev =
            (i > 0 && row_size[i - 1] == row_size[i]) ? &rows[i - 1] : nullptr;
        for (const auto* cp : cands) {
            if (only && cp != only) continue;
            const std::vector<int>& c = *cp;
            if (prev && c < *prev) continue;
            if (!monotone_in_cells(c, cell)) continue;
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                col_sum[j] += static_cast<long>(row_size[i]) * c[j];
                if (col_sum[j] > col_need[j]) ok = false;
            }
            if (ok && i + 1 < m && !col_feasible(i + 1)) ok = false;
            if (ok && i + 1 == m) {
                for (int j = 0; j < m; ++j)
                    if (col_sum[j] != col_need[j]) { ok = false; break; }
            }
            if (ok) {
                rows.push_back(c);
                // narrow candidate lists by the pairwise equation once per level
                std::vector<const std::vector<int>*> nf, no;
                nf.reserve(fixed_cands.size());
                no.reserve(orbit_cands.size());
                for (const auto* q : fixed_cands)
                    if (pair_ok(c, *q)) nf.push_back(q);
                for (const auto* q : orbit_cands)
                    if (pair_ok(c, *q)) no.push_back(q);
                search(i + 1, nf, no, refine_cells(c, cell));
                rows.pop_back();
            }
            for (int j = 0; j < m; ++j) col_sum[j] -= static_cast<long>(row_size[i]) * c[j];
        }
    }
};

} // namespace

std::vector<TacticalDecompositionMatrix> enumerate_tdms(const DesignParams& p,
                                                        const OrbitProfile& profile,
                                                        int threads) {
    if (p.t != 2 || p.b != p.v)
        throw invalid_parameters("tactical decomposition enumeration requires a symmetric 2-design");
    if (profile.v() != p.v)
        throw invalid_parameters("orbit profile does not cover the point set");

    const int m = profile.classes();
    if (m == 0) return {};

    auto fixed_rows = profile.fixed_points > 0
                          ? row_candidates(p, profile, 1)
                          : std::vector<std::vector<int>>{};
    auto orbit_rows = profile.long_orbits > 0
                          ? row_candidates(p, profile, 3)
                          : std::vector<std::vector<int>>{};

    std::vector<const std::vector<int>*> fc, oc;
    for (const auto& r : fixed_rows) fc.push_back(&r);
    for (const auto& r : orbit_rows) oc.push_back(&r);

    // initial column cells: fixed classes vs orbit classes
    std::vector<int> cell(m);
    for (int j = 0; j < m; ++j) cell[j] = profile.class_size(j) == 1 ? 0 : 1;

    const auto& first_cands = profile.fixed_points > 0 ? fc : oc;
    if (threads < 1) threads = 1;
    if (threads > static_cast<int>(first_cands.size()))
        threads = std::max<int>(1, static_cast<int>(first_cands.size()));

    // one subtree per first-row candidate; merging in candidate order keeps
    // the chosen class representatives independent of the thread count
    auto run_subtree = [&](size_t idx) {
        Enumerator e(p, profile);
        e.search(0, fc, oc, cell, first_cands[idx]);
        return std::move(e.results);
    };

    std::vector<std::vector<TacticalDecompositionMatrix>> buckets(first_cands.size());
    if (threads == 1) {
        for (size_t idx = 0; idx < first_cands.size(); ++idx) buckets[idx] = run_subtree(idx);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t idx; (idx = next.fetch_add(1)) < first_cands.size();)
                buckets[idx] = run_subtree(idx);
        };
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }
    std::vector<TacticalDecompositionMatrix> all;
    std::set<std::vector<std::uint8_t>> seen;
    for (auto& bucket : buckets)
        for (auto& T : bucket)
            if (seen.insert(tdm_canonical_form(T)).second) all.push_back(std::move(T));
    std::sort(all.begin(), all.end(),
              [](const TacticalDecompositionMatrix& a, const TacticalDecompositionMatrix& b) {
                  return a.rho < b.rho;
              });
    return all;
}

std::string to_text(const TacticalDecompositionMatrix& T) {
    std::ostringstream os;
    os << "T " << T.profile.classes() << ' ' << T.profile.fixed_points << '\n';
    for (const auto& row : T.rho) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

std::vector<TacticalDecompositionMatrix> tdms_from_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<TacticalDecompositionMatrix> out;
    std::string tag;
    while (is >> tag) {
        if (tag != "T") throw parse_error("expected 'T' header, got '" + tag + "'");
        long m = 0, f = 0;
        if (!(is >> m >> f) || m <= 0 || f < 0 || f > m)
            throw parse_error("bad TDM header");
        TacticalDecompositionMatrix T;
        T.profile = OrbitProfile{f, m - f};
        T.rho.assign(m, std::vector<int>(m));
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
                if (!(is >> T.rho[i][j])) throw parse_error("truncated TDM body");
        out.push_back(std::move(T));
    }
    return out;
}

} // namespace hforge
