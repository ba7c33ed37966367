#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hforge/bitrow.hpp"
#include "hforge/hadamard.hpp"
#include "hforge/incidence_matrix.hpp"
#include "hforge/sign_matrix.hpp"

namespace hforge {

// Simple vertex-colored undirected graph, adjacency kept as bit rows.
struct ColoredGraph {
    std::size_t n = 0;
    std::vector<BitRow> adj;
    std::vector<int> color;

    ColoredGraph() = default;
    explicit ColoredGraph(std::size_t n) : n(n), adj(n, BitRow(n)), color(n, 0) {}

    void add_edge(std::size_t u, std::size_t v) {
        adj[u].set(v, true);
        adj[v].set(u, true);
    }
    bool has_edge(std::size_t u, std::size_t v) const { return adj[u].get(v); }
};

struct CanonicalCertificate {
    std::vector<std::uint8_t> form;
    unsigned long long aut_order = 1;

    bool operator==(const CanonicalCertificate&) const = default;
};

struct CanonResult {
    std::vector<std::uint8_t> form;         // canonical encoding
    std::vector<int> labeling;              // position -> vertex of the canonical leaf
    std::vector<std::vector<int>> generators; // automorphism generators (vertex maps)
};

// Canonical form via equitable refinement + individualization, with
// automorphism-based pruning. Equal forms <=> isomorphic as colored graphs
// (color classes must be numbered consistently between the two graphs).
CanonResult canonical_form(const ColoredGraph& g);

// Order of the permutation group generated by `gens` on n points
// (Schreier-Sims stabilizer chain).
unsigned long long permutation_group_order(std::size_t n,
                                           const std::vector<std::vector<int>>& gens);

CanonicalCertificate graph_certificate(const ColoredGraph& g);

// Bipartite point/block graph of an incidence structure, points colored 0,
// blocks colored 1.
ColoredGraph design_graph(const IncidenceMatrix& D);

// Canonical form plus |Aut(D)| over point-and-block permutations
// (dualities not counted).
CanonicalCertificate design_certificate(const IncidenceMatrix& D);

bool designs_isomorphic(const IncidenceMatrix& A, const IncidenceMatrix& B);

// McKay's 4n-vertex graph deciding Hadamard equivalence under signed row
// and column permutations (transposition excluded by the side coloring).
// Vertices: r_i^+ = i, r_i^- = n+i, c_j^+ = 2n+j, c_j^- = 3n+j.
ColoredGraph hadamard_graph(const SignMatrix& M);

CanonicalCertificate hadamard_certificate(const SignMatrix& M);

bool hadamard_equivalent(const SignMatrix& A, const SignMatrix& B);

struct Hash128 {
    std::uint64_t hi = 0, lo = 0;
    bool operator==(const Hash128&) const = default;
    std::string hex() const;
};

Hash128 hash128(const std::vector<std::uint8_t>& bytes);

} // namespace hforge
