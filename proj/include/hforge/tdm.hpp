#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hforge/design.hpp"

namespace hforge {

// Orbit structure of an order-3 automorphism acting on a symmetric design:
// F fixed points/blocks plus long_orbits orbits of length 3, the same
// partition shape on points and on blocks.
struct OrbitProfile {
    long fixed_points = 0;
    long long_orbits = 0;

    long v() const { return fixed_points + 3 * long_orbits; }
    int classes() const { return static_cast<int>(fixed_points + long_orbits); }
    int class_size(int c) const { return c < fixed_points ? 1 : 3; }

    bool operator==(const OrbitProfile&) const = default;
};

// Orbit matrix [rho_ij]: rho_ij = number of blocks of class j through any
// point of class i.
struct TacticalDecompositionMatrix {
    OrbitProfile profile;
    std::vector<std::vector<int>> rho;

    bool operator==(const TacticalDecompositionMatrix&) const = default;
};

// Classical fixed-point bound k + isqrt(k - lambda).
long default_max_fixed(const DesignParams& p);

// All F with 0 <= F <= max_fixed and F == v (mod 3).
std::vector<OrbitProfile> orbit_profiles(const DesignParams& p, long max_fixed);

// Lemma-1 row equations, their pairwise form, and the dual conditions
// (kappa integral in range, columns summing to k).
bool tdm_consistent(const TacticalDecompositionMatrix& T, const DesignParams& p);

// Canonical byte string invariant under simultaneous class-size-preserving
// permutations of point classes and block classes.
std::vector<std::uint8_t> tdm_canonical_form(const TacticalDecompositionMatrix& T);

// Exhaustive duplicate-free enumeration of consistent TDMs for the profile,
// up to class permutation equivalence; deterministic output order.
std::vector<TacticalDecompositionMatrix> enumerate_tdms(const DesignParams& p,
                                                        const OrbitProfile& profile,
                                                        int threads = 1);

// Text format: "T m F" header, then m lines of m space-separated integers.
std::string to_text(const TacticalDecompositionMatrix& T);
std::vector<TacticalDecompositionMatrix> tdms_from_text(const std::string& text);

} // namespace hforge
