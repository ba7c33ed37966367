#pragma once

#include <cstdint>
#include <stdexcept>

#include "hforge/incidence_matrix.hpp"

namespace hforge {

struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// t-(v,k,lambda) design parameters with the derived replication number r
// and block count b. Construction rejects infeasible tuples.
struct DesignParams {
    int t = 0;
    long v = 0;
    long k = 0;
    long lambda = 0;
    long r = 0; // derived
    long b = 0; // derived

    DesignParams() = default;
    DesignParams(int t, long v, long k, long lambda);

    bool symmetric() const { return t == 2 && b == v; }

    bool operator==(const DesignParams&) const = default;
};

// Solves r * C(k-1,t-1) = lambda * C(v-1,t-1); throws invalid_parameters
// when r is not a positive integer.
long replication_number(int t, long v, long k, long lambda);
inline long replication_number(const DesignParams& p) {
    return replication_number(p.t, p.v, p.k, p.lambda);
}

// The s-(v,k,lambda_s) design parameters induced by a t-design, 0 <= s <= t.
DesignParams reduce_strength(const DesignParams& p, int s);

// True iff every column of D sums to k and every t-subset of rows has
// coordinatewise product lambda. Dimensions must match (v, b).
bool verify_design(const IncidenceMatrix& D, const DesignParams& p);

} // namespace hforge
