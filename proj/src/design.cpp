#include "hforge/design.hpp"

#include <string>

namespace hforge {

namespace {

// C(n, k) as unsigned 64-bit; inputs here are small (t <= 3 in practice).
unsigned long long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    unsigned long long r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

} // namespace

long replication_number(int t, long v, long k, long lambda) {
    unsigned long long num = static_cast<unsigned long long>(lambda) * binom(v - 1, t - 1);
    unsigned long long den = binom(k - 1, t - 1);
    if (den == 0) throw invalid_parameters("replication_number: zero binomial");
    if (num % den != 0)
        throw invalid_parameters("replication_number: non-integral r for t-(" +
                                 std::to_string(v) + "," + std::to_string(k) + "," +
                                 std::to_string(lambda) + ")");
    long r = static_cast<long>(num / den);
    if (r <= 0) throw invalid_parameters("replication_number: r must be positive");
    return r;
}

DesignParams::DesignParams(int t, long v, long k, long lambda)
    : t(t), v(v), k(k), lambda(lambda) {
    if (t <= 0 || t > k || k >= v)
        throw invalid_parameters("DesignParams: need 0 < t <= k < v");
    if (lambda < 1) throw invalid_parameters("DesignParams: lambda must be positive");
    r = replication_number(t, v, k, lambda);
    unsigned long long num = static_cast<unsigned long long>(v) * r;
    if (num % static_cast<unsigned long long>(k) != 0)
        throw invalid_parameters("DesignParams: non-integral block count b");
    b = static_cast<long>(num / k);
}

DesignParams reduce_strength(const DesignParams& p, int s) {
    if (s < 0 || s > p.t) throw invalid_parameters("reduce_strength: need 0 <= s <= t");
    if (s == p.t) return p;
    if (s == 0) throw invalid_parameters("reduce_strength: s = 0 has no DesignParams form");
    unsigned long long num = static_cast<unsigned long long>(p.lambda);
    unsigned long long den = 1;
    for (long i = s; i < p.t; ++i) {
        num *= static_cast<unsigned long long>(p.v - i);
        den *= static_cast<unsigned long long>(p.k - i);
    }
    if (den == 0 || num % den != 0)
        throw invalid_parameters("reduce_strength: non-integral lambda_s");
    return DesignParams(s, p.v, p.k, static_cast<long>(num / den));
}

bool verify_design(const IncidenceMatrix& D, const DesignParams& p) {
    if (static_cast<long>(D.v()) != p.v || static_cast<long>(D.b()) != p.b) return false;
    std::size_t v = D.v();
    for (std::size_t j = 0; j < D.b(); ++j)
        if (static_cast<long>(D.col_sum(j)) != p.k) return false;
    if (p.t == 2) {
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j)
                if (static_cast<long>(D.pair_product(i, j)) != p.lambda) return false;
    } else if (p.t == 3) {
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = i + 1; j < v; ++j)
                for (std::size_t s = j + 1; s < v; ++s)
                    if (static_cast<long>(D.triple_product(i, j, s)) != p.lambda) return false;
    } else if (p.t == 1) {
        for (std::size_t i = 0; i < v; ++i)
            if (static_cast<long>(D.row_sum(i)) != p.lambda) return false;
    } else {
        return false;
    }
    return true;
}

} // namespace hforge
