#include "hforge/hadamard.hpp"

namespace hforge {

bool is_hadamard(const SignMatrix& M) {
    if (M.n_rows() != M.n_cols() || M.n_rows() == 0) return false;
    std::size_t n = M.n_rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (M.row_dot(i, j) != 0) return false;
    return true;
}

static void require_hadamard(const SignMatrix& M, const char* op) {
    if (!is_hadamard(M)) throw not_hadamard(std::string(op) + ": input is not Hadamard");
}

bool is_skew(const SignMatrix& M) {
    require_hadamard(M, "is_skew");
    std::size_t n = M.n_rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (M.get(i, i) != 1) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (M.get(i, j) + M.get(j, i) != 0) return false;
    }
    return true;
}

SignMatrix normalize(const SignMatrix& M) {
    require_hadamard(M, "normalize");
    SignMatrix R = M;
    std::size_t n = R.n_rows();
    for (std::size_t j = 0; j < n; ++j)
        if (R.get(0, j) < 0) R.negate_col(j);
    for (std::size_t i = 0; i < n; ++i)
        if (R.get(i, 0) < 0) R.negate_row(i);
    return R;
}

RegularityReport regularity(const SignMatrix& M) {
    RegularityReport rep;
    if (M.n_rows() != M.n_cols() || M.n_rows() == 0) return rep;
    std::size_t n = M.n_rows();
    long rs = M.row_sum(0);
    for (std::size_t i = 1; i < n; ++i)
        if (M.row_sum(i) != rs) return rep;
    long cs = M.col_sum(0);
    for (std::size_t j = 1; j < n; ++j)
        if (M.col_sum(j) != cs) return rep;
    if (rs != cs) return rep; // cannot happen when both are constant
    rep.is_regular = true;
    rep.row_sum = rs;
    rep.col_sum = cs;
    return rep;
}

IncidenceMatrix hadamard_to_2design(const SignMatrix& M) {
    require_hadamard(M, "hadamard_to_2design");
    std::size_t n = M.n_rows();
    if (n < 8) throw invalid_parameters("hadamard_to_2design: order too small (need 4a >= 8)");
    SignMatrix N = normalize(M);
    IncidenceMatrix D(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            D.set(i - 1, j - 1, N.get(i, j) > 0);
    return D;
}

SignMatrix design2_to_hadamard(const IncidenceMatrix& D) {
    if (D.v() != D.b() || D.v() < 7 || D.v() % 4 != 3)
        throw invalid_parameters("design2_to_hadamard: not a symmetric 2-(4a-1,2a-1,a-1) shape");
    long a = (static_cast<long>(D.v()) + 1) / 4;
    DesignParams p(2, 4 * a - 1, 2 * a - 1, a - 1);
    if (!verify_design(D, p))
        throw invalid_parameters("design2_to_hadamard: input fails the design axioms");
    std::size_t n = D.v() + 1;
    SignMatrix H(n, n);
    for (std::size_t j = 0; j < n; ++j) H.set(0, j, +1);
    for (std::size_t i = 1; i < n; ++i) {
        H.set(i, 0, +1);
        for (std::size_t j = 1; j < n; ++j)
            H.set(i, j, D.get(i - 1, j - 1) ? +1 : -1);
    }
    return H;
}

IncidenceMatrix hadamard_to_3design(const SignMatrix& M, std::size_t fixed) {
    require_hadamard(M, "hadamard_to_3design");
    std::size_t n = M.n_rows();
    if (n < 4) throw invalid_parameters("hadamard_to_3design: order too small");
    IncidenceMatrix D(n, 2 * (n - 1));
    std::size_t blk = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (s == fixed) continue;
        for (std::size_t j = 0; j < n; ++j) {
            bool match = M.get(fixed, j) == M.get(s, j);
            D.set(j, blk, match);
            D.set(j, blk + (n - 1), !match);
        }
        ++blk;
    }
    return D;
}

std::vector<IncidenceMatrix> hadamard_to_3designs(const SignMatrix& M) {
    require_hadamard(M, "hadamard_to_3designs");
    std::size_t n = M.n_rows();
    if (n < 4) throw invalid_parameters("hadamard_to_3designs: order too small");
    std::vector<IncidenceMatrix> out;
    out.reserve(n);
    for (std::size_t f = 0; f < n; ++f) out.push_back(hadamard_to_3design(M, f));
    return out;
}

} // namespace hforge
