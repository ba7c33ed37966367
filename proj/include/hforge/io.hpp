#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hforge/incidence_matrix.hpp"
#include "hforge/sign_matrix.hpp"

namespace hforge {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: header "H rows cols" (sign matrix, entries '+'/'-') or
// "D rows cols" (incidence matrix, entries '0'/'1'), then one line per row.
// A blank line separates matrices in a multi-matrix file.

std::string to_text(const SignMatrix& M);
std::string to_text(const IncidenceMatrix& D);

SignMatrix sign_from_text(const std::string& text);
IncidenceMatrix incidence_from_text(const std::string& text);

// Convenience builders for literals in tests and fixtures.
SignMatrix sign_from_rows(const std::vector<std::string>& rows);     // '+'/'-' (or '1'/'-')
IncidenceMatrix incidence_from_rows(const std::vector<std::string>& rows); // '0'/'1'

struct AnyMatrix {
    char kind; // 'H' or 'D'
    SignMatrix sign;
    IncidenceMatrix incidence;
};

std::vector<AnyMatrix> read_matrix_file(std::istream& in);
std::vector<AnyMatrix> read_matrix_file(const std::string& path);
void write_matrix_file(std::ostream& out, const std::vector<AnyMatrix>& ms);

} // namespace hforge
