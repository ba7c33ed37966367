#include "hforge/io.hpp"

#include <fstream>
#include <sstream>

namespace hforge {

std::string to_text(const SignMatrix& M) {
    std::ostringstream os;
    os << "H " << M.n_rows() << ' ' << M.n_cols() << '\n';
    for (std::size_t i = 0; i < M.n_rows(); ++i) {
        for (std::size_t j = 0; j < M.n_cols(); ++j)
            os << (M.get(i, j) > 0 ? '+' : '-');
        os << '\n';
    }
    return os.str();
}

std::string to_text(const IncidenceMatrix& D) {
    std::ostringstream os;
    os << "D " << D.v() << ' ' << D.b() << '\n';
    for (std::size_t i = 0; i < D.v(); ++i) {
        for (std::size_t j = 0; j < D.b(); ++j)
            os << (D.get(i, j) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

SignMatrix sign_from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw parse_error("sign_from_rows: no rows");
    SignMatrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw parse_error("sign_from_rows: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            char c = rows[i][j];
            if (c == '+' || c == '1')
                M.set(i, j, +1);
            else if (c == '-')
                M.set(i, j, -1);
            else
                throw parse_error(std::string("sign_from_rows: bad character '") + c + "'");
        }
    }
    return M;
}

IncidenceMatrix incidence_from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw parse_error("incidence_from_rows: no rows");
    IncidenceMatrix D(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw parse_error("incidence_from_rows: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            char c = rows[i][j];
            if (c == '1')
                D.set(i, j, true);
            else if (c != '0')
                throw parse_error(std::string("incidence_from_rows: bad character '") + c + "'");
        }
    }
    return D;
}

namespace {

AnyMatrix parse_one(char kind, std::size_t rows, std::size_t cols,
                    const std::vector<std::string>& body) {
    if (body.size() != rows) throw parse_error("matrix body has wrong row count");
    for (const auto& r : body)
        if (r.size() != cols) throw parse_error("matrix row has wrong length");
    AnyMatrix m;
    m.kind = kind;
    if (kind == 'H')
        m.sign = sign_from_rows(body);
    else
        m.incidence = incidence_from_rows(body);
    return m;
}

} // namespace

std::vector<AnyMatrix> read_matrix_file(std::istream& in) {
    std::vector<AnyMatrix> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream hs(line);
        char kind;
        std::size_t rows, cols;
        if (!(hs >> kind >> rows >> cols) || (kind != 'H' && kind != 'D'))
            throw parse_error("bad matrix header: " + line);
        std::vector<std::string> body;
        while (body.size() < rows && std::getline(in, line)) {
            if (line.empty()) throw parse_error("unexpected blank line inside matrix body");
            body.push_back(line);
        }
        out.push_back(parse_one(kind, rows, cols, body));
    }
    return out;
}

std::vector<AnyMatrix> read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    return read_matrix_file(f);
}

void write_matrix_file(std::ostream& out, const std::vector<AnyMatrix>& ms) {
    bool first = true;
    for (const auto& m : ms) {
        if (!first) out << '\n';
        first = false;
        out << (m.kind == 'H' ? to_text(m.sign) : to_text(m.incidence));
    }
}

SignMatrix sign_from_text(const std::string& text) {
    std::istringstream is(text);
    auto ms = read_matrix_file(is);
    if (ms.size() != 1 || ms[0].kind != 'H') throw parse_error("expected one H matrix");
    return ms[0].sign;
}

IncidenceMatrix incidence_from_text(const std::string& text) {
    std::istringstream is(text);
    auto ms = read_matrix_file(is);
    if (ms.size() != 1 || ms[0].kind != 'D') throw parse_error("expected one D matrix");
    return ms[0].incidence;
}

} // namespace hforge
