#include "kpd/matrix.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

namespace kpd {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (!(a.field() == b.field())) {
        throw Error(Errc::field_mismatch, std::string(op) + ": " + a.field().name() + " vs " + b.field().name());
    }
}

std::string shape_str(const Matrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) throw Error(Errc::shape_mismatch, std::string(op) + " needs a square matrix, got " + shape_str(a));
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : Matrix(field, rows, cols, std::vector<Scalar>(rows * cols, field.zero())) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(Errc::shape_mismatch, "zero-dimension matrix");
    if (entries_.size() != rows * cols) {
        throw Error(Errc::shape_mismatch, "entry count " + std::to_string(entries_.size()) + " does not match " +
                                              std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (const auto& e : entries_) {
        if (e.kind() != field_.kind()) throw Error(Errc::field_mismatch, "entry does not belong to " + field_.name());
    }
}

Matrix Matrix::generate(Field field, std::size_t rows, std::size_t cols,
                        const std::function<Scalar(std::size_t, std::size_t)>& fn) {
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j <= cols; ++j) entries.push_back(fn(i, j));
    }
    return Matrix(field, rows, cols, std::move(entries));
}

Matrix Matrix::identity(Field field, std::size_t n) {
    return generate(field, n, n, [&](std::size_t i, std::size_t j) { return i == j ? field.one() : field.zero(); });
}

Matrix Matrix::basis(Field field, std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > n) {
        throw Error(Errc::index_out_of_range, "basis index (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") outside 1.." + std::to_string(n));
    }
    return generate(field, n, n,
                    [&](std::size_t k, std::size_t l) { return k == i && l == j ? field.one() : field.zero(); });
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Scalar> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(Errc::shape_mismatch, "ragged row list");
        for (long long v : row) entries.push_back(field.from_int(v));
    }
    return Matrix(field, r, c, std::move(entries));
}

Matrix Matrix::diagonal(Field field, const std::vector<Scalar>& diag) {
    return generate(field, diag.size(), diag.size(),
                    [&](std::size_t i, std::size_t j) { return i == j ? diag[i - 1] : field.zero(); });
}

const Scalar& Matrix::operator()(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw Error(Errc::index_out_of_range, "(" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return entries_[(i - 1) * cols_ + (j - 1)];
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (!a.field_.eq(a.entries_[k], b.entries_[k])) return false;
    }
    return true;
}

Matrix basis_matrix(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
    return Matrix::basis(field, n, i, j);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b, "matmul");
    if (a.cols() != b.rows()) throw Error(Errc::shape_mismatch, "matmul " + shape_str(a) + " * " + shape_str(b));
    const Field& f = a.field();
    const auto ea = a.entries(), eb = b.entries();
    const std::size_t inner = a.cols(), bc = b.cols();
    return Matrix::generate(f, a.rows(), bc, [&](std::size_t i, std::size_t j) {
        Scalar acc = f.zero();
        for (std::size_t k = 0; k < inner; ++k) {
            acc = f.add(acc, f.mul(ea[(i - 1) * inner + k], eb[k * bc + (j - 1)]));
        }
        return acc;
    });
}

namespace {

template <typename Op>
Matrix zip(const Matrix& a, const Matrix& b, const char* name, Op op) {
    require_same_field(a, b, name);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(Errc::shape_mismatch, std::string(name) + " " + shape_str(a) + " vs " + shape_str(b));
    }
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(op(a.entries()[k], b.entries()[k]));
    return Matrix(a.field(), a.rows(), a.cols(), std::move(out));
}

template <typename Op>
Matrix map(const Matrix& a, Op op) {
    std::vector<Scalar> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(op(e));
    return Matrix(a.field(), a.rows(), a.cols(), std::move(out));
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    return zip(a, b, "add", [&](const Scalar& x, const Scalar& y) { return f.add(x, y); });
}

Matrix sub(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    return zip(a, b, "sub", [&](const Scalar& x, const Scalar& y) { return f.sub(x, y); });
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    return zip(a, b, "hadamard", [&](const Scalar& x, const Scalar& y) { return f.mul(x, y); });
}

Matrix hadamard_power(const Matrix& a, std::uint64_t m) {
    if (m == 0) throw Error(Errc::invalid_argument, "Hadamard power must be at least 1");
    const Field& f = a.field();
    return map(a, [&](const Scalar& x) { return f.pow(x, m); });
}

Matrix scale(const Scalar& c, const Matrix& a) {
    const Field& f = a.field();
    return map(a, [&](const Scalar& x) { return f.mul(c, x); });
}

Matrix transpose(const Matrix& a) {
    return Matrix::generate(a.field(), a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

Matrix matrix_power(const Matrix& a, std::uint64_t k) {
    require_square(a, "matrix_power");
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1u) result = matmul(result, base);
        k >>= 1;
        if (k > 0) base = matmul(base, base);
    }
    return result;
}

Scalar trace(const Matrix& a) {
    require_square(a, "trace");
    const Field& f = a.field();
    Scalar acc = f.zero();
    for (std::size_t i = 1; i <= a.rows(); ++i) acc = f.add(acc, a(i, i));
    return acc;
}

namespace {

// Clears denominators row by row, then runs integer Bareiss elimination.
Scalar det_rational(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<mpz_class> m(n * n);
    mpz_class denominator = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a.entries()[i * n + j].rational().get_den_mpz_t());
        }
        denominator *= row_lcm;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = a.entries()[i * n + j].rational();
            m[i * n + j] = q.get_num() * (row_lcm / q.get_den());
        }
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return Scalar(Rational(0));
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k * n + k];
    }
    mpz_class d = m[n * n - 1];
    if (sign < 0) d = -d;
    return Scalar(Rational(d, denominator));
}

Scalar det_prime(const Matrix& a) {
    const std::size_t n = a.rows();
    const std::uint64_t p = a.field().modulus();
    std::vector<std::uint64_t> m(n * n);
    for (std::size_t k = 0; k < n * n; ++k) m[k] = a.entries()[k].residue();

    auto inverse = [p](std::uint64_t x) {
        std::uint64_t result = 1, e = p - 2;
        while (e > 0) {
            if (e & 1u) result = result * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return result;
    };

    std::uint64_t d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv * n + k] == 0) ++piv;
        if (piv == n) return Scalar(Residue{0});
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            d = (p - d) % p;
        }
        const std::uint64_t pivot = m[k * n + k];
        d = d * pivot % p;
        const std::uint64_t pinv = inverse(pivot);
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::uint64_t factor = m[i * n + k] * pinv % p;
            if (factor == 0) continue;
            for (std::size_t j = k; j < n; ++j) {
                m[i * n + j] = (m[i * n + j] + (p - factor) * m[k * n + j]) % p;
            }
        }
    }
    return Scalar(Residue{static_cast<std::uint32_t>(d)});
}

Scalar det_complex(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<Complex> m(n * n);
    for (std::size_t k = 0; k < n * n; ++k) m[k] = a.entries()[k].complex();
    Complex d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
        }
        if (m[piv * n + k] == Complex(0.0, 0.0)) return Scalar(Complex(0.0, 0.0));
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            d = -d;
        }
        d *= m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex factor = m[i * n + k] / m[k * n + k];
            for (std::size_t j = k; j < n; ++j) m[i * n + j] -= factor * m[k * n + j];
        }
    }
    return Scalar(d);
}

}  // namespace

Scalar det(const Matrix& a) {
    require_square(a, "det");
    switch (a.field().kind()) {
    case FieldKind::rational: return det_rational(a);
    case FieldKind::prime: return det_prime(a);
    case FieldKind::complex64: return det_complex(a);
    }
    return a.field().zero();
}

Matrix rank1(const Matrix& x, const Matrix& y) {
    require_same_field(x, y, "rank1");
    if (x.cols() != 1 || y.cols() != 1) throw Error(Errc::shape_mismatch, "rank1 expects column vectors");
    const Field& f = x.field();
    return Matrix::generate(f, x.rows(), y.rows(), [&](std::size_t i, std::size_t j) { return f.mul(x(i, 1), y(j, 1)); });
}

bool is_upper_triangular(const Matrix& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 2; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            if (!a.field().is_zero(a(i, j))) return false;
        }
    }
    return true;
}

bool is_lower_triangular(const Matrix& a) { return a.is_square() && is_upper_triangular(transpose(a)); }

bool is_triangular(const Matrix& a) { return is_upper_triangular(a) || is_lower_triangular(a); }

bool is_diagonal(const Matrix& a) { return is_upper_triangular(a) && is_lower_triangular(a); }

bool is_zero_one(const Matrix& a) {
    for (const auto& e : a.entries()) {
        if (!a.field().is_zero(e) && !a.field().is_one(e)) return false;
    }
    return true;
}

bool is_permutation(const Matrix& a) {
    if (!a.is_square() || !is_zero_one(a)) return false;
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t row_ones = 0, col_ones = 0;
        for (std::size_t j = 1; j <= n; ++j) {
            row_ones += a.field().is_one(a(i, j)) ? 1 : 0;
            col_ones += a.field().is_one(a(j, i)) ? 1 : 0;
        }
        if (row_ones != 1 || col_ones != 1) return false;
    }
    return true;
}

bool is_zero(const Matrix& a) { return nnz(a) == 0; }

std::size_t nnz(const Matrix& a) {
    std::size_t count = 0;
    for (const auto& e : a.entries()) count += a.field().is_zero(e) ? 0 : 1;
    return count;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::vector<Token> tokenize_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    return out;
}

std::size_t parse_dim(const Token& t) {
    std::size_t v = 0;
    for (char c : t.text) {
        if (c < '0' || c > '9') parse_fail(t.line, t.column, "expected a positive dimension, got '" + std::string(t.text) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (v == 0) parse_fail(t.line, t.column, "dimension must be positive");
    return v;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto tokens = tokenize_line(text.substr(pos, end - pos), line_no);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        pos = end + 1;
    }
    if (lines.empty()) parse_fail(1, 1, "empty input");

    const auto& header = lines[0];
    if (header.size() != 2 || header[0].text != "field") {
        parse_fail(header[0].line, header[0].column, "expected 'field <rat|gf:p|c64>'");
    }
    Field field = Field::rational();
    try {
        field = Field::parse(header[1].text);
    } catch (const Error& e) {
        parse_fail(header[1].line, header[1].column, e.what());
    }

    if (lines.size() < 2) parse_fail(header[0].line + 1, 1, "missing '<rows> <cols>' line");
    const auto& dims = lines[1];
    if (dims.size() != 2) parse_fail(dims[0].line, dims[0].column, "expected '<rows> <cols>'");
    const std::size_t rows = parse_dim(dims[0]);
    const std::size_t cols = parse_dim(dims[1]);

    if (lines.size() != rows + 2) {
        const auto& last = lines.back();
        parse_fail(last.back().line, 1, "expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 2));
    }
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = lines[r + 2];
        if (row.size() != cols) {
            parse_fail(row[0].line, row.size() > cols ? row[cols].column : row.back().column,
                       "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
        }
        for (const auto& tok : row) {
            try {
                entries.push_back(field.parse_scalar(tok.text));
            } catch (const Error& e) {
                parse_fail(tok.line, tok.column, e.what());
            }
        }
    }
    return Matrix(field, rows, cols, std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::invalid_input, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_matrix(ss.str());
    } catch (const Error& e) {
        throw Error(Errc::parse_error, path + ": " + e.what());
    }
}

std::string format_matrix(const Matrix& a) {
    std::string out = "field " + a.field().name() + "\n";
    out += std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        for (std::size_t j = 1; j <= a.cols(); ++j) {
            if (j > 1) out += ' ';
            out += a.field().format(a(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const std::string& path, const Matrix& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + path + "'");
    out << format_matrix(a);
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) { return os << format_matrix(a); }

}  // namespace kpd
