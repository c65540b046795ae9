#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpd/algebra.hpp"

namespace kpd {

/// Dense rectangular matrix over a Field.
///
/// Values are immutable once built. Storage is row-major and 0-based; every
/// indexed accessor below takes 1-based (row, column) indices. Zero-sized
/// matrices are rejected.
class Matrix {
public:
    /// Zero matrix.
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Row-major entries; the length must be rows * cols.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    /// Builds entry (i, j) from `fn(i, j)`, 1-based.
    static Matrix generate(Field field, std::size_t rows, std::size_t cols,
                           const std::function<Scalar(std::size_t, std::size_t)>& fn);
    static Matrix identity(Field field, std::size_t n);
    /// E_ij of dimension n: a single 1 at (i, j).
    static Matrix basis(Field field, std::size_t n, std::size_t i, std::size_t j);
    /// Integer literals, one inner list per row.
    static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix diagonal(Field field, const std::vector<Scalar>& diag);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const;
    std::span<const Scalar> entries() const noexcept { return entries_; }

    /// Entry-wise comparison using the field's equality.
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

Matrix basis_matrix(const Field& field, std::size_t n, std::size_t i, std::size_t j);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix scale(const Scalar& c, const Matrix& a);
Matrix matrix_power(const Matrix& a, std::uint64_t k);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }

/// Exact fields: fraction-free Bareiss elimination over Q, pivoted Gaussian
/// elimination over GF(p). complex64: partial-pivot LU.
Scalar det(const Matrix& a);
Scalar trace(const Matrix& a);

Matrix hadamard(const Matrix& a, const Matrix& b);
/// Entry-wise m-th power, m >= 1.
Matrix hadamard_power(const Matrix& a, std::uint64_t m);

/// Outer product x * y^T of two column vectors.
Matrix rank1(const Matrix& x, const Matrix& y);

bool is_upper_triangular(const Matrix& a);
bool is_lower_triangular(const Matrix& a);
/// Upper or lower triangular.
bool is_triangular(const Matrix& a);
bool is_diagonal(const Matrix& a);
bool is_permutation(const Matrix& a);
bool is_zero_one(const Matrix& a);
bool is_zero(const Matrix& a);
std::size_t nnz(const Matrix& a);

/// Matrix text format:
///   field rat | field gf:<p> | field c64
///   <rows> <cols>
///   one line per row of whitespace-separated scalar literals
/// Parse failures raise Errc::parse_error with a line/column position.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& a);
void write_matrix_file(const std::string& path, const Matrix& a);
std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace kpd
