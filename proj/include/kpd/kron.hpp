#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "kpd/matrix.hpp"

namespace kpd {

/// Declares how an (m*n)x(m*n) matrix factors as M_m (x) M_n.
class FactorShape {
public:
    FactorShape(std::size_t m, std::size_t n);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_ * n_; }
    FactorShape swapped() const { return {n_, m_}; }

    /// Throws Errc::shape_mismatch unless `a` is size() x size().
    void require_conforming(const Matrix& a) const;

    /// Parses "<m>x<n>".
    static FactorShape parse(std::string_view text);

    friend bool operator==(const FactorShape&, const FactorShape&) = default;

private:
    std::size_t m_;
    std::size_t n_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// b (x) I_n + I_m (x) c for b m x m and c n x n.
Matrix kron_sum(const Matrix& b, const Matrix& c);

/// Perfect shuffle P with P e_{(i-1)n+j} = e_{(j-1)m+i}; P (B (x) C) P^T = C (x) B.
Matrix shuffle(const FactorShape& shape, const Field& field);

// Two decompositions of an (mn)x(mn) matrix M:
//
//   right-indexed slices  M = sum_{i,j<=n} A_ij (x) E_ij^[n],  A_ij is m x m
//   left-indexed blocks   M = sum_{i,j<=m} E_ij^[m] (x) B_ij,  B_ij is n x n
//
// det_1/tr_1 act on slices and produce n x n results; det_2/tr_2/transpose_2 act
// on blocks and produce m x m (or mn x mn) results.

/// (A_ij)_{kl} = M_{(k-1)n+i, (l-1)n+j}
Matrix slice(const Matrix& a, const FactorShape& shape, std::size_t i, std::size_t j);
/// (B_ij)_{kl} = M_{(i-1)n+k, (j-1)n+l}
Matrix block(const Matrix& a, const FactorShape& shape, std::size_t i, std::size_t j);

/// Replaces every slice A_ij by g(A_ij), which must be r x r for a fixed r:
/// sum_ij g(A_ij) (x) E_ij^[n].
Matrix map_slices(const Matrix& a, const FactorShape& shape, const std::function<Matrix(const Matrix&)>& g);
/// Replaces every block B_ij by g(B_ij): sum_ij E_ij^[m] (x) g(B_ij).
Matrix map_blocks(const Matrix& a, const FactorShape& shape, const std::function<Matrix(const Matrix&)>& g);

Matrix partial_det_1(const Matrix& a, const FactorShape& shape);
Matrix partial_det_2(const Matrix& a, const FactorShape& shape);
Matrix partial_trace_1(const Matrix& a, const FactorShape& shape);
Matrix partial_trace_2(const Matrix& a, const FactorShape& shape);
Matrix partial_transpose_2(const Matrix& a, const FactorShape& shape);

/// True when every block satisfies B_ij^T = B_ij.
bool is_blockwise_symmetric(const Matrix& a, const FactorShape& shape);

/// Phi(C, D) = sum_{i,j} E_ji^[n] (x) (C_i D_(j)), with C_i column i of C and
/// D_(j) row j of D. Block (k,l) is C_l D_(k), which gives
/// tr_1(Phi) = CD and tr_2(Phi) = DC.
Matrix phi(const Matrix& c, const Matrix& d);

/// Recovers (A, B) with M = A (x) B when M is a Kronecker product of the given
/// shape. Exact fields only; returns nullopt for non-products.
std::optional<std::pair<Matrix, Matrix>> kron_factor(const Matrix& a, const FactorShape& shape);

}  // namespace kpd
