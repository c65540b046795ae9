#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kpd/kron.hpp"
#include "kpd/report.hpp"

namespace kpd {

// Every checker below evaluates both sides of one identity or characterization
// on a single instance and returns a LawReport. Exact fields compare exactly.
// Checkers named after an iff statement record both sides so that
// LawReport::consistent() audits the equivalence.

/// det_1(A (x) B) = det(A) B^(m).
LawReport check_lemma_hp(const Matrix& a, const Matrix& b);

/// det(det_1(A (x) B)) = det(A (x) B)  <=>  det(A) = 0 or det(B^(m)) = det(B)^m.
/// The right-hand determinant is taken on the (mn)x(mn) matrix itself.
LawReport check_completability(const Matrix& a, const Matrix& b);

/// (0,1)-matrix B: completion <=> det(A)det(B) = 0 or det(B)^(m-1) = 1.
LawReport check_part01(const Matrix& a, const Matrix& b);

/// 2x2 B = [[a,b],[c,d]]: det(B^(2)) = det(B)^2  <=>  b^2 c^2 = abcd.
/// Characteristic != 2.
LawReport check_2x2_boundary(const Matrix& b);

/// det_1((A (x) C)(B (x) D)) = det_1(A (x) C) det_1(B (x) D)
///   <=>  det(AB) = 0 or (CD)^(m) = C^(m) D^(m).
LawReport check_multiplicativity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// P a permutation or diagonal matrix:
///   det_1((AB) (x) (PC)) = det_1(A (x) P) det_1(B (x) C)
///   det_1((AB) (x) (CP)) = det_1(A (x) C) det_1(B (x) P)
LawReport check_mulperm(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& p);

/// B o D = 0  =>  det_1(A (x) B + C (x) D) = det_1(A (x) B) + det_1(C (x) D).
LawReport check_sum_additivity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Additivity det_1(A (x) (B + C)) = det_1(A (x) B) + det_1(A (x) C) for every
/// m = 1..m_max, with a fresh non-singular m x m A drawn from `seed` per m,
/// against B o C = 0. Needs characteristic != 2 and m_max >= 2.
LawReport check_sum_iff(const Matrix& b, const Matrix& c, std::uint64_t m_max, std::uint64_t seed);

// Symmetric polynomials.
Scalar power_sum(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m);
Scalar elementary_symmetric(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m);
/// Determinant of the m x m Newton-Girard matrix built from e_1..e_m; this is
/// p_m in characteristic 0.
Scalar newton_girard_det(const Field& f, const std::vector<Scalar>& es);

/// newton_girard_det(e_1..e_m of xs) = p_m(xs).
LawReport check_newton_girard(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m);

/// p_m(xs) = e_1(xs)^m for all m <= m_max  <=>  x_j x_k = 0 for j != k.
/// Characteristic 0 only; m_max must be at least the number of variables.
LawReport check_lemma_ng(const Field& f, const std::vector<Scalar>& xs, std::uint64_t m_max);

/// Predicates for one pair (C, D) over an ordered field:
///   T1   (CD)^(m) = C^(m) D^(m) for all m <= m_max
///   T2a  the m = 2 case
///   T2b  every (CD)_ij equals a single term C_ik D_kj
///   COND C_ik D_kj C_ik' D_k'j = 0 for all i, j and k != k'
/// Checks T1 <=> (T2a and T2b) and (T2a and T2b) <=> COND. m_max >= n.
LawReport check_monequiv(const Matrix& c, const Matrix& d, std::uint64_t m_max);

/// Index pairs (i, j), i < j, whose 2x2 corner submatrix of C has a non-zero
/// product among C_ii C_ii C_ij C_ji, C_ii C_ij C_ij C_jj, C_jj C_jj C_ji C_ij,
/// C_ji C_ii C_jj C_ji.
std::vector<std::pair<std::size_t, std::size_t>> classify_2x2_submatrices(const Matrix& c);

/// If (C, C) satisfies T1 then every 2x2 corner submatrix has one of the six
/// admissible forms.
LawReport check_submatrix_forms(const Matrix& c, std::uint64_t m_max);

bool in_diagonal_family(const Matrix& c);
bool in_single_row_family(const Matrix& c);
bool in_single_column_family(const Matrix& c);

/// 2x2, ordered field. If C and D both lie in D_2 u C_2 (or both in D_2 u R_2)
/// then det(X^(m)) = det(X)^m for X in {C, D} and the Hadamard power
/// distributes over CD and DC for every m <= m_max.
LawReport check_monoid_2x2(const Matrix& c, const Matrix& d, std::uint64_t m_max);

/// Checks multiplicativity on every (A, B, C, D) in M_m(GF(2))^2 x M_n(GF(2))^2
/// when there are at most 2^20 tuples. Larger sweeps are sampled with `seed`
/// when `samples` > 0 and raise Errc::sweep_too_large otherwise.
LawReport exhaustive_gf2_multiplicativity(std::size_t m, std::size_t n, std::uint64_t seed = 0,
                                          std::uint64_t samples = 0);

struct TriangularizationSearch {
    std::optional<std::pair<Matrix, Matrix>> found;  // (P, Q) with P B Q^T triangular
    std::uint64_t pairs_examined = 0;
};

/// Exhaustive search over all n!^2 permutation pairs; n <= 6.
TriangularizationSearch search_permutation_triangularization(const Matrix& b);

/// The 4x4 (0,1)-matrix with 7 non-zero entries that admits no triangularizing
/// permutation pair.
Matrix counterexample_4x4(const Field& f);

enum class CompletionKind { trace, det, transpose };

/// g(M) = g(f(M)) for the partial operation f of g:
///   trace      always holds (both partial traces)
///   det        det(det_1(M)) = det(M); for Kronecker M the completability
///              condition is attached
///   transpose  holds <=> M is block-wise symmetric
LawReport check_completion(CompletionKind kind, const Matrix& a, const FactorShape& shape);

/// Phi identities: tr_1(Phi) = CD, tr_2(Phi) = DC, Phi equals its triple
/// product form, Phi^(m) = Phi(C^(m), D^(m)) and
/// tr_1(Phi^(m)) = (tr_1 Phi)^(m)  <=>  (CD)^(m) = C^(m) D^(m), m <= m_max.
LawReport check_phi(const Matrix& c, const Matrix& d, std::uint64_t m_max);

/// det(det_2(B)) >= det(B) - tol for Hermitian positive definite B, with
/// equality within tol when B is block-diagonal; tol = 1e-9 (1 + |det B|).
/// Raises Errc::invalid_input for inputs that are not Hermitian positive
/// definite.
LawReport check_thompson_psd(const Matrix& b, const FactorShape& shape);

/// The unconditioned claim det(det_1(A (x) B)) = det(A (x) B). False in
/// general; used as a control that exercises failure reporting.
LawReport check_naive_completion(const Matrix& a, const Matrix& b);

}  // namespace kpd
