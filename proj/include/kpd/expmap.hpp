#pragma once

#include <string>

#include "kpd/kron.hpp"

namespace kpd {

/// Both sides of one exponential relation. For root-class statements lhs and
/// rhs hold the canonical powers of the classes entry by entry.
struct ExpReport {
    std::string law_id;
    Matrix lhs;
    Matrix rhs;
    /// Largest entry-wise |x - y| / max(1, |x|, |y|).
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool holds = false;
    /// Side of an equivalence, when the relation has one.
    bool condition_holds = false;

    /// For equivalences: the law and its condition agree.
    bool agrees() const noexcept { return holds == condition_holds; }
};

/// exp(A) for square complex64 A: degree-13 Pade approximant after scaling
/// A by 2^-s so that its 1-norm is at most 0.5, then s squarings.
Matrix matrix_exp(const Matrix& a);

/// Entry-wise relative deviation used by the reports.
double max_relative_deviation(const Matrix& a, const Matrix& b);

/// det(exp A) = exp(tr A), tolerance 1e-9.
ExpReport check_exp_trace_det(const Matrix& a);

/// exp(B (+) C) = exp(B) (x) exp(C), tolerance 1e-9.
ExpReport check_exp_kron_sum(const Matrix& b, const Matrix& c);

/// A = B (+) C: det_1(exp A) = exp(tr_1 A)  <=>  (exp C)^(m) = (exp C)^m.
ExpReport check_exp_partial_det(const Matrix& b, const Matrix& c);

/// tr(A)/n. Errc::undefined_normalization when the characteristic divides n.
Scalar normalized_trace(const Matrix& a);
/// Tr applied to every slice.
Matrix partial_normalized_trace_1(const Matrix& a, const FactorShape& shape);

/// Det(exp A) = class of exp(Tr A) in order n, for square complex64 A.
ExpReport check_exp_det_scalar(const Matrix& a);

/// A = B (+) C over the reals: the slice-wise Det_1(exp A) equals the class
/// exp(Tr B) R_m scaling exp(C); also checks the scalar relation on A itself.
/// Tolerance 1e-8.
ExpReport check_exp_detroot(const Matrix& b, const Matrix& c);

}  // namespace kpd
