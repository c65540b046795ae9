#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpd/kron.hpp"
#include "kpd/report.hpp"

namespace kpd {

/// The class a * R_m in F_x / R_m, extended by the zero class.
///
/// Stored canonically as (order m, power p): the set { a : a^m = p }. Two
/// classes are equal iff their orders and powers agree, so no coset
/// representative is ever chosen. The set may be empty in the underlying field
/// (p has no m-th root); is_empty() reports that.
class RootClass {
public:
    RootClass(Field field, std::uint64_t order, Scalar power);

    const Field& field() const noexcept { return field_; }
    std::uint64_t order() const noexcept { return order_; }
    const Scalar& power() const noexcept { return power_; }

    bool is_zero() const { return field_.is_zero(power_); }
    bool is_empty() const;

    /// `root[m]{p}`
    std::string to_string() const;

    friend bool operator==(const RootClass& a, const RootClass& b);

private:
    Field field_;
    std::uint64_t order_;
    Scalar power_;
};

/// Class of a representative: (m, a^m). Never empty.
RootClass class_of(const Field& f, const Scalar& a, std::uint64_t m);
/// (m, b) when b = 0 or b has an m-th root in the field, otherwise nullopt.
std::optional<RootClass> root_of(const Field& f, const Scalar& b, std::uint64_t m);

/// Same-order product; Errc::order_mismatch otherwise.
RootClass mul(const RootClass& a, const RootClass& b);
/// h_{m,n}: a R_m -> a^n R_mn, i.e. (m, p) -> (mn, p^n).
RootClass embed(const RootClass& c, std::uint64_t n);
/// (a R_m) * (b R_n) = (a^n b^m) R_mn.
RootClass star(const RootClass& a, const RootClass& b);
/// n-th root of a class of order m, viewed in F_x / R_mn: (m, p) -> (mn, p).
RootClass nth_root_class(const RootClass& c, std::uint64_t n);

/// Determinant-root: the n-th root class of det(M) for n x n M; nullopt when
/// M is outside D_n(F).
std::optional<RootClass> Det(const Matrix& a);

/// A single root class multiplying a plain matrix entry-wise. Entry (i,j)
/// canonicalizes to (m, scale.power * body_ij^m).
class ClassScaledMatrix {
public:
    ClassScaledMatrix(RootClass scale, Matrix body);

    const RootClass& scale() const noexcept { return scale_; }
    const Matrix& body() const noexcept { return body_; }

    RootClass entry(std::size_t i, std::size_t j) const;
    std::vector<std::vector<RootClass>> canonical() const;

    /// Entry-wise canonical class equality.
    friend bool operator==(const ClassScaledMatrix& a, const ClassScaledMatrix& b);

private:
    RootClass scale_;
    Matrix body_;
};

using ClassGrid = std::vector<std::vector<RootClass>>;

bool grid_equal(const ClassGrid& a, const ClassGrid& b);
bool grid_equal(const ClassGrid& a, const ClassScaledMatrix& b);
std::string format_grid(const ClassGrid& g);

/// Det_1(A (x) B) = Det(A) B. Errc::not_in_dn when Det(A) is undefined.
ClassScaledMatrix Det1_kron(const Matrix& a, const Matrix& b);
/// Det of a class-scaled n x n matrix: (mn, scale.power^n * det(body)^m).
RootClass Det_of_scaled(const ClassScaledMatrix& s);
ClassScaledMatrix mul_scaled(const ClassScaledMatrix& a, const ClassScaledMatrix& b);

/// Definitional Det_1: Det of every slice. Errc::not_in_dn naming the first
/// slice outside D_m.
ClassGrid Det1_general(const Matrix& a, const FactorShape& shape);
/// Det_2(M) = Det_1(P M P^T) under the swapped shape.
ClassGrid Det2_general(const Matrix& a, const FactorShape& shape);

/// Det(A (x) C) = Det(Det_1(A (x) C)) for A in D_m, C in D_n, plus
/// Det(A (x) C) = Det(A) * Det(C).
LawReport check_detroot_completion(const Matrix& a, const Matrix& c);
/// Det_1((A (x) C)(B (x) D)) = Det_1(A (x) C) Det_1(B (x) D) for A, B in D_m.
LawReport check_detroot_multiplicativity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

}  // namespace kpd
