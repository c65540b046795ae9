#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "kpd/error.hpp"

namespace kpd {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Residue class modulo the prime of the owning field, always in [0, p).
struct Residue {
    std::uint32_t value = 0;
    friend bool operator==(Residue, Residue) = default;
};

enum class FieldKind { rational, prime, complex64 };

/// An element of one of the supported fields. The payload alternative matches
/// the FieldKind of the field it was produced by; arithmetic goes through Field.
class Scalar {
public:
    Scalar(Rational q) : value_(std::move(q)) { value_canonicalize(); }
    Scalar(Residue r) : value_(r) {}
    Scalar(Complex z) : value_(z) {}

    FieldKind kind() const noexcept { return static_cast<FieldKind>(value_.index()); }

    const Rational& rational() const { return std::get<Rational>(value_); }
    std::uint32_t residue() const { return std::get<Residue>(value_).value; }
    Complex complex() const { return std::get<Complex>(value_); }

private:
    void value_canonicalize();

    std::variant<Rational, Residue, Complex> value_;
};

/// Describes a field and provides its arithmetic. Small and cheap to copy.
///
/// Exact backends (rational, prime) compare bit-exactly. The complex64 backend
/// compares with |x - y| <= tol * max(1, |x|, |y|).
class Field {
public:
    static constexpr double default_tolerance = 1e-9;

    static Field rational();
    /// Throws Errc::invalid_field unless `p` is a prime below 2^31.
    static Field prime(std::uint32_t p);
    static Field complex64(double tolerance = default_tolerance);
    /// Parses `rat`, `gf:<p>` or `c64`.
    static Field parse(std::string_view text);

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    double tolerance() const noexcept { return tolerance_; }
    std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::prime ? modulus_ : 0; }
    bool is_exact() const noexcept { return kind_ != FieldKind::complex64; }
    bool is_ordered() const noexcept { return kind_ == FieldKind::rational; }
    bool is_finite() const noexcept { return kind_ == FieldKind::prime; }

    /// Canonical name, the inverse of parse().
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    /// a^e with a^0 = 1 for every a, including 0.
    Scalar pow(const Scalar& a, std::uint64_t e) const;

    bool eq(const Scalar& a, const Scalar& b) const;
    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const { return eq(a, one()); }

    /// Magnitude as a double (absolute value for rationals and complex numbers,
    /// the residue itself for prime fields). Used for diagnostics only.
    double magnitude(const Scalar& a) const;
    /// Sign of a rational; Errc::unsupported_field elsewhere.
    int sign(const Scalar& a) const;

    /// All p elements 0..p-1 of a prime field; Errc::not_enumerable otherwise.
    std::vector<Scalar> elements() const;

    /// { a : a^m = b }. Empty when b has no m-th root in this field.
    std::vector<Scalar> mth_roots(const Scalar& b, std::uint64_t m) const;

    std::string format(const Scalar& a) const;
    /// Parses the scalar text syntax; GF(p) literals are reduced on read.
    Scalar parse_scalar(std::string_view text) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.tolerance_ == b.tolerance_;
    }

private:
    Field(FieldKind kind, std::uint32_t modulus, double tolerance)
        : kind_(kind), modulus_(modulus), tolerance_(tolerance) {}

    void require(const Scalar& a) const;

    FieldKind kind_;
    std::uint32_t modulus_;
    double tolerance_;
};

/// Operation suite for a descriptor. Field is both; kept for symmetry with the
/// enumeration helpers below.
inline Field field_ops(const Field& desc) { return desc; }

inline std::vector<Scalar> enumerate_field(const Field& f) { return f.elements(); }

inline std::vector<Scalar> mth_roots(const Field& f, const Scalar& b, std::uint64_t m) {
    return f.mth_roots(b, m);
}

bool is_prime(std::uint64_t p) noexcept;

}  // namespace kpd
