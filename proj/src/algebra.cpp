#include "kpd/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace kpd {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::invalid_field: return "InvalidField";
    case Errc::not_enumerable: return "NotEnumerable";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::not_in_dn: return "NotInDn";
    case Errc::unsupported_field: return "UnsupportedField";
    case Errc::sweep_too_large: return "SweepTooLarge";
    case Errc::search_too_large: return "SearchTooLarge";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::undefined_normalization: return "UndefinedNormalization";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

void Scalar::value_canonicalize() {
    std::get<Rational>(value_).canonicalize();
}

bool is_prime(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::rational() { return Field(FieldKind::rational, 0, 0.0); }

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw Error(Errc::invalid_field, "modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(FieldKind::prime, p, 0.0);
}

Field Field::complex64(double tolerance) {
    if (!(tolerance >= 0.0)) throw Error(Errc::invalid_field, "tolerance must be non-negative");
    return Field(FieldKind::complex64, 0, tolerance);
}

Field Field::parse(std::string_view text) {
    if (text == "rat") return rational();
    if (text == "c64") return complex64();
    if (text.starts_with("gf:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty() || p >= (1ull << 31)) {
            throw Error(Errc::invalid_field, "bad modulus in '" + std::string(text) + "'");
        }
        return prime(static_cast<std::uint32_t>(p));
    }
    throw Error(Errc::invalid_field, "unknown field '" + std::string(text) + "' (expected rat, gf:<p> or c64)");
}

std::string Field::name() const {
    switch (kind_) {
    case FieldKind::rational: return "rat";
    case FieldKind::prime: return "gf:" + std::to_string(modulus_);
    case FieldKind::complex64: return "c64";
    }
    return "?";
}

void Field::require(const Scalar& a) const {
    if (a.kind() != kind_) throw Error(Errc::field_mismatch, "scalar does not belong to field " + name());
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    switch (kind_) {
    case FieldKind::rational: return Scalar(Rational(static_cast<long>(v)));
    case FieldKind::prime: {
        long long r = v % static_cast<long long>(modulus_);
        if (r < 0) r += modulus_;
        return Scalar(Residue{static_cast<std::uint32_t>(r)});
    }
    case FieldKind::complex64: return Scalar(Complex(static_cast<double>(v), 0.0));
    }
    return Scalar(Residue{});
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    require(a);
    require(b);
    switch (kind_) {
    case FieldKind::rational: return Scalar(Rational(a.rational() + b.rational()));
    case FieldKind::prime: {
        std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
        return Scalar(Residue{static_cast<std::uint32_t>(s % modulus_)});
    }
    case FieldKind::complex64: return Scalar(a.complex() + b.complex());
    }
    return a;
}

Scalar Field::neg(const Scalar& a) const {
    require(a);
    switch (kind_) {
    case FieldKind::rational: return Scalar(Rational(-a.rational()));
    case FieldKind::prime: return Scalar(Residue{a.residue() == 0 ? 0u : modulus_ - a.residue()});
    case FieldKind::complex64: return Scalar(-a.complex());
    }
    return a;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) {
        require(a);
        require(b);
        return Scalar(Rational(a.rational() - b.rational()));
    }
    return add(a, neg(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    require(a);
    require(b);
    switch (kind_) {
    case FieldKind::rational: return Scalar(Rational(a.rational() * b.rational()));
    case FieldKind::prime: {
        std::uint64_t p = std::uint64_t{a.residue()} * b.residue();
        return Scalar(Residue{static_cast<std::uint32_t>(p % modulus_)});
    }
    case FieldKind::complex64: return Scalar(a.complex() * b.complex());
    }
    return a;
}

Scalar Field::inv(const Scalar& a) const {
    require(a);
    if (is_zero(a) && kind_ != FieldKind::complex64) throw Error(Errc::division_by_zero, "inverse of zero");
    switch (kind_) {
    case FieldKind::rational: return Scalar(Rational(1 / a.rational()));
    case FieldKind::prime: return pow(a, modulus_ - 2);
    case FieldKind::complex64:
        if (a.complex() == Complex(0.0, 0.0)) throw Error(Errc::division_by_zero, "inverse of zero");
        return Scalar(1.0 / a.complex());
    }
    return a;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rational) {
        require(a);
        require(b);
        if (sgn(b.rational()) == 0) throw Error(Errc::division_by_zero, "division by zero");
        return Scalar(Rational(a.rational() / b.rational()));
    }
    return mul(a, inv(b));
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
    require(a);
    if (kind_ == FieldKind::rational) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), a.rational().get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), a.rational().get_den_mpz_t(), e);
        return Scalar(Rational(num, den));
    }
    Scalar result = one();
    Scalar base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    require(a);
    require(b);
    switch (kind_) {
    case FieldKind::rational: return a.rational() == b.rational();
    case FieldKind::prime: return a.residue() == b.residue();
    case FieldKind::complex64: {
        const Complex x = a.complex(), y = b.complex();
        const double scale = std::max({1.0, std::abs(x), std::abs(y)});
        return std::abs(x - y) <= tolerance_ * scale;
    }
    }
    return false;
}

bool Field::is_zero(const Scalar& a) const {
    require(a);
    switch (kind_) {
    case FieldKind::rational: return sgn(a.rational()) == 0;
    case FieldKind::prime: return a.residue() == 0;
    case FieldKind::complex64: return std::abs(a.complex()) <= tolerance_;
    }
    return false;
}

double Field::magnitude(const Scalar& a) const {
    require(a);
    switch (kind_) {
    case FieldKind::rational: return std::abs(a.rational().get_d());
    case FieldKind::prime: return a.residue();
    case FieldKind::complex64: return std::abs(a.complex());
    }
    return 0.0;
}

int Field::sign(const Scalar& a) const {
    require(a);
    if (kind_ != FieldKind::rational) throw Error(Errc::unsupported_field, "sign requires an ordered field");
    return sgn(a.rational());
}

std::vector<Scalar> Field::elements() const {
    if (kind_ != FieldKind::prime) throw Error(Errc::not_enumerable, name() + " is infinite");
    std::vector<Scalar> out;
    out.reserve(modulus_);
    for (std::uint32_t v = 0; v < modulus_; ++v) out.emplace_back(Residue{v});
    return out;
}

namespace {

// Exact non-negative m-th root of an integer, if any.
bool exact_root(const mpz_class& v, unsigned long m, mpz_class& out) {
    return mpz_root(out.get_mpz_t(), v.get_mpz_t(), m) != 0;
}

}  // namespace

std::vector<Scalar> Field::mth_roots(const Scalar& b, std::uint64_t m) const {
    require(b);
    if (m == 0) throw Error(Errc::invalid_argument, "root order must be positive");
    std::vector<Scalar> roots;
    switch (kind_) {
    case FieldKind::prime:
        for (std::uint32_t v = 0; v < modulus_; ++v) {
            Scalar a(Residue{v});
            if (eq(pow(a, m), b)) roots.push_back(a);
        }
        break;
    case FieldKind::rational: {
        const Rational& q = b.rational();
        const int s = sgn(q);
        if (s == 0) {
            roots.push_back(zero());
            break;
        }
        const bool odd = (m % 2) == 1;
        if (s < 0 && !odd) break;
        mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
        if (!exact_root(num, m, rn) || !exact_root(den, m, rd)) break;
        Rational r(rn, rd);
        if (odd) {
            roots.push_back(Scalar(Rational(s < 0 ? Rational(-r) : r)));
        } else {
            roots.push_back(Scalar(Rational(-r)));
            roots.push_back(Scalar(r));
        }
        break;
    }
    case FieldKind::complex64: {
        const Complex z = b.complex();
        if (z == Complex(0.0, 0.0)) {
            roots.push_back(zero());
            break;
        }
        const double md = static_cast<double>(m);
        const double radius = std::pow(std::abs(z), 1.0 / md);
        const double theta = std::arg(z);
        for (std::uint64_t k = 0; k < m; ++k) {
            roots.push_back(Scalar(std::polar(radius, (theta + 2.0 * std::numbers::pi * static_cast<double>(k)) / md)));
        }
        break;
    }
    }
    return roots;
}

std::string Field::format(const Scalar& a) const {
    require(a);
    switch (kind_) {
    case FieldKind::rational: return a.rational().get_str();
    case FieldKind::prime: return std::to_string(a.residue());
    case FieldKind::complex64: {
        char buf[96];
        std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", a.complex().real(), a.complex().imag());
        return buf;
    }
    }
    return {};
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

double parse_double(std::string_view s, std::string_view whole) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(Errc::parse_error, "bad decimal literal in '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Scalar Field::parse_scalar(std::string_view text) const {
    const std::string whole(text);
    switch (kind_) {
    case FieldKind::rational: {
        auto slash = text.find('/');
        auto num = text.substr(0, slash);
        if (!is_integer_literal(num)) throw Error(Errc::parse_error, "bad rational literal '" + whole + "'");
        if (slash == std::string_view::npos) return Scalar(Rational(parse_integer(num)));
        auto den = text.substr(slash + 1);
        if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
            throw Error(Errc::parse_error, "bad rational literal '" + whole + "'");
        }
        mpz_class d = parse_integer(den);
        if (d == 0) throw Error(Errc::parse_error, "zero denominator in '" + whole + "'");
        return Scalar(Rational(parse_integer(num), d));
    }
    case FieldKind::prime: {
        if (!is_integer_literal(text)) throw Error(Errc::parse_error, "bad GF(p) literal '" + whole + "'");
        mpz_class v = parse_integer(text) % modulus_;
        if (v < 0) v += modulus_;
        return Scalar(Residue{static_cast<std::uint32_t>(v.get_ui())});
    }
    case FieldKind::complex64: {
        if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
            auto inner = text.substr(1, text.size() - 2);
            auto comma = inner.find(',');
            if (comma == std::string_view::npos) {
                throw Error(Errc::parse_error, "complex literal needs '(re,im)': '" + whole + "'");
            }
            return Scalar(Complex(parse_double(inner.substr(0, comma), text), parse_double(inner.substr(comma + 1), text)));
        }
        return Scalar(Complex(parse_double(text, text), 0.0));
    }
    }
    return zero();
}

}  // namespace kpd
