#include "kpd/detroot.hpp"

#include <sstream>

namespace kpd {

RootClass::RootClass(Field field, std::uint64_t order, Scalar power)
    : field_(field), order_(order), power_(std::move(power)) {
    if (order == 0) throw Error(Errc::invalid_argument, "root class order must be positive");
    if (power_.kind() != field_.kind()) throw Error(Errc::field_mismatch, "root class power outside " + field_.name());
}

bool RootClass::is_empty() const {
    return !is_zero() && field_.mth_roots(power_, order_).empty();
}

std::string RootClass::to_string() const {
    return "root[" + std::to_string(order_) + "]{" + field_.format(power_) + "}";
}

bool operator==(const RootClass& a, const RootClass& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.field_.eq(a.power_, b.power_);
}

RootClass class_of(const Field& f, const Scalar& a, std::uint64_t m) {
    if (m == 0) throw Error(Errc::invalid_argument, "root class order must be positive");
    return RootClass(f, m, f.pow(a, m));
}

std::optional<RootClass> root_of(const Field& f, const Scalar& b, std::uint64_t m) {
    if (m == 0) throw Error(Errc::invalid_argument, "root class order must be positive");
    if (f.is_zero(b) || !f.mth_roots(b, m).empty()) return RootClass(f, m, b);
    return std::nullopt;
}

RootClass mul(const RootClass& a, const RootClass& b) {
    if (a.order() != b.order()) {
        throw Error(Errc::order_mismatch, "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
    if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, "root classes over different fields");
    return RootClass(a.field(), a.order(), a.field().mul(a.power(), b.power()));
}

RootClass embed(const RootClass& c, std::uint64_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "embedding factor must be positive");
    return RootClass(c.field(), c.order() * n, c.field().pow(c.power(), n));
}

RootClass star(const RootClass& a, const RootClass& b) {
    return mul(embed(a, b.order()), embed(b, a.order()));
}

RootClass nth_root_class(const RootClass& c, std::uint64_t n) {
    if (n == 0) throw Error(Errc::invalid_argument, "root order must be positive");
    return RootClass(c.field(), c.order() * n, c.power());
}

std::optional<RootClass> Det(const Matrix& a) {
    if (!a.is_square()) throw Error(Errc::shape_mismatch, "Det needs a square matrix");
    return root_of(a.field(), det(a), a.rows());
}

ClassScaledMatrix::ClassScaledMatrix(RootClass scale, Matrix body) : scale_(std::move(scale)), body_(std::move(body)) {
    if (!(scale_.field() == body_.field())) throw Error(Errc::field_mismatch, "scale and body over different fields");
}

RootClass ClassScaledMatrix::entry(std::size_t i, std::size_t j) const {
    const Field& f = body_.field();
    return RootClass(f, scale_.order(), f.mul(scale_.power(), f.pow(body_(i, j), scale_.order())));
}

ClassGrid ClassScaledMatrix::canonical() const {
    ClassGrid out(body_.rows());
    for (std::size_t i = 1; i <= body_.rows(); ++i) {
        out[i - 1].reserve(body_.cols());
        for (std::size_t j = 1; j <= body_.cols(); ++j) out[i - 1].push_back(entry(i, j));
    }
    return out;
}

bool operator==(const ClassScaledMatrix& a, const ClassScaledMatrix& b) {
    if (a.body_.rows() != b.body_.rows() || a.body_.cols() != b.body_.cols()) return false;
    return grid_equal(a.canonical(), b);
}

bool grid_equal(const ClassGrid& a, const ClassGrid& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (!(a[i][j] == b[i][j])) return false;
        }
    }
    return true;
}

bool grid_equal(const ClassGrid& a, const ClassScaledMatrix& b) { return grid_equal(a, b.canonical()); }

std::string format_grid(const ClassGrid& g) {
    std::string out;
    for (const auto& row : g) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j].to_string();
        }
        out += '\n';
    }
    return out;
}

ClassScaledMatrix Det1_kron(const Matrix& a, const Matrix& b) {
    auto scale = Det(a);
    if (!scale) throw Error(Errc::not_in_dn, "det(A) = " + a.field().format(det(a)) + " has no " + std::to_string(a.rows()) + "-th root");
    if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, "Det1_kron over different fields");
    return ClassScaledMatrix(*scale, b);
}

RootClass Det_of_scaled(const ClassScaledMatrix& s) {
    const Matrix& body = s.body();
    if (!body.is_square()) throw Error(Errc::shape_mismatch, "Det of a non-square class-scaled matrix");
    const Field& f = body.field();
    const std::uint64_t n = body.rows(), m = s.scale().order();
    // sqrt[n]{scale^n det(body)} at order m, moved to order mn.
    const RootClass inner(f, m, f.mul(f.pow(s.scale().power(), n), f.pow(det(body), m)));
    return nth_root_class(inner, n);
}

ClassScaledMatrix mul_scaled(const ClassScaledMatrix& a, const ClassScaledMatrix& b) {
    return ClassScaledMatrix(mul(a.scale(), b.scale()), matmul(a.body(), b.body()));
}

ClassGrid Det1_general(const Matrix& a, const FactorShape& shape) {
    shape.require_conforming(a);
    ClassGrid out(shape.n());
    for (std::size_t i = 1; i <= shape.n(); ++i) {
        for (std::size_t j = 1; j <= shape.n(); ++j) {
            auto c = Det(slice(a, shape, i, j));
            if (!c) {
                throw Error(Errc::not_in_dn, "slice (" + std::to_string(i) + "," + std::to_string(j) + ") is outside D_" +
                                                 std::to_string(shape.m()));
            }
            out[i - 1].push_back(*c);
        }
    }
    return out;
}

ClassGrid Det2_general(const Matrix& a, const FactorShape& shape) {
    const Matrix p = shuffle(shape, a.field());
    return Det1_general(matmul(matmul(p, a), transpose(p)), shape.swapped());
}

namespace {

Matrix class_power(const RootClass& c) { return scalar_matrix(c.field(), c.power()); }

}  // namespace

LawReport check_detroot_completion(const Matrix& a, const Matrix& c) {
    LawReport r;
    r.law_id = "detroot-completion";
    r.relation = Relation::identity;
    r.inputs = {{"A", a}, {"C", c}};

    const FactorShape shape(a.rows(), c.rows());
    const Matrix big = kron(a, c);
    const auto det_a = Det(a);
    const auto det_c = Det(c);
    if (!det_a || !det_c) throw Error(Errc::not_in_dn, "detroot completion needs A in D_m and C in D_n");

    const ClassScaledMatrix partial = Det1_kron(a, c);
    const RootClass completed = Det_of_scaled(partial);
    const auto direct = Det(big);
    const RootClass starred = star(*det_a, *det_c);
    const bool definitional = grid_equal(Det1_general(big, shape), partial);

    r.holds = direct && *direct == completed && *direct == starred && definitional;
    if (direct) r.witnesses.emplace_back("Det(A(x)C)", class_power(*direct));
    r.witnesses.emplace_back("Det(Det1(A(x)C))", class_power(completed));
    r.witnesses.emplace_back("Det(A)*Det(C)", class_power(starred));
    r.note = direct ? direct->to_string() + " vs " + completed.to_string() : "Det(A(x)C) undefined";
    return r;
}

LawReport check_detroot_multiplicativity(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    LawReport r;
    r.law_id = "detroot-multiplicativity";
    r.relation = Relation::identity;
    r.inputs = {{"A", a}, {"B", b}, {"C", c}, {"D", d}};

    const FactorShape shape(a.rows(), c.rows());
    const Matrix product = matmul(kron(a, c), kron(b, d));
    const ClassScaledMatrix rhs = mul_scaled(Det1_kron(a, c), Det1_kron(b, d));
    const ClassScaledMatrix lhs_lemma = Det1_kron(matmul(a, b), matmul(c, d));
    const ClassGrid lhs = Det1_general(product, shape);

    r.holds = grid_equal(lhs, rhs) && lhs_lemma == rhs;
    r.note = "scale " + rhs.scale().to_string();
    return r;
}

}  // namespace kpd
