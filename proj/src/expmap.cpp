#include "kpd/expmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "kpd/detroot.hpp"

namespace kpd {

namespace {

// Dense complex working matrix, row-major.
struct Work {
    std::size_t n;
    std::vector<Complex> v;

    explicit Work(std::size_t size) : n(size), v(size * size, Complex(0.0, 0.0)) {}
    Complex& at(std::size_t i, std::size_t j) { return v[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

Work identity_work(std::size_t n) {
    Work w(n);
    for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1.0;
    return w;
}

Work product(const Work& a, const Work& b) {
    Work c(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t k = 0; k < a.n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

// sum_k coeff_k * terms_k
Work combine(std::initializer_list<std::pair<double, const Work*>> terms, std::size_t n) {
    Work out(n);
    for (const auto& [coeff, w] : terms) {
        for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] += coeff * w->v[k];
    }
    return out;
}

double one_norm(const Work& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < a.n; ++i) col += std::abs(a.at(i, j));
        best = std::max(best, col);
    }
    return best;
}

// Solves Q X = P by partial-pivot LU.
Work solve(Work q, Work p) {
    const std::size_t n = q.n;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(q.at(r, col)) > std::abs(q.at(pivot, col))) pivot = r;
        }
        if (std::abs(q.at(pivot, col)) == 0.0) throw Error(Errc::division_by_zero, "singular Pade denominator");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(q.at(pivot, j), q.at(col, j));
                std::swap(p.at(pivot, j), p.at(col, j));
            }
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = q.at(r, col) / q.at(col, col);
            if (factor == Complex(0.0, 0.0)) continue;
            for (std::size_t j = col; j < n; ++j) q.at(r, j) -= factor * q.at(col, j);
            for (std::size_t j = 0; j < n; ++j) p.at(r, j) -= factor * p.at(col, j);
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = p.at(r, j);
            for (std::size_t k = r + 1; k < n; ++k) s -= q.at(r, k) * p.at(k, j);
            p.at(r, j) = s / q.at(r, r);
        }
    }
    return p;
}

constexpr std::array<double, 14> pade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0,
};

void require_complex(const Matrix& a, const char* what) {
    if (a.field().kind() != FieldKind::complex64) {
        throw Error(Errc::unsupported_field, std::string(what) + " needs complex64, got " + a.field().name());
    }
}

double rel_dev(const Complex& x, const Complex& y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

Matrix powers_of(const Field& f, const ClassGrid& grid) {
    const std::size_t n = grid.size();
    return Matrix::generate(f, n, n, [&](std::size_t i, std::size_t j) { return grid[i - 1][j - 1].power(); });
}

Matrix powers_of(const Field& f, const ClassScaledMatrix& s) { return powers_of(f, s.canonical()); }

}  // namespace

Matrix matrix_exp(const Matrix& a) {
    require_complex(a, "matrix exponential");
    if (!a.is_square()) throw Error(Errc::shape_mismatch, "matrix exponential needs a square matrix");
    const std::size_t n = a.rows();
    Work x(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) x.at(i, j) = a(i + 1, j + 1).complex();
    }
    int s = 0;
    const double norm = one_norm(x);
    if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const double factor = std::ldexp(1.0, -s);
    for (auto& z : x.v) z *= factor;

    const auto& b = pade13;
    const Work eye = identity_work(n);
    const Work x2 = product(x, x);
    const Work x4 = product(x2, x2);
    const Work x6 = product(x4, x2);
    const Work inner_u = combine({{b[13], &x6}, {b[11], &x4}, {b[9], &x2}}, n);
    Work u_sum = product(x6, inner_u);
    const Work tail_u = combine({{b[7], &x6}, {b[5], &x4}, {b[3], &x2}, {b[1], &eye}}, n);
    for (std::size_t k = 0; k < u_sum.v.size(); ++k) u_sum.v[k] += tail_u.v[k];
    const Work u = product(x, u_sum);
    const Work inner_v = combine({{b[12], &x6}, {b[10], &x4}, {b[8], &x2}}, n);
    Work v = product(x6, inner_v);
    const Work tail_v = combine({{b[6], &x6}, {b[4], &x4}, {b[2], &x2}, {b[0], &eye}}, n);
    for (std::size_t k = 0; k < v.v.size(); ++k) v.v[k] += tail_v.v[k];

    Work r = solve(combine({{1.0, &v}, {-1.0, &u}}, n), combine({{1.0, &v}, {1.0, &u}}, n));
    for (int k = 0; k < s; ++k) r = product(r, r);

    std::vector<Scalar> entries;
    entries.reserve(n * n);
    for (const auto& z : r.v) entries.emplace_back(z);
    return Matrix(a.field(), n, n, std::move(entries));
}

double max_relative_deviation(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::shape_mismatch, "deviation of differently shaped matrices");
    double worst = 0.0;
    const auto ea = a.entries(), eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, rel_dev(ea[k].complex(), eb[k].complex()));
    return worst;
}

ExpReport check_exp_trace_det(const Matrix& a) {
    require_complex(a, "exponential trace relation");
    const Field& f = a.field();
    ExpReport r{"exp-trace-det", scalar_matrix(f, det(matrix_exp(a))), scalar_matrix(f, Scalar(std::exp(trace(a).complex())))};
    r.tolerance = 1e-9;
    r.max_deviation = max_relative_deviation(r.lhs, r.rhs);
    r.holds = r.max_deviation <= r.tolerance;
    return r;
}

ExpReport check_exp_kron_sum(const Matrix& b, const Matrix& c) {
    require_complex(b, "Kronecker-sum exponential");
    require_complex(c, "Kronecker-sum exponential");
    ExpReport r{"exp-kron-sum", matrix_exp(kron_sum(b, c)), kron(matrix_exp(b), matrix_exp(c))};
    r.tolerance = 1e-9;
    r.max_deviation = max_relative_deviation(r.lhs, r.rhs);
    r.holds = r.max_deviation <= r.tolerance;
    return r;
}

ExpReport check_exp_partial_det(const Matrix& b, const Matrix& c) {
    require_complex(b, "exponential partial determinant");
    require_complex(c, "exponential partial determinant");
    if (!b.is_square() || !c.is_square()) throw Error(Errc::shape_mismatch, "B and C must be square");
    const std::size_t m = b.rows();
    const FactorShape shape(m, c.rows());
    const Matrix a = kron_sum(b, c);
    ExpReport r{"exp-partial-det", partial_det_1(matrix_exp(a), shape), matrix_exp(partial_trace_1(a, shape))};
    r.tolerance = c.field().tolerance();
    r.max_deviation = max_relative_deviation(r.lhs, r.rhs);
    r.holds = r.max_deviation <= r.tolerance;
    const Matrix e = matrix_exp(c);
    r.condition_holds = hadamard_power(e, m) == matrix_power(e, m);
    return r;
}

Scalar normalized_trace(const Matrix& a) {
    if (!a.is_square()) throw Error(Errc::shape_mismatch, "normalized trace needs a square matrix");
    const Field& f = a.field();
    const Scalar n = f.from_int(static_cast<long long>(a.rows()));
    if (f.is_zero(n)) {
        throw Error(Errc::undefined_normalization,
                    std::to_string(a.rows()) + " is zero in " + f.name());
    }
    return f.div(trace(a), n);
}

Matrix partial_normalized_trace_1(const Matrix& a, const FactorShape& shape) {
    return map_slices(a, shape, [](const Matrix& s) { return scalar_matrix(s.field(), normalized_trace(s)); });
}

ExpReport check_exp_det_scalar(const Matrix& a) {
    require_complex(a, "exponential determinant root");
    const Field& f = a.field();
    const auto lhs = Det(matrix_exp(a));
    if (!lhs) throw Error(Errc::not_in_dn, "Det(exp A) undefined");
    const RootClass rhs = class_of(f, Scalar(std::exp(normalized_trace(a).complex())), a.rows());
    ExpReport r{"exp-det-scalar", scalar_matrix(f, lhs->power()), scalar_matrix(f, rhs.power())};
    r.tolerance = 1e-8;
    r.max_deviation = max_relative_deviation(r.lhs, r.rhs);
    r.holds = r.max_deviation <= r.tolerance;
    return r;
}

ExpReport check_exp_detroot(const Matrix& b, const Matrix& c) {
    require_complex(b, "exponential Det_1");
    require_complex(c, "exponential Det_1");
    if (!b.is_square() || !c.is_square()) throw Error(Errc::shape_mismatch, "B and C must be square");
    const Field& f = b.field();
    const std::size_t m = b.rows();
    const FactorShape shape(m, c.rows());
    const Matrix a = kron_sum(b, c);

    const ClassGrid lhs = Det1_general(matrix_exp(a), shape);
    const RootClass scale = class_of(f, Scalar(std::exp(normalized_trace(b).complex())), m);
    const ClassScaledMatrix rhs(scale, matrix_exp(c));

    ExpReport r{"exp-detroot", powers_of(f, lhs), powers_of(f, rhs)};
    r.tolerance = 1e-8;
    const ExpReport scalar = check_exp_det_scalar(a);
    r.max_deviation = std::max(max_relative_deviation(r.lhs, r.rhs), scalar.max_deviation);
    r.holds = r.max_deviation <= r.tolerance;
    return r;
}

}  // namespace kpd
