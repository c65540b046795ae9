#include "kpd/kron.hpp"

#include <string>

namespace kpd {

FactorShape::FactorShape(std::size_t m, std::size_t n) : m_(m), n_(n) {
    if (m == 0 || n == 0) throw Error(Errc::shape_mismatch, "factor dimensions must be positive");
}

void FactorShape::require_conforming(const Matrix& a) const {
    if (a.rows() != size() || a.cols() != size()) {
        throw Error(Errc::shape_mismatch, "shape " + std::to_string(m_) + "x" + std::to_string(n_) + " needs a " +
                                              std::to_string(size()) + "x" + std::to_string(size()) + " matrix, got " +
                                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

FactorShape FactorShape::parse(std::string_view text) {
    auto x = text.find('x');
    auto number = [&](std::string_view s) {
        if (s.empty()) throw Error(Errc::parse_error, "bad shape '" + std::string(text) + "'");
        std::size_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw Error(Errc::parse_error, "bad shape '" + std::string(text) + "'");
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    };
    if (x == std::string_view::npos) throw Error(Errc::parse_error, "shape must look like <m>x<n>");
    return FactorShape(number(text.substr(0, x)), number(text.substr(x + 1)));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(Errc::field_mismatch, "kron: " + a.field().name() + " vs " + b.field().name());
    const Field& f = a.field();
    const std::size_t br = b.rows(), bc = b.cols();
    return Matrix::generate(f, a.rows() * br, a.cols() * bc, [&](std::size_t r, std::size_t c) {
        const std::size_t i = (r - 1) / br + 1, k = (r - 1) % br + 1;
        const std::size_t j = (c - 1) / bc + 1, l = (c - 1) % bc + 1;
        return f.mul(a(i, j), b(k, l));
    });
}

Matrix kron_sum(const Matrix& b, const Matrix& c) {
    if (!b.is_square() || !c.is_square()) throw Error(Errc::shape_mismatch, "kron_sum needs square factors");
    return add(kron(b, Matrix::identity(c.field(), c.rows())), kron(Matrix::identity(b.field(), b.rows()), c));
}

Matrix shuffle(const FactorShape& shape, const Field& field) {
    const std::size_t m = shape.m(), n = shape.n();
    // Column (i-1)n+j carries its 1 in row (j-1)m+i.
    return Matrix::generate(field, m * n, m * n, [&](std::size_t r, std::size_t c) {
        const std::size_t i = (c - 1) / n + 1, j = (c - 1) % n + 1;
        return r == (j - 1) * m + i ? field.one() : field.zero();
    });
}

namespace {

void require_index(std::size_t i, std::size_t j, std::size_t bound, const char* what) {
    if (i < 1 || i > bound || j < 1 || j > bound) {
        throw Error(Errc::index_out_of_range, std::string(what) + " index (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") outside 1.." + std::to_string(bound));
    }
}

}  // namespace

Matrix slice(const Matrix& a, const FactorShape& shape, std::size_t i, std::size_t j) {
    shape.require_conforming(a);
    require_index(i, j, shape.n(), "slice");
    const std::size_t n = shape.n();
    return Matrix::generate(a.field(), shape.m(), shape.m(),
                            [&](std::size_t k, std::size_t l) { return a((k - 1) * n + i, (l - 1) * n + j); });
}

Matrix block(const Matrix& a, const FactorShape& shape, std::size_t i, std::size_t j) {
    shape.require_conforming(a);
    require_index(i, j, shape.m(), "block");
    const std::size_t n = shape.n();
    return Matrix::generate(a.field(), n, n,
                            [&](std::size_t k, std::size_t l) { return a((i - 1) * n + k, (j - 1) * n + l); });
}

namespace {

// Assembles sum_{i,j<=count} place(i, j, parts[i][j]) where every part is r x r.
// `outer` selects whether the grid index is the outer (block) or inner (slice)
// Kronecker factor.
Matrix assemble(const Field& f, std::size_t count, const std::vector<Matrix>& parts, bool grid_is_outer) {
    const std::size_t r = parts.front().rows();
    for (const auto& p : parts) {
        if (p.rows() != r || p.cols() != r) throw Error(Errc::shape_mismatch, "partial map must return equal square sizes");
    }
    return Matrix::generate(f, count * r, count * r, [&](std::size_t row, std::size_t col) {
        std::size_t gi, gj, k, l;
        if (grid_is_outer) {
            gi = (row - 1) / r + 1, k = (row - 1) % r + 1;
            gj = (col - 1) / r + 1, l = (col - 1) % r + 1;
        } else {
            k = (row - 1) / count + 1, gi = (row - 1) % count + 1;
            l = (col - 1) / count + 1, gj = (col - 1) % count + 1;
        }
        return parts[(gi - 1) * count + (gj - 1)](k, l);
    });
}

Matrix one_by_one(const Field& f, const Scalar& s) { return Matrix(f, 1, 1, {s}); }

}  // namespace

Matrix map_slices(const Matrix& a, const FactorShape& shape, const std::function<Matrix(const Matrix&)>& g) {
    shape.require_conforming(a);
    const std::size_t n = shape.n();
    std::vector<Matrix> parts;
    parts.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) parts.push_back(g(slice(a, shape, i, j)));
    }
    return assemble(a.field(), n, parts, false);
}

Matrix map_blocks(const Matrix& a, const FactorShape& shape, const std::function<Matrix(const Matrix&)>& g) {
    shape.require_conforming(a);
    const std::size_t m = shape.m();
    std::vector<Matrix> parts;
    parts.reserve(m * m);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) parts.push_back(g(block(a, shape, i, j)));
    }
    return assemble(a.field(), m, parts, true);
}

Matrix partial_det_1(const Matrix& a, const FactorShape& shape) {
    return map_slices(a, shape, [&](const Matrix& s) { return one_by_one(a.field(), det(s)); });
}

Matrix partial_det_2(const Matrix& a, const FactorShape& shape) {
    return map_blocks(a, shape, [&](const Matrix& b) { return one_by_one(a.field(), det(b)); });
}

Matrix partial_trace_1(const Matrix& a, const FactorShape& shape) {
    return map_slices(a, shape, [&](const Matrix& s) { return one_by_one(a.field(), trace(s)); });
}

Matrix partial_trace_2(const Matrix& a, const FactorShape& shape) {
    return map_blocks(a, shape, [&](const Matrix& b) { return one_by_one(a.field(), trace(b)); });
}

Matrix partial_transpose_2(const Matrix& a, const FactorShape& shape) {
    return map_blocks(a, shape, [](const Matrix& b) { return transpose(b); });
}

bool is_blockwise_symmetric(const Matrix& a, const FactorShape& shape) {
    for (std::size_t i = 1; i <= shape.m(); ++i) {
        for (std::size_t j = 1; j <= shape.m(); ++j) {
            const Matrix b = block(a, shape, i, j);
            if (!(b == transpose(b))) return false;
        }
    }
    return true;
}

Matrix phi(const Matrix& c, const Matrix& d) {
    if (!(c.field() == d.field())) throw Error(Errc::field_mismatch, "phi: " + c.field().name() + " vs " + d.field().name());
    if (!c.is_square() || !d.is_square() || c.rows() != d.rows()) {
        throw Error(Errc::shape_mismatch, "phi needs two square matrices of equal size");
    }
    const Field& f = c.field();
    const std::size_t n = c.rows();
    // Entry ((k-1)n+a, (l-1)n+b) of block (k,l) = C_l D_(k) is C_{a l} D_{k b}.
    return Matrix::generate(f, n * n, n * n, [&](std::size_t r, std::size_t col) {
        const std::size_t k = (r - 1) / n + 1, a = (r - 1) % n + 1;
        const std::size_t l = (col - 1) / n + 1, b = (col - 1) % n + 1;
        return f.mul(c(a, l), d(k, b));
    });
}

std::optional<std::pair<Matrix, Matrix>> kron_factor(const Matrix& a, const FactorShape& shape) {
    shape.require_conforming(a);
    const Field& f = a.field();
    const std::size_t m = shape.m(), n = shape.n();
    for (std::size_t p = 1; p <= m; ++p) {
        for (std::size_t q = 1; q <= m; ++q) {
            const Matrix b = block(a, shape, p, q);
            for (std::size_t k = 1; k <= n; ++k) {
                for (std::size_t l = 1; l <= n; ++l) {
                    if (f.is_zero(b(k, l))) continue;
                    const Scalar pivot = b(k, l);
                    Matrix left = Matrix::generate(f, m, m, [&](std::size_t i, std::size_t j) {
                        return f.div(a((i - 1) * n + k, (j - 1) * n + l), pivot);
                    });
                    if (kron(left, b) == a) return std::make_pair(std::move(left), b);
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(Matrix(f, m, m), Matrix::identity(f, n));
}

}  // namespace kpd
