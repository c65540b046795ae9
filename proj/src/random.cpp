#include "kpd/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kpd/detroot.hpp"

namespace kpd {

std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, std::string_view suite, std::uint64_t index) noexcept {
    // FNV-1a over the suite id keeps suites independent under one base seed.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : suite) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return mix_seed(mix_seed(base ^ h) + index);
}

std::uint64_t Generator::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Generator::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Scalar Generator::scalar() {
    switch (field_.kind()) {
    case FieldKind::rational: return field_.from_int(static_cast<long long>(below(7)) - 3);
    case FieldKind::prime: return field_.from_int(static_cast<long long>(below(field_.modulus())));
    case FieldKind::complex64: {
        const double re = 2.0 * unit() - 1.0;
        const double im = 2.0 * unit() - 1.0;
        return Scalar(Complex(re, im));
    }
    }
    return field_.zero();
}

Scalar Generator::nonzero_scalar() {
    for (;;) {
        Scalar s = scalar();
        if (!field_.is_zero(s)) return s;
    }
}

Matrix Generator::matrix(std::size_t rows, std::size_t cols) {
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(scalar());
    return Matrix(field_, rows, cols, std::move(entries));
}

Matrix Generator::nonsingular(std::size_t n) {
    for (;;) {
        Matrix a = square(n);
        if (!field_.is_zero(det(a))) return a;
    }
}

Matrix Generator::triangular(std::size_t n) {
    const bool upper = coin();
    return Matrix::generate(field_, n, n, [&](std::size_t i, std::size_t j) {
        return (upper ? j >= i : j <= i) ? scalar() : field_.zero();
    });
}

Matrix Generator::diagonal(std::size_t n) {
    return Matrix::generate(field_, n, n, [&](std::size_t i, std::size_t j) { return i == j ? scalar() : field_.zero(); });
}

Matrix Generator::permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[below(k)]);
    return Matrix::generate(field_, n, n,
                            [&](std::size_t i, std::size_t j) { return perm[i - 1] == j ? field_.one() : field_.zero(); });
}

Matrix Generator::zero_one(std::size_t n) {
    return Matrix::generate(field_, n, n, [&](std::size_t, std::size_t) { return coin() ? field_.one() : field_.zero(); });
}

Matrix Generator::rank_one(std::size_t n) { return rank1(column_vector(n), column_vector(n)); }

Matrix Generator::single_row(std::size_t n) {
    const std::size_t row = between(1, n);
    return Matrix::generate(field_, n, n, [&](std::size_t i, std::size_t) { return i == row ? scalar() : field_.zero(); });
}

Matrix Generator::single_column(std::size_t n) {
    const std::size_t col = between(1, n);
    return Matrix::generate(field_, n, n, [&](std::size_t, std::size_t j) { return j == col ? scalar() : field_.zero(); });
}

Matrix Generator::monomial(std::size_t n) { return matmul(permutation(n), diagonal(n)); }

std::pair<Matrix, Matrix> Generator::disjoint_pair(std::size_t n) {
    std::vector<Scalar> b, d;
    b.reserve(n * n);
    d.reserve(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        if (coin()) {
            b.push_back(scalar());
            d.push_back(field_.zero());
        } else {
            b.push_back(field_.zero());
            d.push_back(scalar());
        }
    }
    return {Matrix(field_, n, n, std::move(b)), Matrix(field_, n, n, std::move(d))};
}

Matrix Generator::in_dn(std::size_t n) {
    for (int attempt = 0; attempt < 4000; ++attempt) {
        Matrix a = square(n);
        if (Det(a)) return a;
    }
    // Rare over Q for larger n: fall back to a unit-triangular matrix scaled
    // so that det = t^n.
    const Scalar t = nonzero_scalar();
    const Scalar lead = field_.pow(t, n);
    return Matrix::generate(field_, n, n, [&](std::size_t i, std::size_t j) {
        if (i == j) return i == 1 ? lead : field_.one();
        return j > i ? scalar() : field_.zero();
    });
}

Matrix Generator::blockwise_symmetric(const FactorShape& shape) {
    const std::size_t m = shape.m(), n = shape.n();
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < m * m; ++k) {
        Matrix g = square(n);
        blocks.push_back(add(g, transpose(g)));
    }
    return Matrix::generate(field_, m * n, m * n, [&](std::size_t r, std::size_t c) {
        const std::size_t i = (r - 1) / n, j = (c - 1) / n;
        return blocks[i * m + j]((r - 1) % n + 1, (c - 1) % n + 1);
    });
}

Matrix Generator::hermitian_pd(std::size_t n, double eps) {
    if (field_.kind() != FieldKind::complex64) throw Error(Errc::unsupported_field, "hermitian_pd needs complex64");
    const Matrix g = square(n);
    const Matrix gh = Matrix::generate(field_, n, n, [&](std::size_t i, std::size_t j) {
        return Scalar(std::conj(g(j, i).complex()));
    });
    return add(matmul(g, gh), scale(Scalar(Complex(eps, 0.0)), Matrix::identity(field_, n)));
}

Matrix Generator::block_diagonal_pd(const FactorShape& shape, double eps) {
    const std::size_t m = shape.m(), n = shape.n();
    std::vector<Matrix> blocks;
    for (std::size_t k = 0; k < m; ++k) blocks.push_back(hermitian_pd(n, eps));
    return Matrix::generate(field_, m * n, m * n, [&](std::size_t r, std::size_t c) {
        const std::size_t i = (r - 1) / n, j = (c - 1) / n;
        return i == j ? blocks[i]((r - 1) % n + 1, (c - 1) % n + 1) : field_.zero();
    });
}

Matrix Generator::with_norm(std::size_t n, double norm, bool real) {
    if (field_.kind() != FieldKind::complex64) throw Error(Errc::unsupported_field, "with_norm needs complex64");
    Matrix g = Matrix::generate(field_, n, n, [&](std::size_t, std::size_t) {
        const double re = 2.0 * unit() - 1.0;
        const double im = real ? 0.0 : 2.0 * unit() - 1.0;
        return Scalar(Complex(re, im));
    });
    double one_norm = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        double col = 0.0;
        for (std::size_t i = 1; i <= n; ++i) col += std::abs(g(i, j).complex());
        one_norm = std::max(one_norm, col);
    }
    if (one_norm == 0.0) return g;
    return scale(Scalar(Complex(norm / one_norm, 0.0)), g);
}

}  // namespace kpd
