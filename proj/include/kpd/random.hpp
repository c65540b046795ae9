#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

#include "kpd/kron.hpp"

namespace kpd {

/// SplitMix64 finalizer; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;
/// Seed for instance `index` of a suite. Stable across runs and job counts.
std::uint64_t instance_seed(std::uint64_t base, std::string_view suite, std::uint64_t index) noexcept;

/// Seeded instance generator.
///
/// Scalars: uniform over {-3..3} for Q, uniform over GF(p), real and imaginary
/// parts uniform on [-1, 1] for complex64. Only the raw 64-bit engine output is
/// used, so a seed reproduces the same instances with any standard library.
class Generator {
public:
    Generator(Field field, std::uint64_t seed) : field_(field), seed_(seed), engine_(seed) {}

    const Field& field() const noexcept { return field_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    double unit();  // [0, 1)
    bool coin() { return below(2) == 1; }

    Scalar scalar();
    Scalar nonzero_scalar();

    Matrix matrix(std::size_t rows, std::size_t cols);
    Matrix square(std::size_t n) { return matrix(n, n); }
    Matrix nonsingular(std::size_t n);
    /// Upper or lower triangular, chosen at random.
    Matrix triangular(std::size_t n);
    Matrix diagonal(std::size_t n);
    Matrix permutation(std::size_t n);
    Matrix zero_one(std::size_t n);
    Matrix column_vector(std::size_t n) { return matrix(n, 1); }
    Matrix rank_one(std::size_t n);
    /// At most one non-zero row / column.
    Matrix single_row(std::size_t n);
    Matrix single_column(std::size_t n);
    /// At most one non-zero entry in each row and column.
    Matrix monomial(std::size_t n);
    /// Pair (B, D) with B o D = 0.
    std::pair<Matrix, Matrix> disjoint_pair(std::size_t n);
    /// A matrix whose determinant has an n-th root (singular matrices included).
    Matrix in_dn(std::size_t n);
    /// Every block B_ij symmetric.
    Matrix blockwise_symmetric(const FactorShape& shape);
    /// G G^H + eps I with G random complex; complex64 only.
    Matrix hermitian_pd(std::size_t n, double eps);
    /// Block-diagonal Hermitian positive definite matrix of the given shape.
    Matrix block_diagonal_pd(const FactorShape& shape, double eps);
    /// Complex matrix scaled so its 1-norm equals `norm` (complex64 only).
    Matrix with_norm(std::size_t n, double norm, bool real);

private:
    Field field_;
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace kpd
