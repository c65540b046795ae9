#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cmath>

#include "kpd/detroot.hpp"
#include "kpd/expmap.hpp"
#include "kpd/random.hpp"
#include "oracles.hpp"

using namespace kpd;
using namespace testing_support;

namespace {

Scalar cx(double re, double im = 0.0) { return Scalar(Complex(re, im)); }

Matrix real_diag(std::initializer_list<double> d) {
    std::vector<Scalar> v;
    for (double x : d) v.push_back(cx(x));
    return Matrix::diagonal(c64(), v);
}

}  // namespace

TEST_CASE("exponential examples") {
    const Field f = c64();
    CHECK(matrix_exp(Matrix(f, 3, 3)) == Matrix::identity(f, 3));
    CHECK(matrix_exp(real_diag({1.0, -2.0, 0.5})) == real_diag({std::exp(1.0), std::exp(-2.0), std::exp(0.5)}));
    // exp of a nilpotent Jordan block is I + N.
    const Matrix n = ints(f, {{0, 1}, {0, 0}});
    CHECK(matrix_exp(n) == ints(f, {{1, 1}, {0, 1}}));
    // Rotation generator.
    const Matrix r = ints(f, {{0, -1}, {1, 0}});
    const double c = std::cos(1.0), s = std::sin(1.0);
    CHECK(matrix_exp(r) == Matrix(f, 2, 2, {cx(c), cx(-s), cx(s), cx(c)}));
    CHECK_ERRC(matrix_exp(Matrix::identity(rat(), 2)), Errc::unsupported_field);
}

TEST_CASE("Pade agrees with a Taylor oracle across norms") {
    Generator g(c64(), 41);
    for (double norm : {0.01, 0.3, 1.0, 3.0, 10.0}) {
        for (int t = 0; t < 10; ++t) {
            const Matrix a = g.with_norm(g.between(1, 5), norm, t % 2 == 0);
            // Split the Taylor series by squaring so that it converges well.
            int s = 0;
            while (std::ldexp(norm, -s) > 0.5) ++s;
            Matrix e = oracle::exp_taylor(scale(cx(std::ldexp(1.0, -s)), a), 30);
            for (int k = 0; k < s; ++k) e = matmul(e, e);
            CHECK(max_relative_deviation(matrix_exp(a), e) < 1e-10);
        }
    }
}

TEST_CASE("det(exp A) = exp(tr A)") {
    Generator g(c64(), 42);
    for (int t = 0; t < 100; ++t) {
        const ExpReport r = check_exp_trace_det(g.with_norm(g.between(1, 5), 0.1 + 3.0 * g.unit(), g.coin()));
        CHECK(r.holds);
        CHECK(r.max_deviation <= r.tolerance);
    }
}

TEST_CASE("exp of a Kronecker sum factors") {
    Generator g(c64(), 43);
    for (int t = 0; t < 100; ++t) {
        const Matrix b = g.with_norm(g.between(1, 3), 2.0 * g.unit(), true);
        const Matrix c = g.with_norm(g.between(1, 3), 2.0 * g.unit(), true);
        const ExpReport r = check_exp_kron_sum(b, c);
        CHECK(r.holds);
        // Independent right-hand side from the Taylor oracle.
        CHECK(max_relative_deviation(r.rhs, oracle::kron(oracle::exp_taylor(b), oracle::exp_taylor(c))) < 1e-10);
    }
}

TEST_CASE("partial determinant of exp over a Kronecker sum") {
    const Field f = c64();
    const Matrix nil = ints(f, {{0, 1}, {0, 0}});
    const Matrix b = real_diag({0.5, -0.25});
    const ExpReport r = check_exp_partial_det(b, nil);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.condition_holds);
    CHECK(r.agrees());

    const ExpReport d = check_exp_partial_det(b, real_diag({0.3, 1.1}));
    CHECK(d.holds);
    CHECK(d.condition_holds);
    const ExpReport z = check_exp_partial_det(b, Matrix(f, 2, 2));
    CHECK(z.holds);
    CHECK(z.condition_holds);

    Generator g(f, 44);
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = g.between(1, 3), n = g.between(1, 3);
        CHECK(check_exp_partial_det(g.with_norm(m, 1.0, true), g.with_norm(n, 1.0, true)).agrees());
        CHECK(check_exp_partial_det(g.with_norm(m, 1.0, true), real_diag({g.unit(), -g.unit()})).holds);
    }
}

TEST_CASE("normalized traces") {
    CHECK(rat().is_one(normalized_trace(Matrix::identity(rat(), 5))));
    CHECK(gf(7).is_one(normalized_trace(Matrix::identity(gf(7), 3))));
    CHECK_ERRC(normalized_trace(Matrix::identity(gf(2), 2)), Errc::undefined_normalization);
    CHECK(rat().eq(normalized_trace(ints(rat(), {{1, 9}, {9, 2}})), q(3, 2)));

    Generator g(rat(), 45);
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = g.between(1, 3), n = g.between(1, 3);
        const Matrix a = g.square(m), b = g.square(n);
        CHECK(partial_normalized_trace_1(kron(a, b), FactorShape(m, n)) == scale(normalized_trace(a), b));
    }
    CHECK_ERRC(partial_normalized_trace_1(Matrix::identity(gf(3), 9), FactorShape(3, 3)), Errc::undefined_normalization);
}

TEST_CASE("Det(exp A) is the class of exp(Tr A)") {
    Generator g(c64(), 46);
    for (int t = 0; t < 50; ++t) {
        const ExpReport r = check_exp_det_scalar(g.with_norm(g.between(1, 4), 2.0 * g.unit(), g.coin()));
        CHECK(r.holds);
    }
}

TEST_CASE("Det_1 of exp over a Kronecker sum") {
    const Field f = c64();
    const ExpReport zero = check_exp_detroot(Matrix(f, 2, 2), Matrix(f, 2, 2));
    CHECK(zero.holds);
    const ExpReport d = check_exp_detroot(real_diag({1.0, -1.0}), real_diag({0.5, 0.25, 2.0}));
    CHECK(d.holds);
    Generator g(f, 47);
    for (int t = 0; t < 50; ++t) {
        const ExpReport r = check_exp_detroot(g.with_norm(g.between(1, 3), g.unit(), true), g.with_norm(g.between(1, 3), g.unit(), true));
        CHECK(r.holds);
        CHECK(r.max_deviation <= r.tolerance);
    }
}
