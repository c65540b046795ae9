#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <filesystem>
#include <sstream>

#include "kpd/laws.hpp"
#include "kpd/random.hpp"
#include "oracles.hpp"

using namespace kpd;
using namespace testing_support;

TEST_CASE("basis matrices") {
    CHECK(basis_matrix(rat(), 2, 1, 1) == ints(rat(), {{1, 0}, {0, 0}}));
    CHECK(basis_matrix(rat(), 2, 1, 2) == ints(rat(), {{0, 1}, {0, 0}}));
    const Matrix e = basis_matrix(gf(5), 3, 2, 3);
    CHECK(nnz(e) == 1);
    CHECK(gf(5).is_one(e(2, 3)));
    CHECK_ERRC(basis_matrix(rat(), 2, 3, 1), Errc::index_out_of_range);
    CHECK_ERRC(basis_matrix(rat(), 2, 0, 1), Errc::index_out_of_range);
}

TEST_CASE("construction rejects bad shapes") {
    CHECK_ERRC(Matrix(rat(), 0, 2), Errc::shape_mismatch);
    CHECK_ERRC(Matrix(rat(), 2, 2, {q(1)}), Errc::shape_mismatch);
    const Matrix a = Matrix::identity(rat(), 2);
    CHECK_ERRC(a(3, 1), Errc::index_out_of_range);
}

TEST_CASE("arithmetic examples") {
    Generator g(rat(), 5);
    const Matrix x = g.square(3);
    CHECK(matmul(Matrix::identity(rat(), 3), x) == x);
    CHECK(transpose(transpose(x)) == x);
    CHECK(matmul(ints(rat(), {{1, 1}, {0, 1}}), ints(rat(), {{1, 0}, {1, 1}})) == ints(rat(), {{2, 1}, {1, 1}}));
    CHECK(sub(add(x, x), x) == x);
    CHECK(scale(q(2), x) == add(x, x));
    CHECK(matrix_power(x, 3) == matmul(x, matmul(x, x)));
    CHECK(matrix_power(x, 0) == Matrix::identity(rat(), 3));
}

TEST_CASE("shape and field mismatches") {
    const Matrix a = Matrix::identity(rat(), 2), b = Matrix::identity(rat(), 3);
    CHECK_ERRC(matmul(a, b), Errc::shape_mismatch);
    CHECK_ERRC(add(a, b), Errc::shape_mismatch);
    CHECK_ERRC(hadamard(a, b), Errc::shape_mismatch);
    CHECK_ERRC(add(a, Matrix::identity(gf(3), 2)), Errc::field_mismatch);
    CHECK_ERRC(det(Matrix(rat(), 2, 3)), Errc::shape_mismatch);
}

TEST_CASE("determinant examples") {
    for (const Field& f : {rat(), gf(7), c64()}) CHECK(f.is_one(det(Matrix::identity(f, 4))));
    CHECK(rat().eq(det(ints(rat(), {{1, 2}, {3, 4}})), q(-2)));
    const Matrix b4 = counterexample_4x4(rat());
    CHECK(rat().eq(det(b4), oracle::cofactor_det(b4)));
    const Matrix c = ints(c64(), {{1, 2}, {3, 4}});
    CHECK(c64().eq(det(c), Scalar(Complex(-2.0, 0.0))));
    CHECK(rat().eq(det(ints(rat(), {{0, 1}, {1, 0}})), q(-1)));
}

TEST_CASE("rational determinants of fractional matrices") {
    const Matrix a(rat(), 2, 2, {q(1, 2), q(1, 3), q(1, 4), q(1, 5)});
    CHECK(rat().eq(det(a), rat().sub(q(1, 10), q(1, 12))));
}

TEST_CASE("Bareiss and elimination agree with cofactor expansion") {
    for (const Field& f : {gf(5), rat(), gf(2), gf(7)}) {
        Generator g(f, 17);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = g.between(1, 4);
            const Matrix a = t % 3 == 0 ? g.zero_one(n) : g.square(n);
            CHECK(f.eq(det(a), oracle::cofactor_det(a)));
        }
    }
    Generator g(rat(), 3);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = g.square(5);
        CHECK(rat().eq(det(a), oracle::cofactor_det(a)));
    }
}

TEST_CASE("complex LU agrees with cofactor expansion") {
    Generator g(c64(), 4);
    for (int t = 0; t < 100; ++t) {
        const Matrix a = g.square(g.between(1, 5));
        CHECK(c64().eq(det(a), oracle::cofactor_det(a)));
    }
}

TEST_CASE("determinant properties") {
    for (const Field& f : {rat(), gf(7), gf(2)}) {
        Generator g(f, 23);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = g.between(1, 4);
            const Matrix a = g.square(n), b = g.square(n);
            CHECK(f.eq(det(matmul(a, b)), f.mul(det(a), det(b))));
            CHECK(f.eq(det(transpose(a)), det(a)));
            const Matrix t2 = g.triangular(n);
            const std::uint64_t m = g.between(1, 5);
            CHECK(f.eq(det(hadamard_power(t2, m)), f.pow(det(t2), m)));
        }
    }
}

TEST_CASE("Hadamard examples and properties") {
    Generator g(rat(), 8);
    const Matrix z = g.zero_one(4);
    for (std::uint64_t m = 1; m <= 6; ++m) CHECK(hadamard_power(z, m) == z);
    CHECK(hadamard_power(ints(rat(), {{1, 2}, {3, 4}}), 2) == ints(rat(), {{1, 4}, {9, 16}}));
    const Matrix x = g.square(3);
    const Matrix ones = Matrix::generate(rat(), 3, 3, [](std::size_t, std::size_t) { return q(1); });
    CHECK(hadamard(x, ones) == x);
    for (std::uint64_t a = 1; a <= 3; ++a) {
        for (std::uint64_t b = 1; b <= 3; ++b) {
            CHECK(hadamard_power(x, a + b) == hadamard(hadamard_power(x, a), hadamard_power(x, b)));
        }
    }
    CHECK_ERRC(hadamard_power(x, 0), Errc::invalid_argument);
}

TEST_CASE("structural predicates") {
    for (const Field& f : {rat(), gf(3)}) {
        const Matrix i4 = Matrix::identity(f, 4);
        CHECK(is_triangular(i4));
        CHECK(is_permutation(i4));
        CHECK(is_diagonal(i4));
        CHECK(is_zero_one(i4));
    }
    CHECK(nnz(counterexample_4x4(rat())) == 7);
    const Matrix swap = ints(rat(), {{0, 1}, {1, 0}});
    CHECK(is_permutation(swap));
    CHECK_FALSE(is_triangular(swap));
    CHECK(is_upper_triangular(ints(rat(), {{1, 2}, {0, 3}})));
    CHECK_FALSE(is_lower_triangular(ints(rat(), {{1, 2}, {0, 3}})));
    CHECK(is_lower_triangular(ints(rat(), {{1, 0}, {5, 3}})));
    CHECK_FALSE(is_permutation(ints(rat(), {{1, 1}, {0, 0}})));
    CHECK_FALSE(is_permutation(ints(rat(), {{2, 0}, {0, 1}})));
    CHECK_FALSE(is_zero_one(ints(rat(), {{2, 0}, {0, 1}})));
    CHECK(is_zero(Matrix(rat(), 2, 3)));
}

TEST_CASE("rank-one outer products") {
    const Field f = rat();
    const Matrix e1 = ints(f, {{1}, {0}}), e2 = ints(f, {{0}, {1}});
    CHECK(rank1(e1, e2) == ints(f, {{0, 1}, {0, 0}}));
    Generator g(f, 12);
    for (int t = 0; t < 30; ++t) {
        const Matrix x = g.column_vector(3), y = g.column_vector(3);
        const std::uint64_t m = g.between(1, 5);
        CHECK(hadamard_power(rank1(x, y), m) == rank1(hadamard_power(x, m), hadamard_power(y, m)));
    }
    CHECK(is_zero(rank1(Matrix(f, 3, 1), g.column_vector(3))));
}

TEST_CASE("matrix text format round-trips") {
    for (const Field& f : {rat(), gf(7), c64()}) {
        Generator g(f, 31);
        const Matrix a = g.matrix(2, 3);
        const std::string text = format_matrix(a);
        CHECK(text.rfind("field " + f.name() + "\n2 3\n", 0) == 0);
        CHECK(parse_matrix(text) == a);
    }
    const Matrix half(rat(), 1, 2, {q(1, 2), q(-3)});
    CHECK(format_matrix(half) == "field rat\n1 2\n1/2 -3\n");
}

TEST_CASE("matrix parse errors carry positions") {
    auto message_of = [](const std::string& text) {
        try {
            parse_matrix(text);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            return std::string(e.what());
        }
        FAIL("no error");
        return std::string();
    };
    CHECK(message_of("field rat\n2 2\n1 2\n3 x\n").find("line 4, column 3") != std::string::npos);
    CHECK(message_of("field qq\n1 1\n1\n").find("line 1") != std::string::npos);
    CHECK(message_of("field rat\n2 2\n1 2\n").find("line") != std::string::npos);
    CHECK(message_of("field rat\n1 2\n1 2 3\n").find("line 3") != std::string::npos);
    CHECK(message_of("field rat\n0 2\n").find("line 2") != std::string::npos);
}

TEST_CASE("matrix files") {
    const auto path = std::filesystem::temp_directory_path() / "kpd_matrix_test.mat";
    const Matrix a = ints(gf(11), {{1, 2}, {3, 4}});
    write_matrix_file(path.string(), a);
    CHECK(read_matrix_file(path.string()) == a);
    std::filesystem::remove(path);
    CHECK_ERRC(read_matrix_file("/nonexistent/kpd.mat"), Errc::invalid_input);
}
