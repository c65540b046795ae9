#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <numeric>

#include "kpd/detroot.hpp"
#include "kpd/random.hpp"
#include "oracles.hpp"

using namespace kpd;
using namespace testing_support;

namespace {

// Membership of a in the class (m, p), decided by exhaustive scan of GF(q).
bool member(const Field& f, const RootClass& c, const Scalar& a) { return f.eq(f.pow(a, c.order()), c.power()); }

}  // namespace

TEST_CASE("class examples over GF(7)") {
    const Field f = gf(7);
    CHECK(class_of(f, f.from_int(3), 2) == class_of(f, f.from_int(4), 2));
    CHECK(f.eq(class_of(f, f.from_int(3), 2).power(), f.from_int(2)));
    CHECK(class_of(f, f.from_int(3), 2).order() == 2);
    CHECK_FALSE(class_of(f, f.from_int(3), 2) == class_of(f, f.from_int(3), 3));
    CHECK(root_of(f, f.from_int(2), 2).has_value());
    CHECK_FALSE(root_of(f, f.from_int(3), 2).has_value());
    CHECK(root_of(f, f.zero(), 2)->is_zero());
    CHECK(class_of(f, f.from_int(3), 2).to_string() == "root[2]{2}");
}

TEST_CASE("class equality matches coset equality") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Field f = gf(p);
        for (std::uint64_t m = 1; m <= 6; ++m) {
            for (const auto& a : f.elements()) {
                for (const auto& b : f.elements()) {
                    // a R_m = b R_m  <=>  the two sets {x : x^m = a^m}, {x : x^m = b^m} coincide.
                    bool same = true;
                    for (const auto& x : f.elements()) {
                        same = same && member(f, class_of(f, a, m), x) == f.eq(f.pow(x, m), f.pow(b, m));
                    }
                    CHECK((class_of(f, a, m) == class_of(f, b, m)) == same);
                }
            }
        }
    }
}

TEST_CASE("root_of follows the power criterion") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Field f = gf(p);
        for (std::uint64_t m = 1; m <= 6; ++m) {
            const std::uint64_t g = std::gcd<std::uint64_t>(m, p - 1);
            for (const auto& b : f.elements()) {
                const bool criterion = f.is_zero(b) || f.is_one(f.pow(b, (p - 1) / g));
                bool scan = false;
                for (const auto& x : f.elements()) scan = scan || f.eq(f.pow(x, m), b);
                CHECK(root_of(f, b, m).has_value() == criterion);
                CHECK(criterion == scan);
            }
        }
    }
}

TEST_CASE("class arithmetic") {
    const Field f = gf(7);
    const RootClass c = class_of(f, f.from_int(3), 2);
    const RootClass sq = mul(c, c);
    CHECK(sq.order() == 2);
    CHECK(f.eq(sq.power(), f.from_int(4)));
    const RootClass e = embed(c, 2);
    CHECK(e.order() == 4);
    CHECK(f.eq(e.power(), f.from_int(4)));
    CHECK_ERRC(mul(c, class_of(f, f.one(), 3)), Errc::order_mismatch);
    CHECK(nth_root_class(c, 3).order() == 6);
    CHECK(f.eq(nth_root_class(c, 3).power(), c.power()));
}

TEST_CASE("star is commutative, associative and compatible with embedding") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const Field f = gf(p);
        Generator g(f, p);
        for (int t = 0; t < 200; ++t) {
            const std::uint64_t m = g.between(1, 3), n = g.between(1, 3), k = g.between(1, 3);
            const RootClass a = class_of(f, g.scalar(), m);
            const RootClass b = class_of(f, g.scalar(), n);
            const RootClass c = class_of(f, g.scalar(), k);
            CHECK(star(a, b) == star(b, a));
            CHECK(star(star(a, b), c) == star(a, star(b, c)));
            // On representatives: (ra R_m) * (rb R_n) has (ra rb)^(mn) = (ra^m)^n (rb^n)^m.
            const Scalar ra = g.scalar(), rb = g.scalar();
            CHECK(star(class_of(f, ra, m), class_of(f, rb, n)) == class_of(f, f.mul(ra, rb), m * n));
            const RootClass b2 = class_of(f, rb, m);
            CHECK(star(class_of(f, ra, m), b2).order() == m * m);
            CHECK(embed(mul(class_of(f, ra, m), b2), k) == mul(embed(class_of(f, ra, m), k), embed(b2, k)));
        }
    }
}

TEST_CASE("Det examples") {
    for (const Field& f : {rat(), gf(7), c64()}) {
        const auto d = Det(Matrix::identity(f, 3));
        REQUIRE(d.has_value());
        CHECK(d->order() == 3);
        CHECK(f.is_one(d->power()));
    }
    CHECK_FALSE(Det(ints(rat(), {{2, 0}, {0, 1}})).has_value());
    const auto four = Det(ints(rat(), {{4, 0}, {0, 1}}));
    REQUIRE(four.has_value());
    CHECK(rat().eq(four->power(), q(4)));
    CHECK(Det(Matrix(gf(5), 2, 2))->is_zero());
    CHECK_FALSE(Det(ints(gf(7), {{3, 0}, {0, 1}})).has_value());
    CHECK(Det(ints(gf(7), {{2, 0}, {0, 1}})).has_value());
}

TEST_CASE("Det is multiplicative on D_n") {
    for (const Field& f : {gf(7), gf(11), rat()}) {
        Generator g(f, 21);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = g.between(1, 3);
            const Matrix a = g.in_dn(n), b = g.in_dn(n);
            const auto da = Det(a), db = Det(b);
            REQUIRE(da.has_value());
            REQUIRE(db.has_value());
            const auto dab = Det(matmul(a, b));
            REQUIRE(dab.has_value());
            CHECK(*dab == mul(*da, *db));
        }
    }
}

TEST_CASE("Det_1 of a Kronecker product") {
    const Field f = gf(7);
    Generator g(f, 22);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = g.between(1, 3), n = g.between(1, 3);
        const Matrix a = g.in_dn(m), b = g.square(n);
        const ClassScaledMatrix k = Det1_kron(a, b);
        CHECK(k.scale() == *Det(a));
        CHECK(grid_equal(Det1_general(kron(a, b), FactorShape(m, n)), k));
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                // Entry (i,j) is the class of the (i,j) slice, det(A) b_ij^m.
                CHECK(k.entry(i, j) == *root_of(f, oracle::slice_det(kron(a, b), m, n)(i, j), m));
            }
        }
    }
    CHECK_ERRC(Det1_kron(ints(rat(), {{2, 0}, {0, 1}}), Matrix::identity(rat(), 2)), Errc::not_in_dn);
}

TEST_CASE("Det of a class-scaled matrix and scaled products") {
    const Field f = gf(11);
    Generator g(f, 23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t m = g.between(1, 3), n = g.between(1, 3);
        const Matrix a = g.in_dn(m), b = g.in_dn(m), c = g.square(n), d = g.square(n);
        const ClassScaledMatrix x = Det1_kron(a, c), y = Det1_kron(b, d);
        const ClassScaledMatrix xy = mul_scaled(x, y);
        CHECK(xy == Det1_kron(matmul(a, b), matmul(c, d)));
        const RootClass dx = Det_of_scaled(x);
        CHECK(dx.order() == m * n);
        CHECK(f.eq(dx.power(), f.mul(f.pow(x.scale().power(), n), f.pow(det(c), m))));
    }
}

TEST_CASE("Det_1 on general inputs") {
    const Field f = gf(7);
    const ClassGrid id = Det1_general(Matrix::identity(f, 4), FactorShape(2, 2));
    REQUIRE(id.size() == 2);
    CHECK(id[0][0] == class_of(f, f.one(), 2));
    CHECK(id[0][1].is_zero());
    CHECK(id[1][0].is_zero());
    CHECK(id[1][1] == class_of(f, f.one(), 2));
    // Slice (1,1) has determinant 3, a non-square mod 7.
    const Matrix bad = Matrix::diagonal(f, {f.from_int(3), f.one(), f.one(), f.one()});
    CHECK_ERRC(Det1_general(bad, FactorShape(2, 2)), Errc::not_in_dn);
    CHECK(format_grid(id).find("root[2]{1}") != std::string::npos);
}

TEST_CASE("Det_2 is Det_1 of the shuffled matrix") {
    const Field f = gf(11);
    Generator g(f, 24);
    for (int t = 0; t < 50; ++t) {
        const std::size_t m = g.between(1, 3), n = g.between(1, 3);
        const Matrix a = g.in_dn(n), b = g.in_dn(n);
        const Matrix pm = g.permutation(m);
        CHECK(grid_equal(Det2_general(kron(pm, a), FactorShape(m, n)), Det1_general(kron(a, pm), FactorShape(n, m))));
        CHECK(grid_equal(Det2_general(kron(b, a), FactorShape(n, n)), Det1_general(kron(a, b), FactorShape(n, n))));
    }
}

TEST_CASE("determinant-root laws") {
    for (const Field& f : {gf(7), gf(11)}) {
        Generator g(f, 25);
        for (int t = 0; t < 150; ++t) {
            const std::size_t m = g.between(1, 3), n = g.between(1, 3);
            CHECK(check_detroot_completion(g.in_dn(m), g.in_dn(n)).holds);
            CHECK(check_detroot_multiplicativity(g.in_dn(m), g.in_dn(m), g.square(n), g.square(n)).holds);
        }
    }
}
