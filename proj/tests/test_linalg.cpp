#include <doctest.h>

#include "edd/fraction_free.hpp"
#include "edd/matrix.hpp"
#include "edd/rational_linalg.hpp"
#include "test_support.hpp"

using namespace edd;
using edd::testing::Rng;

TEST_CASE("rational rank and kernel") {
    RingMatrix<Rational> a(2, 3, Rational(0));
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
    CHECK(rank(a) == 1);
    const RingMatrix<Rational> k = kernel(a);
    CHECK(k.cols() == 2);
    for (int j = 0; j < k.cols(); ++j) {
        for (int i = 0; i < 2; ++i) {
            Rational acc(0);
            for (int c = 0; c < 3; ++c) acc += a(i, c) * k(c, j);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("rational solve") {
    RingMatrix<Rational> a(2, 2, Rational(0));
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = -1;
    const auto x = solve(a, {Rational(3), Rational(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);

    RingMatrix<Rational> sing(2, 1, Rational(1));
    CHECK_FALSE(solve(sing, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("reduce_mod_span") {
    RingMatrix<Rational> basis(3, 1, Rational(0));
    basis(0, 0) = 1; basis(1, 0) = -2; basis(2, 0) = 1;
    const auto r = reduce_mod_span(basis, {Rational(2), Rational(-4), Rational(2)});
    CHECK(r == std::vector<Rational>{0, 0, 0});
    CHECK(in_column_span(basis, {Rational(1), Rational(-2), Rational(1)}));
    CHECK_FALSE(in_column_span(basis, {Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("fraction-free elimination stays in the ring and matches rational rank") {
    Rng rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        const int m = dim(rng), n = dim(rng);
        const RingMatrix<Poly> a = testing::random_poly_matrix(rng, m, n, 2);
        const int r = ff_rank(a);

        const RingMatrix<Poly> k = ff_kernel(a);
        CHECK(k.cols() == n - r);
        // Exact annihilation is the strongest possible check of both the
        // elimination and the exactness of every division in it.
        if (k.cols() > 0) {
            const RingMatrix<Poly> prod = matmul(a, k, Poly());
            CHECK(is_zero_matrix(prod));
            CHECK(ff_rank(k) == k.cols());
        }
    }
}

TEST_CASE("fraction-free determinant") {
    Rng rng(13);
    // Cross-check against cofactor expansion on small random matrices.
    const auto cofactor_det = [](const RingMatrix<Poly>& a, auto&& self) -> Poly {
        const int n = a.rows();
        if (n == 1) return a(0, 0);
        Poly acc;
        for (int j = 0; j < n; ++j) {
            RingMatrix<Poly> minor(n - 1, n - 1, Poly());
            for (int r = 1; r < n; ++r)
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(r - 1, mc++) = a(r, c);
                }
            const Poly term = a(0, j) * self(minor, self);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        const int n = dim(rng);
        const RingMatrix<Poly> a = testing::random_poly_matrix(rng, n, n, 2, 3);
        CHECK(ff_determinant(a) == cofactor_det(a, cofactor_det));
    }
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        const int n = dim(rng);
        const RingMatrix<Int> a = testing::random_int_matrix(rng, n, n, 9);
        RingMatrix<Poly> ap = to_poly_matrix(a);
        CHECK(Poly(Rational(ff_determinant(a))) == cofactor_det(ap, cofactor_det));
    }
}

TEST_CASE("integer kernels are exact too") {
    Rng rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        const int m = dim(rng), n = dim(rng);
        const RingMatrix<Int> a = testing::random_int_matrix(rng, m, n, 6);
        const RingMatrix<Int> k = ff_kernel(a);
        CHECK(k.cols() == n - ff_rank(a));
        if (k.cols() > 0) CHECK(is_zero_matrix(matmul(a, k, Int(0))));
    }
}
