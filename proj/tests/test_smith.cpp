#include <doctest.h>

#include "edd/fraction_free.hpp"
#include "edd/smith.hpp"
#include "test_support.hpp"

using namespace edd;
using edd::testing::Rng;

namespace {

const Poly x = Poly::variable();

template <class T>
void check_smith_contract(const RingMatrix<T>& a, const SmithDecomposition<T>& d) {
    using tr = euclid_traits<T>;
    // Exact reconstruction.
    CHECK(d.U * d.S * d.V == a);
    // Unimodular transformations.
    CHECK(tr::is_unit(ff_determinant(d.U)));
    CHECK(tr::is_unit(ff_determinant(d.V)));
    // Diagonal with trailing zeros and a divisibility chain.
    for (int i = 0; i < d.S.rows(); ++i)
        for (int j = 0; j < d.S.cols(); ++j)
            if (i != j) CHECK(tr::is_zero(d.S(i, j)));
    const int steps = std::min(d.S.rows(), d.S.cols());
    for (int i = 0; i < steps; ++i) {
        if (i < d.rank) CHECK_FALSE(tr::is_zero(d.S(i, i)));
        else CHECK(tr::is_zero(d.S(i, i)));
        if (i + 1 < d.rank) CHECK(tr::is_zero(tr::divmod(d.S(i + 1, i + 1), d.S(i, i)).second));
    }
    // Normalization of the invariant factors.
    for (const T& f : d.invariant_factors) CHECK(tr::is_zero(f - tr::normalize(f).first));
    // Independent rank check by fraction-free elimination.
    CHECK(d.rank == ff_rank(a));
}

template <class T>
void check_against_minor_oracle(const RingMatrix<T>& a, const SmithDecomposition<T>& d) {
    using tr = euclid_traits<T>;
    T product = tr::one();
    for (int k = 1; k <= d.rank; ++k) {
        product = product * d.invariant_factors[static_cast<std::size_t>(k - 1)];
        CHECK(tr::normalize(product).first == determinantal_divisors_oracle(a, k));
    }
    if (d.rank < std::min(a.rows(), a.cols()))
        CHECK(tr::is_zero(determinantal_divisors_oracle(a, d.rank + 1)));
}

}  // namespace

TEST_CASE("smith form of small polynomial matrices") {
    RingMatrix<Poly> a(2, 2, Poly());
    a(0, 0) = x; a(0, 1) = x;
    a(1, 0) = x; a(1, 1) = x * x;
    const auto d = smith_decompose(a);
    REQUIRE(d.rank == 2);
    // Oracle route: gcd of entries is x, the determinant is x^3 - x^2.
    CHECK(determinantal_divisors_oracle(a, 1) == x);
    CHECK(determinantal_divisors_oracle(a, 2) == x * x * x - x * x);
    CHECK(d.invariant_factors[0] == x);
    CHECK(d.invariant_factors[1] == x * x - x);
    check_smith_contract(a, d);
}

TEST_CASE("smith form of the identity") {
    const auto d = smith_decompose(RingMatrix<Poly>::identity(2, Poly(1)));
    CHECK(d.rank == 2);
    CHECK(d.invariant_factors == std::vector<Poly>{Poly(1), Poly(1)});
}

TEST_CASE("smith form over the integers") {
    RingMatrix<Int> a(2, 2, Int(0));
    a(0, 0) = 2; a(0, 1) = 4;
    a(1, 0) = 6; a(1, 1) = 8;
    const auto d = smith_decompose(a);
    CHECK(d.invariant_factors == std::vector<Int>{Int(2), Int(4)});
    CHECK(determinantal_divisors_oracle(a, 1) == 2);
    CHECK(determinantal_divisors_oracle(a, 2) == 8);
    check_smith_contract(a, d);
}

TEST_CASE("smith form of a zero matrix") {
    const RingMatrix<Poly> z(2, 3, Poly());
    const auto d = smith_decompose(z);
    CHECK(d.rank == 0);
    CHECK(d.invariant_factors.empty());
    check_smith_contract(z, d);
}

TEST_CASE("determinantal divisor oracle edge cases") {
    const auto i3 = RingMatrix<Poly>::identity(3, Poly(1));
    CHECK(determinantal_divisors_oracle(i3, 2) == Poly(1));
    CHECK_THROWS_AS(determinantal_divisors_oracle(i3, 0), DomainError);
    CHECK_THROWS_AS(determinantal_divisors_oracle(i3, 4), DomainError);
}

TEST_CASE("unimodular inverse") {
    const auto i2 = RingMatrix<Poly>::identity(2, Poly(1));
    CHECK(unimodular_inverse(i2) == i2);

    RingMatrix<Poly> u(2, 2, Poly());
    u(0, 0) = Poly(1); u(0, 1) = x;
    u(1, 1) = Poly(1);
    const auto uinv = unimodular_inverse(u);
    CHECK(uinv(0, 0) == Poly(1));
    CHECK(uinv(0, 1) == -x);
    CHECK(uinv(1, 0) == Poly());
    CHECK(uinv(1, 1) == Poly(1));

    RingMatrix<Poly> bad(1, 1, x);
    CHECK_THROWS_AS(unimodular_inverse(bad), NotAUnitError);
}

TEST_CASE("inverse of smith transformations multiplies back to identity") {
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> dim(1, 3);
        const RingMatrix<Poly> a = testing::random_poly_matrix(rng, dim(rng), dim(rng), 2, 3);
        const auto d = smith_decompose(a);
        const auto vinv = unimodular_inverse(d.V);
        CHECK(d.V * vinv == RingMatrix<Poly>::identity(d.V.rows(), Poly(1)));
        const auto uinv = unimodular_inverse(d.U);
        CHECK(uinv * d.U == RingMatrix<Poly>::identity(d.U.rows(), Poly(1)));
    }
}

TEST_CASE("partial multiplicities from invariant factors") {
    SmithDecomposition<Poly> d;
    d.rank = 2;
    d.invariant_factors = {x, x * x * (x - Poly(1))};
    CHECK(partial_multiplicities_at(d, Rational(0)) == std::vector<int>{2, 1});
    CHECK(partial_multiplicities_at(d, Rational(1)) == std::vector<int>{1});
    CHECK(partial_multiplicities_at(d, Rational(7)) == std::vector<int>{});

    SmithDecomposition<Poly> trivial;
    trivial.rank = 2;
    trivial.invariant_factors = {Poly(1), Poly(1)};
    CHECK(partial_multiplicities_at(trivial, Rational(3)).empty());

    // Local data shaped like the worked example: orders 1 and 2 at zero.
    SmithDecomposition<Poly> ex;
    ex.rank = 2;
    ex.invariant_factors = {x, x * x};
    CHECK(partial_multiplicities_at(ex, Rational(0)) == std::vector<int>{2, 1});
}

TEST_CASE("smith property suite, polynomial and integer") {
    Rng rng(2024);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const RingMatrix<Poly> a = testing::random_poly_matrix(rng, dim(rng), dim(rng), 3, 3);
        const auto d = smith_decompose(a);
        check_smith_contract(a, d);
        if (std::min(a.rows(), a.cols()) <= 4) check_against_minor_oracle(a, d);
    }
    for (int trial = 0; trial < 60; ++trial) {
        const RingMatrix<Int> a = testing::random_int_matrix(rng, dim(rng), dim(rng));
        const auto d = smith_decompose(a);
        check_smith_contract(a, d);
        check_against_minor_oracle(a, d);
    }
    // Rank-deficient shapes: products with a thin inner dimension.
    for (int trial = 0; trial < 30; ++trial) {
        const int m = dim(rng), n = dim(rng);
        const int inner = std::max(1, std::min(m, n) - 1);
        const RingMatrix<Poly> a =
            matmul(testing::random_poly_matrix(rng, m, inner, 1, 2),
                   testing::random_poly_matrix(rng, inner, n, 1, 2), Poly());
        const auto d = smith_decompose(a);
        CHECK(d.rank <= inner);
        check_smith_contract(a, d);
    }
}
