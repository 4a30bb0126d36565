#include <doctest.h>

#include "edd/jet.hpp"
#include "test_support.hpp"

using namespace edd;
using edd::testing::Rng;

namespace {

Jet random_jet(Rng& rng, const Rational& point, int n) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = coeff(rng);
    return Jet(point, n, std::move(c));
}

std::vector<Rational> rats(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

}  // namespace

TEST_CASE("jet multiplication matches known series") {
    const Jet e = builtin_jet(JetBuiltin::Exp, Rational(1), Rational(0), 4);
    const Jet e2 = e * e;  // exp(2z)
    CHECK(e2.coeffs() == rats({1, 2, 2, Rational(4, 3)}));

    const Jet s = builtin_jet(JetBuiltin::Sin, Rational(1), Rational(0), 6);
    const Jet s2 = s * s;
    CHECK(s2.coeffs() == rats({0, 0, 1, 0, Rational(-1, 3), 0}));
}

TEST_CASE("known zero is absorbed and propagated") {
    const Jet z = Jet::zero(Rational(0), 5);
    Rng rng(3);
    const Jet a = random_jet(rng, Rational(0), 5);
    CHECK(a + z == a);
    CHECK((a * z).known_zero());
    CHECK((z * a).known_zero());
    CHECK((z + z).known_zero());
}

TEST_CASE("mismatched jet contexts are rejected") {
    const Jet a = Jet::constant(Rational(1), Rational(0), 4);
    const Jet b = Jet::constant(Rational(1), Rational(0), 5);
    const Jet c = Jet::constant(Rational(1), Rational(1), 4);
    CHECK_THROWS_AS(a + b, ContextMismatchError);
    CHECK_THROWS_AS(a * c, ContextMismatchError);
}

TEST_CASE("division by a unit") {
    Rng rng(17);
    const Jet u = builtin_jet(JetBuiltin::Exp, Rational(1), Rational(0), 6);
    CHECK(u.div_unit(u) == Jet::constant(Rational(1), Rational(0), 6));

    // z / exp(z) = z * exp(-z)
    const Jet z = builtin_jet(JetBuiltin::Poly, Rational(1), Rational(0), 6);
    const Jet q = z.div_unit(u);
    CHECK(q.coeff(0) == 0);
    CHECK(q.coeff(1) == 1);
    CHECK(q.coeff(2) == -1);
    CHECK(q.coeff(3) == Rational(1, 2));
    CHECK(q * u == z);

    CHECK(Jet::zero(Rational(0), 6).div_unit(u).known_zero());
    CHECK_THROWS_AS(u.div_unit(z), NotAUnitError);
}

TEST_CASE("division round-trips against multiplication") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Jet a = random_jet(rng, Rational(0), 8);
        Jet u = random_jet(rng, Rational(0), 8);
        if (u.coeff(0) == 0) u = u + Jet::constant(Rational(1), Rational(0), 8);
        CHECK((a * u).div_unit(u) == a);
    }
}

TEST_CASE("vanishing order") {
    const Jet z = builtin_jet(JetBuiltin::Poly, Rational(1), Rational(0), 8);
    const Jet e2 = builtin_jet(JetBuiltin::Exp, Rational(2), Rational(0), 8);
    CHECK((z * e2).order() == JetOrder::finite(1));

    const Jet e = builtin_jet(JetBuiltin::Exp, Rational(1), Rational(0), 8);
    const Jet s = builtin_jet(JetBuiltin::Sin, Rational(1), Rational(0), 8);
    CHECK((e * s * s).order() == JetOrder::finite(2));

    CHECK(Jet::zero(Rational(0), 8).order() == JetOrder::known_zero());

    // Coefficient-wise cancellation is not a certified zero.
    Rng rng(29);
    const Jet a = random_jet(rng, Rational(0), 8);
    CHECK((a - a).order() == JetOrder::below_truncation());
}

TEST_CASE("order is additive under multiplication") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> shift(0, 3);
        Jet a = random_jet(rng, Rational(0), 12).shifted_up(shift(rng));
        Jet b = random_jet(rng, Rational(0), 12).shifted_up(shift(rng));
        const JetOrder oa = a.order(), ob = b.order();
        if (!oa.is_finite() || !ob.is_finite()) continue;
        if (oa.order + ob.order >= 12) continue;
        CHECK((a * b).order() == JetOrder::finite(oa.order + ob.order));
    }
}

TEST_CASE("jet ring axioms hold to truncation") {
    Rng rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const Jet a = random_jet(rng, Rational(1, 2), 7);
        const Jet b = random_jet(rng, Rational(1, 2), 7);
        const Jet c = random_jet(rng, Rational(1, 2), 7);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("builtin series") {
    CHECK(builtin_jet("exp", Rational(2), Rational(0), 4).coeffs() == rats({1, 2, 2, Rational(4, 3)}));
    CHECK(builtin_jet("sin", Rational(1), Rational(0), 5).coeffs() == rats({0, 1, 0, Rational(-1, 6), 0}));
    CHECK(builtin_jet("sinh", Rational(1), Rational(0), 5).coeffs() == rats({0, 1, 0, Rational(1, 6), 0}));
    CHECK(builtin_jet("cos", Rational(1), Rational(0), 5).coeffs() == rats({1, 0, Rational(-1, 2), 0, Rational(1, 24)}));
    CHECK(builtin_jet("cosh", Rational(3), Rational(0), 3).coeffs() == rats({1, 0, Rational(9, 2)}));
    CHECK_THROWS_AS(builtin_jet("tan", Rational(1), Rational(0), 4), DomainError);
}

TEST_CASE("recentering") {
    // The linear builtin recenters anywhere: 3z at z = 2 is 6 + 3h.
    const Jet lin = builtin_jet(JetBuiltin::Poly, Rational(3), Rational(2), 4);
    CHECK(lin.coeffs() == rats({6, 3, 0, 0}));
    // Transcendental builtins only at arguments that stay rational.
    CHECK_THROWS_AS(builtin_jet(JetBuiltin::Sin, Rational(1), Rational(1), 4), DomainError);
    CHECK_NOTHROW(builtin_jet(JetBuiltin::Sin, Rational(0), Rational(1), 4));
    CHECK(builtin_jet(JetBuiltin::Exp, Rational(0), Rational(5), 3).coeffs() == rats({1, 0, 0}));
}

TEST_CASE("poly recast as jet") {
    const Poly x = Poly::variable();
    const Poly p = (x - Poly(2)) * (x - Poly(2));
    const Jet j = poly_to_jet(p, Rational(2), 5);
    CHECK(j.order() == JetOrder::finite(2));
    CHECK(poly_to_jet(Poly(), Rational(1), 4).known_zero());
}

TEST_CASE("longer truncation agrees on the shared prefix") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> coeff(-4, 4);
        std::vector<Rational> ca(12), cb(12);
        for (auto& v : ca) v = coeff(rng);
        for (auto& v : cb) v = coeff(rng);
        const auto run = [&](int n) {
            const Jet a(Rational(0), n, std::vector<Rational>(ca.begin(), ca.begin() + n));
            const Jet b(Rational(0), n, std::vector<Rational>(cb.begin(), cb.begin() + n));
            Jet u = b + Jet::constant(Rational(1), Rational(0), n);
            if (u.coeff(0) == 0) u = u + Jet::constant(Rational(2), Rational(0), n);
            return (a * b + a).div_unit(u);
        };
        const Jet small = run(6);
        const Jet large = run(12);
        for (int k = 0; k < 6; ++k) CHECK(small.coeff(k) == large.coeff(k));
    }
}
