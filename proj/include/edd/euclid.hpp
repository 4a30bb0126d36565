#pragma once

#include <utility>

#include "edd/errors.hpp"
#include "edd/poly.hpp"
#include "edd/rational.hpp"

namespace edd {

/// The Euclidean-domain operations the Smith reduction and the
/// fraction-free eliminations are generic over. Instantiated for the two
/// rings this library works in globally: Z and Q[x].
template <class T>
struct euclid_traits;

template <>
struct euclid_traits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return a == 0; }
    static bool is_unit(const Int& a) { return a == 1 || a == -1; }
    static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
        if (b == 0) throw DivisionByZeroError("integer division by zero");
        return {a / b, a % b};  // |r| < |b|
    }
    // Strict Euclidean size comparison, both arguments nonzero.
    static bool size_less(const Int& a, const Int& b) { return abs(a) < abs(b); }
    // a = unit * normalized with normalized >= 0.
    static std::pair<Int, Int> normalize(const Int& a) {
        return a < 0 ? std::pair<Int, Int>{-a, Int(-1)} : std::pair<Int, Int>{a, Int(1)};
    }
    static Int unit_inverse(const Int& u) {
        if (!is_unit(u)) throw NotAUnitError("integer is not a unit");
        return u;
    }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
};

template <>
struct euclid_traits<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static bool is_unit(const Poly& a) { return a.is_unit(); }
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        auto r = edd::divmod(a, b);
        return {r.quotient, r.remainder};
    }
    static bool size_less(const Poly& a, const Poly& b) { return a.degree() < b.degree(); }
    // a = unit * normalized with normalized monic.
    static std::pair<Poly, Poly> normalize(const Poly& a) {
        if (a.is_zero()) return {Poly(), Poly(1)};
        return {a.monic(), Poly(a.leading())};
    }
    static Poly unit_inverse(const Poly& u) {
        if (!u.is_unit()) throw NotAUnitError("polynomial is not a unit");
        return Poly(Rational(1) / u.coeff(0));
    }
    static Poly gcd(const Poly& a, const Poly& b) { return edd::gcd(a, b); }
};

// Exact division in the domain; throws DomainError when it does not divide.
template <class T>
T exact_div(const T& a, const T& b) {
    auto [q, r] = euclid_traits<T>::divmod(a, b);
    if (!euclid_traits<T>::is_zero(r)) throw DomainError("inexact ring division");
    return q;
}

}  // namespace edd
