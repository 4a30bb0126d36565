#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "edd/rational.hpp"

namespace edd {

/// Univariate polynomial over the rationals, coefficients stored lowest
/// degree first. The zero polynomial is the empty coefficient list; a
/// nonzero polynomial always has a nonzero leading (last) coefficient.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit by design
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly variable();                 // x
    static Poly monomial(const Rational& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    // Nonzero constants are the units of Q[x].
    bool is_unit() const { return coeffs_.size() == 1; }

    // Precondition: nonzero. There is deliberately no degree for the zero
    // polynomial; callers test is_zero() first.
    int degree() const;

    const Rational& leading() const;        // precondition: nonzero
    Rational coeff(int k) const;            // 0 beyond the stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& c) const;   // c * this
    Poly monic() const;                     // precondition: nonzero
    Poly pow(int e) const;                  // e >= 0

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;

    // Grammar-compatible rendering, e.g. "x^2 - 2*x + 1", "3/2*x".
    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

// Long division: a = q*b + r with r == 0 or deg r < deg b. Throws
// DivisionByZeroError when b == 0.
PolyDivMod divmod(const Poly& a, const Poly& b);

// Monic gcd via the Euclidean algorithm, renormalizing every remainder to
// keep coefficients small. gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);

// Largest k with (x - lambda)^k dividing p. Throws DomainError on p == 0.
int root_order(const Poly& p, const Rational& lambda);

// Taylor coefficients of p around `point`: p(point + h) = sum c_k h^k.
std::vector<Rational> taylor_coefficients(const Poly& p, const Rational& point, int count);

}  // namespace edd
