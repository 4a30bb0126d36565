#pragma once

#include <string>
#include <vector>

#include "edd/poly.hpp"
#include "edd/rational.hpp"

namespace edd {

/// Classification of the vanishing order of a jet at its expansion point.
///
/// Finite(k) certifies a nonzero coefficient at index k with zeros below.
/// KnownZero is the exact zero element. BelowTruncation means every stored
/// coefficient vanishes but nothing more is known: truncation can never
/// certify that an analytic function vanishes identically.
struct JetOrder {
    enum class Kind { Finite, KnownZero, BelowTruncation };
    Kind kind;
    int order = 0;  // meaningful only for Finite

    static JetOrder finite(int k) { return {Kind::Finite, k}; }
    static JetOrder known_zero() { return {Kind::KnownZero, 0}; }
    static JetOrder below_truncation() { return {Kind::BelowTruncation, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    friend bool operator==(const JetOrder& a, const JetOrder& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.order == b.order);
    }
};

/// Truncated Taylor expansion at a rational point: N exact rational
/// coefficients c_0..c_{N-1} in the local variable, plus a flag recording
/// that the element is the actual zero function (not merely zero to
/// truncation). All jets combined in one expression must share the
/// expansion point and truncation order.
class Jet {
public:
    Jet(Rational point, int truncation, std::vector<Rational> coeffs, bool known_zero = false);

    static Jet zero(const Rational& point, int truncation);
    static Jet constant(const Rational& value, const Rational& point, int truncation);

    const Rational& point() const { return point_; }
    int truncation() const { return trunc_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    bool known_zero() const { return known_zero_; }

    // Value at the expansion point.
    const Rational& constant_term() const { return coeffs_[0]; }
    bool is_unit() const { return coeffs_[0] != 0; }

    JetOrder order() const;

    Jet operator-() const;
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend bool operator==(const Jet& a, const Jet& b);
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

    Jet pow(int e) const;  // e >= 0

    // Quotient by a unit (nonzero constant term): q with q*u == *this in
    // the truncated ring. Throws NotAUnitError otherwise.
    Jet div_unit(const Jet& u) const;

    // Multiply by the local variable to the k-th power (shift up).
    Jet shifted_up(int k) const;
    // Exact quotient by the k-th power of the local variable; requires the
    // first k stored coefficients to vanish. The top k coefficients of the
    // result are unspecified by the data and are filled with zeros.
    Jet shifted_down(int k) const;

    std::string to_string() const;

private:
    void check_context(const Jet& o) const;
    Rational point_;
    int trunc_;
    std::vector<Rational> coeffs_;
    bool known_zero_;
};

enum class JetBuiltin { Exp, Sin, Cos, Sinh, Cosh, Poly };

/// Jet of f(scale * z) recentered at `point`. Transcendental builtins are
/// exact only when scale*point == 0; anything else throws DomainError
/// because the recentering constants (e.g. sin of a nonzero rational) are
/// irrational. Poly is the linear function scale*z itself and recenters
/// anywhere.
Jet builtin_jet(JetBuiltin name, const Rational& scale, const Rational& point, int truncation);
Jet builtin_jet(const std::string& name, const Rational& scale, const Rational& point, int truncation);

/// Recast a polynomial as a jet: the first N Taylor coefficients at `point`.
/// The known-zero flag is set exactly when p == 0.
Jet poly_to_jet(const Poly& p, const Rational& point, int truncation);

inline constexpr int kDefaultTruncation = 16;

}  // namespace edd
