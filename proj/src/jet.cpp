#include "edd/jet.hpp"

#include <utility>

#include "edd/errors.hpp"

namespace edd {

Jet::Jet(Rational point, int truncation, std::vector<Rational> coeffs, bool known_zero)
    : point_(std::move(point)), trunc_(truncation), coeffs_(std::move(coeffs)), known_zero_(known_zero) {
    if (trunc_ < 1) throw DomainError("jet truncation order must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(trunc_), Rational(0));
    if (known_zero_) {
        for (const auto& c : coeffs_)
            if (c != 0) throw DomainError("known-zero jet with nonzero coefficient");
    }
}

Jet Jet::zero(const Rational& point, int truncation) {
    return Jet(point, truncation, {}, true);
}

Jet Jet::constant(const Rational& value, const Rational& point, int truncation) {
    if (value == 0) return zero(point, truncation);
    return Jet(point, truncation, {value});
}

void Jet::check_context(const Jet& o) const {
    if (point_ != o.point_ || trunc_ != o.trunc_)
        throw ContextMismatchError("jets have different expansion points or truncation orders");
}

JetOrder Jet::order() const {
    if (known_zero_) return JetOrder::known_zero();
    for (int k = 0; k < trunc_; ++k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0) return JetOrder::finite(k);
    return JetOrder::below_truncation();
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    a.check_context(b);
    std::vector<Rational> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
    return Jet(a.point_, a.trunc_, std::move(out), a.known_zero_ && b.known_zero_);
}

Jet operator-(const Jet& a, const Jet& b) {
    a.check_context(b);
    std::vector<Rational> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
    return Jet(a.point_, a.trunc_, std::move(out), a.known_zero_ && b.known_zero_);
}

Jet operator*(const Jet& a, const Jet& b) {
    a.check_context(b);
    if (a.known_zero_ || b.known_zero_) return Jet::zero(a.point_, a.trunc_);
    const int n = a.trunc_;
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j < n; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return Jet(a.point_, a.trunc_, std::move(out));
}

// Value equality in the truncated ring; the known-zero flag is provenance,
// not value.
bool operator==(const Jet& a, const Jet& b) {
    return a.point_ == b.point_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

Jet Jet::pow(int e) const {
    if (e < 0) throw DomainError("negative jet power");
    Jet result = Jet::constant(Rational(1), point_, trunc_);
    Jet base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Jet Jet::div_unit(const Jet& u) const {
    check_context(u);
    if (!u.is_unit()) throw NotAUnitError("jet divisor has zero constant term");
    if (known_zero_) return Jet::zero(point_, trunc_);
    // Standard power-series division: q_k = (a_k - sum_{j<k} q_j u_{k-j}) / u_0.
    std::vector<Rational> q(static_cast<std::size_t>(trunc_), Rational(0));
    const Rational inv = Rational(1) / u.coeffs_[0];
    for (int k = 0; k < trunc_; ++k) {
        Rational acc = coeffs_[static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j)
            acc -= q[static_cast<std::size_t>(j)] * u.coeffs_[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = acc * inv;
    }
    return Jet(point_, trunc_, std::move(q));
}

Jet Jet::shifted_up(int k) const {
    if (k < 0) throw DomainError("negative jet shift");
    if (known_zero_) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(trunc_), Rational(0));
    for (int i = 0; i + k < trunc_; ++i) out[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return Jet(point_, trunc_, std::move(out));
}

Jet Jet::shifted_down(int k) const {
    if (k < 0) throw DomainError("negative jet shift");
    if (known_zero_) return *this;
    for (int i = 0; i < k; ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
            throw DomainError("jet shift would drop a nonzero coefficient");
    std::vector<Rational> out(static_cast<std::size_t>(trunc_), Rational(0));
    for (int i = k; i < trunc_; ++i) out[static_cast<std::size_t>(i - k)] = coeffs_[static_cast<std::size_t>(i)];
    return Jet(point_, trunc_, std::move(out));
}

std::string Jet::to_string() const {
    std::string s = "[";
    for (int k = 0; k < trunc_; ++k) {
        if (k) s += ", ";
        s += edd::to_string(coeffs_[static_cast<std::size_t>(k)]);
    }
    s += "]";
    if (known_zero_) s += " (zero)";
    return s;
}

namespace {

// Coefficients of exp/sin/cos/sinh/cosh of (scale * h) around h = 0.
std::vector<Rational> series_at_origin(JetBuiltin name, const Rational& scale, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    Rational power(1);   // scale^k
    Rational fact(1);    // k!
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            power *= scale;
            fact *= k;
        }
        const Rational term = power / fact;
        switch (name) {
            case JetBuiltin::Exp:
                c[static_cast<std::size_t>(k)] = term;
                break;
            case JetBuiltin::Sin:
                if (k % 2 == 1) c[static_cast<std::size_t>(k)] = (k % 4 == 1) ? term : -term;
                break;
            case JetBuiltin::Cos:
                if (k % 2 == 0) c[static_cast<std::size_t>(k)] = (k % 4 == 0) ? term : -term;
                break;
            case JetBuiltin::Sinh:
                if (k % 2 == 1) c[static_cast<std::size_t>(k)] = term;
                break;
            case JetBuiltin::Cosh:
                if (k % 2 == 0) c[static_cast<std::size_t>(k)] = term;
                break;
            case JetBuiltin::Poly:
                break;  // handled by the caller
        }
    }
    return c;
}

}  // namespace

Jet builtin_jet(JetBuiltin name, const Rational& scale, const Rational& point, int truncation) {
    if (truncation < 1) throw DomainError("jet truncation order must be >= 1");
    if (name == JetBuiltin::Poly) {
        // scale * z expanded at `point`: scale*point + scale*h.
        if (scale == 0) return Jet::zero(point, truncation);
        return Jet(point, truncation, {scale * point, scale});
    }
    // f(scale*(point+h)) = f(scale*point + scale*h). Exact recentering of
    // the transcendental builtins needs f and its derivatives rational at
    // scale*point, which holds only for scale*point == 0.
    if (scale * point != 0)
        throw DomainError("transcendental builtin cannot be recentered exactly at a nonzero argument");
    if (scale == 0) {
        // Constant function value at 0.
        switch (name) {
            case JetBuiltin::Exp:
            case JetBuiltin::Cos:
            case JetBuiltin::Cosh:
                return Jet::constant(Rational(1), point, truncation);
            case JetBuiltin::Sin:
            case JetBuiltin::Sinh:
                return Jet::zero(point, truncation);
            default:
                break;
        }
    }
    return Jet(point, truncation, series_at_origin(name, scale, truncation));
}

Jet builtin_jet(const std::string& name, const Rational& scale, const Rational& point, int truncation) {
    if (name == "exp") return builtin_jet(JetBuiltin::Exp, scale, point, truncation);
    if (name == "sin") return builtin_jet(JetBuiltin::Sin, scale, point, truncation);
    if (name == "cos") return builtin_jet(JetBuiltin::Cos, scale, point, truncation);
    if (name == "sinh") return builtin_jet(JetBuiltin::Sinh, scale, point, truncation);
    if (name == "cosh") return builtin_jet(JetBuiltin::Cosh, scale, point, truncation);
    if (name == "poly") return builtin_jet(JetBuiltin::Poly, scale, point, truncation);
    throw DomainError("unknown builtin function: " + name);
}

Jet poly_to_jet(const Poly& p, const Rational& point, int truncation) {
    if (p.is_zero()) return Jet::zero(point, truncation);
    return Jet(point, truncation, taylor_coefficients(p, point, truncation));
}

}  // namespace edd
