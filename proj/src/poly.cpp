#include "edd/poly.hpp"

#include <utility>

#include "edd/errors.hpp"

namespace edd {

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (c == 0) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Poly::degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rational& Poly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::monic() const { return scaled(Rational(1) / leading()); }

Poly Poly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c == 0) continue;
        const bool first = out.empty();
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit_coeff = (a == 1) && k > 0;
        if (!unit_coeff) out += edd::to_string(a);
        if (k > 0) {
            if (!unit_coeff) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly r = a;
    Poly q;
    const int db = b.degree();
    const Rational lead_inv = Rational(1) / b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Rational c = r.leading() * lead_inv;
        Poly term = Poly::monomial(c, shift);
        q += term;
        r -= term * b;
    }
    return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a.is_zero() ? Poly() : a.monic();
    Poly v = b.is_zero() ? Poly() : b.monic();
    while (!v.is_zero()) {
        Poly r = divmod(u, v).remainder;
        if (!r.is_zero()) r = r.monic();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

int root_order(const Poly& p, const Rational& lambda) {
    if (p.is_zero()) throw DomainError("root order of the zero polynomial");
    const Poly factor{-lambda, Rational(1)};  // x - lambda
    int order = 0;
    Poly cur = p;
    while (true) {
        auto [q, r] = divmod(cur, factor);
        if (!r.is_zero()) return order;
        ++order;
        cur = std::move(q);
    }
}

std::vector<Rational> taylor_coefficients(const Poly& p, const Rational& point, int count) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    const Poly factor{-point, Rational(1)};
    Poly cur = p;
    for (int k = 0; k < count; ++k) {
        if (cur.is_zero()) {
            out.emplace_back(0);
            continue;
        }
        auto [q, r] = divmod(cur, factor);
        out.push_back(r.is_zero() ? Rational(0) : r.coeff(0));
        cur = std::move(q);
    }
    return out;
}

}  // namespace edd
