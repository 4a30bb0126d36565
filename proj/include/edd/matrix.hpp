#pragma once

#include <type_traits>
#include <vector>

#include "edd/errors.hpp"
#include "edd/jet.hpp"
#include "edd/poly.hpp"
#include "edd/rational.hpp"

namespace edd {

inline Rational ring_zero_like(const Rational&) { return Rational(0); }
inline Rational ring_one_like(const Rational&) { return Rational(1); }
inline Int ring_zero_like(const Int&) { return Int(0); }
inline Int ring_one_like(const Int&) { return Int(1); }
inline Poly ring_zero_like(const Poly&) { return Poly(); }
inline Poly ring_one_like(const Poly&) { return Poly(1); }
inline Jet ring_zero_like(const Jet& s) { return Jet::zero(s.point(), s.truncation()); }
inline Jet ring_one_like(const Jet& s) { return Jet::constant(Rational(1), s.point(), s.truncation()); }

inline bool ring_is_zero(const Rational& a) { return a == 0; }
inline bool ring_is_zero(const Int& a) { return a == 0; }
inline bool ring_is_zero(const Poly& a) { return a.is_zero(); }
inline bool ring_is_zero(const Jet& a) { return a.known_zero(); }

/// Dense row-major matrix over a ring element type. Zero-column (or
/// zero-row) shapes are allowed so empty bases are first-class values.
template <class T>
class RingMatrix {
public:
    RingMatrix() : rows_(0), cols_(0) {}
    RingMatrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }
    RingMatrix(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
        if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw DomainError("matrix entry count does not match dimensions");
    }

    static RingMatrix identity(int n, const T& one) {
        RingMatrix m(n, n, ring_zero_like(one));
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<T>& entries() const { return data_; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    std::vector<T> column(int j) const {
        std::vector<T> c;
        c.reserve(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    RingMatrix columns(const std::vector<int>& idx) const {
        if (idx.empty()) return RingMatrix(rows_, 0, std::vector<T>{});
        RingMatrix out(rows_, static_cast<int>(idx.size()), ring_zero_like(data_.front()));
        for (int i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) out(i, static_cast<int>(k)) = (*this)(i, idx[k]);
        return out;
    }

    RingMatrix transposed() const {
        if (data_.empty()) return RingMatrix(cols_, rows_, std::vector<T>{});
        RingMatrix out(cols_, rows_, data_.front());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

template <class T>
RingMatrix<T> matmul(const RingMatrix<T>& a, const RingMatrix<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
    RingMatrix<T> out(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
    return out;
}

template <class T>
RingMatrix<T> operator*(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    if (!a.entries().empty()) return matmul(a, b, ring_zero_like(a.entries().front()));
    if (!b.entries().empty()) return matmul(a, b, ring_zero_like(b.entries().front()));
    if constexpr (std::is_default_constructible_v<T>) return matmul(a, b, T{});
    else throw DomainError("cannot multiply empty matrices without a ring context");
}

template <class T>
RingMatrix<T> operator-(const RingMatrix<T>& a, const RingMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix difference dimension mismatch");
    RingMatrix<T> out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

template <class T>
bool is_zero_matrix(const RingMatrix<T>& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if constexpr (std::is_same_v<T, Jet>) {
                if (a(i, j).order().kind == JetOrder::Kind::Finite) return false;
            } else {
                if (!ring_is_zero(a(i, j))) return false;
            }
        }
    return true;
}

template <class T>
std::vector<T> apply(const RingMatrix<T>& a, const std::vector<T>& x, const T& zero) {
    if (a.cols() != static_cast<int>(x.size())) throw DomainError("matrix-vector dimension mismatch");
    std::vector<T> out(static_cast<std::size_t>(a.rows()), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i)] + a(i, j) * x[static_cast<std::size_t>(j)];
    return out;
}

/// Entry-wise evaluation of a polynomial matrix at a rational point.
inline RingMatrix<Rational> evaluate(const RingMatrix<Poly>& a, const Rational& x) {
    RingMatrix<Rational> out(a.rows(), a.cols(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).eval(x);
    return out;
}

/// Value of a jet matrix at its expansion point (constant coefficients).
inline RingMatrix<Rational> value_at_point(const RingMatrix<Jet>& a) {
    RingMatrix<Rational> out(a.rows(), a.cols(), Rational(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).constant_term();
    return out;
}

inline RingMatrix<Poly> to_poly_matrix(const RingMatrix<Int>& a) {
    RingMatrix<Poly> out(a.rows(), a.cols(), Poly());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = Poly(Rational(a(i, j)));
    return out;
}

inline RingMatrix<Jet> to_jet_matrix(const RingMatrix<Poly>& a, const Rational& point, int truncation) {
    RingMatrix<Jet> out(a.rows(), a.cols(), Jet::zero(point, truncation));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = poly_to_jet(a(i, j), point, truncation);
    return out;
}

}  // namespace edd
