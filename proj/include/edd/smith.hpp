#pragma once

#include <algorithm>
#include <vector>

#include "edd/euclid.hpp"
#include "edd/fraction_free.hpp"
#include "edd/matrix.hpp"

namespace edd {

/// A = U * S * V with U, V unimodular and S diagonal, each diagonal entry
/// dividing the next, zero entries trailing. The first `rank` diagonal
/// entries, normalized (monic over Q[x], nonnegative over Z), are the
/// invariant factors.
template <class T>
struct SmithDecomposition {
    RingMatrix<T> U, S, V;
    int rank = 0;
    std::vector<T> invariant_factors;
};

namespace detail {

// Mutating helpers that preserve A = U * S * V. Row operations on S are
// compensated on the columns of U, column operations on the rows of V.
template <class T>
struct SmithState {
    RingMatrix<T>& S;
    RingMatrix<T>& U;
    RingMatrix<T>& V;

    void row_swap(int a, int b) {
        S.swap_rows(a, b);
        U.swap_cols(a, b);
    }
    void col_swap(int a, int b) {
        S.swap_cols(a, b);
        V.swap_rows(a, b);
    }
    // row[dst] += c * row[src] on S; U.col[src] -= c * U.col[dst].
    void row_axpy(int dst, int src, const T& c) {
        for (int j = 0; j < S.cols(); ++j) S(dst, j) = S(dst, j) + c * S(src, j);
        for (int i = 0; i < U.rows(); ++i) U(i, src) = U(i, src) - c * U(i, dst);
    }
    // col[dst] += c * col[src] on S; V.row[src] -= c * V.row[dst].
    void col_axpy(int dst, int src, const T& c) {
        for (int i = 0; i < S.rows(); ++i) S(i, dst) = S(i, dst) + c * S(i, src);
        for (int j = 0; j < V.cols(); ++j) V(src, j) = V(src, j) - c * V(dst, j);
    }
    // row[i] *= u_inv on S; U.col[i] *= u.
    void row_scale(int i, const T& u, const T& u_inv) {
        for (int j = 0; j < S.cols(); ++j) S(i, j) = S(i, j) * u_inv;
        for (int r = 0; r < U.rows(); ++r) U(r, i) = U(r, i) * u;
    }
};

}  // namespace detail

/// Smith normal form over a Euclidean domain by classic elementary
/// reduction. Pivot selection: entry of minimal Euclidean size in the
/// trailing block, ties broken by smallest (row, col). A division leaving
/// a remainder replaces the pivot by that remainder and restarts the
/// block; once a pivot cleans its row and column, any trailing entry it
/// does not divide is pulled into the pivot row and the block restarts.
template <class T>
SmithDecomposition<T> smith_decompose(const RingMatrix<T>& A) {
    using tr = euclid_traits<T>;
    const int m = A.rows();
    const int n = A.cols();
    SmithDecomposition<T> d;
    d.S = A;
    d.U = RingMatrix<T>::identity(m, tr::one());
    d.V = RingMatrix<T>::identity(n, tr::one());
    detail::SmithState<T> st{d.S, d.U, d.V};

    const int steps = std::min(m, n);
    int t = 0;
    for (; t < steps; ++t) {
        // Locate the minimal nonzero entry of the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (tr::is_zero(d.S(i, j))) continue;
                if (pi < 0 || tr::size_less(d.S(i, j), d.S(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        st.row_swap(t, pi);
        st.col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear column t below the pivot.
            for (int i = t + 1; i < m; ++i) {
                if (tr::is_zero(d.S(i, t))) continue;
                auto [q, r] = tr::divmod(d.S(i, t), d.S(t, t));
                st.row_axpy(i, t, tr::zero() - q);
                if (!tr::is_zero(d.S(i, t))) {
                    st.row_swap(t, i);  // the remainder is strictly smaller
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // Clear row t right of the pivot.
            for (int j = t + 1; j < n; ++j) {
                if (tr::is_zero(d.S(t, j))) continue;
                auto [q, r] = tr::divmod(d.S(t, j), d.S(t, t));
                st.col_axpy(j, t, tr::zero() - q);
                if (!tr::is_zero(d.S(t, j))) {
                    st.col_swap(t, j);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // Divisibility chain: the pivot must divide the whole trailing
            // block before we advance.
            for (int i = t + 1; i < m && !dirty; ++i)
                for (int j = t + 1; j < n && !dirty; ++j) {
                    if (tr::is_zero(d.S(i, j))) continue;
                    auto [q, r] = tr::divmod(d.S(i, j), d.S(t, t));
                    if (!tr::is_zero(r)) {
                        st.row_axpy(t, i, tr::one());
                        dirty = true;
                    }
                }
        }
    }

    // Normalize the diagonal, pushing units into U.
    for (int i = 0; i < t; ++i) {
        auto [normalized, unit] = tr::normalize(d.S(i, i));
        if (!tr::is_zero(unit - tr::one())) st.row_scale(i, unit, tr::unit_inverse(unit));
        d.invariant_factors.push_back(d.S(i, i));
    }
    d.rank = t;
    return d;
}

/// GCD of all k x k minors, normalized; zero when every minor vanishes.
/// Exhaustive over row/column subsets, intended for small matrices.
template <class T>
T determinantal_divisors_oracle(const RingMatrix<T>& A, int k) {
    using tr = euclid_traits<T>;
    const int m = A.rows();
    const int n = A.cols();
    if (k < 1 || k > std::min(m, n)) throw DomainError("minor size out of range");

    auto subsets = [](int total, int size) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i;
        while (true) {
            out.push_back(cur);
            int i = size - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == total - size + i) --i;
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
        return out;
    };

    const auto row_sets = subsets(m, k);
    const auto col_sets = subsets(n, k);
    T g = tr::zero();
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            RingMatrix<T> sub(k, k, tr::zero());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub(i, j) = A(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
            g = tr::gcd(g, ff_determinant(sub));
            if (tr::is_unit(g)) return tr::normalize(g).first;
        }
    return tr::normalize(g).first;
}

/// Exact inverse of a matrix with unit determinant: adj(A) / det(A).
template <class T>
RingMatrix<T> unimodular_inverse(const RingMatrix<T>& A) {
    using tr = euclid_traits<T>;
    if (A.rows() != A.cols()) throw DomainError("inverse of a non-square matrix");
    const int n = A.rows();
    if (n == 0) return A;
    const T det = ff_determinant(A);
    if (!tr::is_unit(det)) throw NotAUnitError("matrix determinant is not a unit of the ring");
    const T det_inv = tr::unit_inverse(det);
    RingMatrix<T> inv(n, n, tr::zero());
    if (n == 1) {
        inv(0, 0) = det_inv;
        return inv;
    }
    RingMatrix<T> minor(n - 1, n - 1, tr::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = A(r, c);
                    ++mc;
                }
                ++mr;
            }
            T cof = ff_determinant(minor);
            if ((i + j) % 2 == 1) cof = tr::zero() - cof;
            inv(j, i) = cof * det_inv;  // adjugate is the transposed cofactor matrix
        }
    return inv;
}

/// Orders of lambda as a root of the nonzero invariant factors, zeros
/// dropped, sorted descending. Empty iff lambda is not an eigenvalue.
std::vector<int> partial_multiplicities_at(const SmithDecomposition<Poly>& D, const Rational& lambda);

}  // namespace edd
