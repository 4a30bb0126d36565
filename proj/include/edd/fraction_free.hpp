#pragma once

#include <vector>

#include "edd/euclid.hpp"
#include "edd/matrix.hpp"

namespace edd {

/// Fraction-free (Bareiss) elimination over an integral domain with exact
/// division: all intermediate entries stay in the ring. Every division
/// below is checked; a nonzero remainder would mean a broken invariant and
/// throws.

template <class T>
struct FractionFreeEchelon {
    RingMatrix<T> mat;
    std::vector<int> pivot_cols;
    int rank = 0;
    int swap_sign = 1;
};

template <class T>
FractionFreeEchelon<T> ff_row_echelon(RingMatrix<T> a) {
    using tr = euclid_traits<T>;
    const int m = a.rows();
    const int n = a.cols();
    FractionFreeEchelon<T> out{{}, {}, 0, 1};
    T prev = tr::one();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i) {
            if (tr::is_zero(a(i, col))) continue;
            if (pr < 0 || tr::size_less(a(i, col), a(pr, col))) pr = i;
        }
        if (pr < 0) continue;
        if (pr != row) {
            a.swap_rows(row, pr);
            out.swap_sign = -out.swap_sign;
        }
        const T pivot = a(row, col);
        for (int i = row + 1; i < m; ++i) {
            const T head = a(i, col);
            for (int j = col; j < n; ++j)
                a(i, j) = exact_div<T>(pivot * a(i, j) - head * a(row, j), prev);
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    out.mat = std::move(a);
    return out;
}

template <class T>
int ff_rank(const RingMatrix<T>& a) {
    return ff_row_echelon(a).rank;
}

/// Determinant of a square matrix: the last Bareiss pivot, sign-corrected.
template <class T>
T ff_determinant(const RingMatrix<T>& a) {
    using tr = euclid_traits<T>;
    if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
    if (a.rows() == 0) return tr::one();
    auto e = ff_row_echelon(a);
    if (e.rank < a.rows()) return tr::zero();
    T det = e.mat(a.rows() - 1, a.cols() - 1);
    return e.swap_sign < 0 ? tr::zero() - det : det;
}

template <class T>
struct FractionFreeRref {
    RingMatrix<T> mat;
    std::vector<int> pivot_rows;
    std::vector<int> pivot_cols;
    T denominator;  // every pivot entry equals this value at the end
    int rank = 0;
};

/// One-step fraction-free Gauss-Jordan: each step eliminates its pivot
/// column in every other row and divides by the previous pivot. On exit
/// all pivot entries equal the final pivot `denominator` and non-pivot
/// rows are zero.
template <class T>
FractionFreeRref<T> ff_gauss_jordan(RingMatrix<T> a) {
    using tr = euclid_traits<T>;
    const int m = a.rows();
    const int n = a.cols();
    FractionFreeRref<T> out{{}, {}, {}, tr::one(), 0};
    T prev = tr::one();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i) {
            if (tr::is_zero(a(i, col))) continue;
            if (pr < 0 || tr::size_less(a(i, col), a(pr, col))) pr = i;
        }
        if (pr < 0) continue;
        a.swap_rows(row, pr);
        const T pivot = a(row, col);
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            const T head = a(i, col);
            for (int j = 0; j < n; ++j)
                a(i, j) = exact_div<T>(pivot * a(i, j) - head * a(row, j), prev);
        }
        prev = pivot;
        out.pivot_rows.push_back(row);
        out.pivot_cols.push_back(col);
        ++row;
    }
    // Earlier pivot rows were rescaled by later steps; bring them all to
    // the final pivot value so the reduced system reads d*x_p = -entry.
    for (std::size_t k = 0; k + 1 < out.pivot_cols.size(); ++k) {
        const int r = out.pivot_rows[k];
        const T factor = exact_div<T>(prev, a(r, out.pivot_cols[k]));
        if (!tr::is_zero(factor - tr::one()))
            for (int j = 0; j < n; ++j) a(r, j) = a(r, j) * factor;
    }
    out.denominator = prev;
    out.rank = row;
    out.mat = std::move(a);
    return out;
}

/// Null-space basis with entries in the ring, one column per free column
/// of `a` (n x (n - rank)). Columns are not normalized here.
template <class T>
RingMatrix<T> ff_kernel(const RingMatrix<T>& a) {
    using tr = euclid_traits<T>;
    const int n = a.cols();
    auto gj = ff_gauss_jordan(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : gj.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    RingMatrix<T> out(n, n - gj.rank, tr::zero());
    int col = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        out(f, col) = gj.denominator;
        for (std::size_t k = 0; k < gj.pivot_cols.size(); ++k)
            out(gj.pivot_cols[k], col) = tr::zero() - gj.mat(gj.pivot_rows[k], f);
        ++col;
    }
    return out;
}

}  // namespace edd
