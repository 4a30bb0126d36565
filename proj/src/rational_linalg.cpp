#include "edd/rational_linalg.hpp"

namespace edd {

RingMatrix<Rational> rref(RingMatrix<Rational> a, std::vector<int>* pivot_cols) {
    const int m = a.rows();
    const int n = a.cols();
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int i = row; i < m; ++i)
            if (a(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        a.swap_rows(row, pr);
        const Rational inv = Rational(1) / a(row, col);
        for (int j = col; j < n; ++j) a(row, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (int j = col; j < n; ++j) a(i, j) -= f * a(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return a;
}

int rank(const RingMatrix<Rational>& a) {
    std::vector<int> pivots;
    rref(a, &pivots);
    return static_cast<int>(pivots.size());
}

bool full_column_rank(const RingMatrix<Rational>& a) { return rank(a) == a.cols(); }

std::optional<std::vector<Rational>> solve(const RingMatrix<Rational>& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DomainError("solve: dimension mismatch");
    RingMatrix<Rational> aug(a.rows(), a.cols() + 1, Rational(0));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots;
    const RingMatrix<Rational> r = rref(std::move(aug), &pivots);
    for (int c : pivots)
        if (c == a.cols()) return std::nullopt;  // pivot in the RHS column
    std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<std::size_t>(pivots[k])] = r(static_cast<int>(k), a.cols());
    return x;
}

RingMatrix<Rational> kernel(const RingMatrix<Rational>& a) {
    const int n = a.cols();
    std::vector<int> pivots;
    const RingMatrix<Rational> r = rref(a, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    RingMatrix<Rational> out(n, n - static_cast<int>(pivots.size()), Rational(0));
    int col = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        out(f, col) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            out(pivots[k], col) = -r(static_cast<int>(k), f);
        ++col;
    }
    return out;
}

std::vector<Rational> reduce_mod_span(const RingMatrix<Rational>& basis, std::vector<Rational> v) {
    if (basis.rows() != static_cast<int>(v.size())) throw DomainError("reduce_mod_span: dimension mismatch");
    if (basis.cols() == 0) return v;
    std::vector<int> pivots;
    const RingMatrix<Rational> r = rref(basis.transposed(), &pivots);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        const Rational f = v[static_cast<std::size_t>(pivots[k])];
        if (f == 0) continue;
        for (int j = 0; j < r.cols(); ++j) v[static_cast<std::size_t>(j)] -= f * r(static_cast<int>(k), j);
    }
    return v;
}

bool in_column_span(const RingMatrix<Rational>& basis, const std::vector<Rational>& v) {
    for (const auto& c : reduce_mod_span(basis, v))
        if (c != 0) return false;
    return true;
}

}  // namespace edd
