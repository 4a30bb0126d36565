#pragma once

#include <random>
#include <vector>

#include "edd/matrix.hpp"
#include "edd/poly.hpp"
#include "edd/rational.hpp"

namespace edd::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int num_bound = 9, int den_bound = 9) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int num_bound = 9, int den_bound = 9) {
    while (true) {
        Rational q = random_rational(rng, num_bound, den_bound);
        if (q != 0) return q;
    }
}

inline Poly random_poly(Rng& rng, int max_degree, int coeff_bound = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(d) + 1);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    return Poly(std::move(c));
}

inline Poly random_nonzero_poly(Rng& rng, int max_degree, int coeff_bound = 5) {
    while (true) {
        Poly p = random_poly(rng, max_degree, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

inline RingMatrix<Poly> random_poly_matrix(Rng& rng, int m, int n, int max_degree, int coeff_bound = 4) {
    RingMatrix<Poly> a(m, n, Poly());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = random_poly(rng, max_degree, coeff_bound);
    return a;
}

inline RingMatrix<Int> random_int_matrix(Rng& rng, int m, int n, int bound = 12) {
    std::uniform_int_distribution<int> e(-bound, bound);
    RingMatrix<Int> a(m, n, Int(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = e(rng);
    return a;
}

// Product of random elementary operations: unit determinant by construction.
inline RingMatrix<Poly> random_unimodular_poly(Rng& rng, int n, int ops = 6) {
    RingMatrix<Poly> u = RingMatrix<Poly>::identity(n, Poly(1));
    if (n < 2) return u;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> which(0, 2);
    for (int k = 0; k < ops; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        switch (which(rng)) {
            case 0: {
                const Poly c = random_poly(rng, 1, 2);
                for (int col = 0; col < n; ++col) u(i, col) += c * u(j, col);
                break;
            }
            case 1:
                u.swap_rows(i, j);
                break;
            default: {
                const Poly c = random_poly(rng, 1, 2);
                for (int row = 0; row < n; ++row) u(row, i) += c * u(row, j);
                break;
            }
        }
    }
    return u;
}

inline RingMatrix<Int> random_unimodular_int(Rng& rng, int n, int ops = 6) {
    RingMatrix<Int> u = RingMatrix<Int>::identity(n, Int(1));
    if (n < 2) return u;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> which(0, 2);
    for (int k = 0; k < ops; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const Int c = coeff(rng);
        switch (which(rng)) {
            case 0:
                for (int col = 0; col < n; ++col) u(i, col) += c * u(j, col);
                break;
            case 1:
                u.swap_rows(i, j);
                break;
            default:
                for (int row = 0; row < n; ++row) u(row, i) += c * u(row, j);
                break;
        }
    }
    return u;
}

}  // namespace edd::testing
