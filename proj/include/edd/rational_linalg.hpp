#pragma once

#include <optional>
#include <vector>

#include "edd/matrix.hpp"
#include "edd/rational.hpp"

namespace edd {

/// Exact Gaussian elimination over Q.

int rank(const RingMatrix<Rational>& a);

bool full_column_rank(const RingMatrix<Rational>& a);

/// Reduced row echelon form; pivot column indices appended to *pivot_cols
/// when non-null.
RingMatrix<Rational> rref(RingMatrix<Rational> a, std::vector<int>* pivot_cols = nullptr);

/// Any exact solution of a x = b, or nullopt when inconsistent. When the
/// solution space is positive-dimensional the free coordinates are zero.
std::optional<std::vector<Rational>> solve(const RingMatrix<Rational>& a, const std::vector<Rational>& b);

/// Basis of the null space as matrix columns (n x k, k = n - rank).
RingMatrix<Rational> kernel(const RingMatrix<Rational>& a);

/// Canonical residue of v modulo the column span of `basis`: the RREF rows
/// of span(basis) are subtracted so every pivot coordinate of the span
/// vanishes. Zero result iff v lies in the span.
std::vector<Rational> reduce_mod_span(const RingMatrix<Rational>& basis, std::vector<Rational> v);

/// rank([basis | v]) == rank(basis)?
bool in_column_span(const RingMatrix<Rational>& basis, const std::vector<Rational>& v);

}  // namespace edd
