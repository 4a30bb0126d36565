#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edd/matrix.hpp"
#include "edd/poly.hpp"
#include "edd/smith.hpp"

namespace edd {

/// Basis of null(A) = ker A over Q(x) intersected with Q[x]^n, arranged as
/// the columns of Q, together with an exact left inverse L (L * Q = I_p).
/// Such a basis evaluates to a full-column-rank matrix at every point.
struct InvertibleBasis {
    RingMatrix<Poly> Q;  // n x p
    RingMatrix<Poly> L;  // p x n
    // Smith decomposition of the cleared kernel matrix the construction
    // ran on (empty-shape matrices when p = 0).
    SmithDecomposition<Poly> provenance;

    int dimension() const { return Q.cols(); }
};

/// Polynomial basis of ker A over the rational-function field: columns
/// scaled into Q[x]^n and made primitive (entry gcd 1, first nonzero entry
/// monic). Shape n x p with p = n - rank(A).
RingMatrix<Poly> kernel_over_fractions(const RingMatrix<Poly>& A);

/// Invertible basis of null(A) via the Smith decomposition of the cleared
/// kernel matrix K = U S Z: Q is the leftmost p columns of U, L the top p
/// rows of U^{-1}.
InvertibleBasis invertible_null_basis(const RingMatrix<Poly>& A);

struct InvertibilityWitness {
    std::string kind;      // "non_unit_gcd" | "rank_drop_at_point" | "non_ring_coefficient"
    std::string detail;
};

/// The five equivalent characterizations of a left-invertible (trivial
/// Smith form) full-column-rank polynomial matrix, each tested along its
/// own route. Condition 2 quantifies over all non-units and is only
/// sampled at random rational points; over a principal ideal domain the
/// primes x - a suffice, so agreement at every sample is the strongest
/// finite statement available.
struct InvertibilityReport {
    bool cond1_left_inverse = false;
    bool cond2_full_rank_at_samples = false;
    bool cond3_minor_gcd_unit = false;
    bool cond4_ring_solutions = false;
    bool cond5_trivial_smith = false;
    bool cond2_sampled = true;        // never "proved"
    bool cond3_exhaustive = false;    // false when the invariant-factor fallback was used
    int samples = 0;
    std::vector<Rational> sample_points;
    std::optional<InvertibilityWitness> witness;

    bool invertible() const { return cond1_left_inverse; }
};

inline constexpr int kDefaultConditionSamples = 20;
inline constexpr std::uint64_t kDefaultConditionSeed = 0x5eed0001u;

/// Evaluates all five conditions on a full-column-rank Q (throws
/// DomainError otherwise). Exhaustive minors are used for condition 3 when
/// n <= 12 and p <= 4, the invariant-factor product beyond that.
InvertibilityReport check_invertible_conditions(const RingMatrix<Poly>& Q,
                                                int samples = kDefaultConditionSamples,
                                                std::uint64_t seed = kDefaultConditionSeed);

/// Outcome of solving Q a = b over the fraction field and asking whether
/// the solution has polynomial coordinates.
struct RingSolveResult {
    enum class Status { InRing, NotInModule };
    Status status;
    std::vector<Poly> solution;           // valid when InRing
    int offending_coordinate = -1;        // valid when NotInModule
    Poly offending_numerator, offending_denominator;  // reduced fraction
};

/// Unique fraction-field solution of Q a = b for full-column-rank Q.
/// Throws SpanError when b is not in the column span over Q(x).
RingSolveResult solve_in_ring(const RingMatrix<Poly>& Q, const std::vector<Poly>& b);

}  // namespace edd
