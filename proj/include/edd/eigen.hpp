#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "edd/matrix.hpp"
#include "edd/nullbasis.hpp"
#include "edd/poly.hpp"
#include "edd/smith.hpp"

namespace edd {

/// rank A(lambda) against the rank over the fraction field; lambda is an
/// eigenvalue exactly when the evaluation drops rank.
struct EigenvalueCheck {
    int rank_generic;
    int rank_at_lambda;
    bool is_eigenvalue;
};

EigenvalueCheck is_eigenvalue(const RingMatrix<Poly>& A, const Rational& lambda);

/// span Q(lambda) for an invertible basis Q of null(A); independent of the
/// basis choice, so a well-defined subspace attached to (A, lambda).
struct LocalKernel {
    Rational lambda;
    RingMatrix<Rational> Q_at_lambda;  // n x p, full column rank
    InvertibleBasis basis;

    int dimension() const { return Q_at_lambda.cols(); }
};

LocalKernel ker_lambda(const RingMatrix<Poly>& A, const Rational& lambda);

/// Polynomial vector w with A w = 0 and w(lambda) = v, for v in the local
/// kernel. Throws SpanError when v is outside span Q(lambda).
std::vector<Poly> membership_witness(const LocalKernel& k, const std::vector<Rational>& v);

/// Vector r with r(lambda) outside the local kernel and A r vanishing to
/// exact order k >= 1 at lambda; the residual v = A r / (x-lambda)^k is
/// kept as evidence (v(lambda) != 0).
struct RootVector {
    std::vector<Poly> r;
    int order;
    std::vector<Poly> residual_witness;
};

enum class NotARootVectorReason {
    InKernelAtLambda,     // r(lambda) lies in span Q(lambda)
    Annihilated,          // A r == 0 identically
    NonvanishingAtLambda  // A r does not vanish at lambda
};

using RootVectorOutcome = std::variant<RootVector, NotARootVectorReason>;

RootVectorOutcome root_vector_order(const RingMatrix<Poly>& A, const std::vector<Poly>& r,
                                    const Rational& lambda);

/// Status of a candidate set of root vectors. `maximal` compares the
/// sorted orders with the partial multiplicities and is insensitive to the
/// order vectors were given in; `ordered` records whether the given
/// sequence is non-increasing.
struct RootVectorSet {
    Rational lambda;
    std::vector<RootVector> vectors;
    std::vector<std::pair<int, NotARootVectorReason>> rejected;  // index, reason

    bool lambda_independent = false;
    bool complete = false;
    bool ordered = false;
    bool maximal = false;

    // Evidence backing the flags.
    int concat_rank = 0;        // rank [Q(lambda) | r_1(lambda) ... ]
    int kernel_dim_at_lambda = 0;
    std::vector<int> orders_sorted;        // descending
    std::vector<int> multiplicities;       // descending partial multiplicities
    bool multiplicity_sum_check = false;   // sum(orders) == algebraic multiplicity
};

RootVectorSet check_set(const RingMatrix<Poly>& A, const Rational& lambda,
                        const std::vector<std::vector<Poly>>& candidates);

/// Maximal set of root vectors from the Smith decomposition A = U S V:
/// for each invariant factor with a positive root order at lambda, the
/// matching column of V^{-1} is a root vector of exactly that order, and
/// together they are maximal. Orders come out descending; the empty set is
/// returned when lambda is not an eigenvalue.
RootVectorSet maximal_set(const RingMatrix<Poly>& A, const Rational& lambda);

/// Right eigenvector as a nonzero class in ker A(lambda) modulo the local
/// kernel; the representative is canonically reduced against an echelon
/// basis of span Q(lambda).
struct EigenvectorClass {
    std::vector<Rational> representative;
    RingMatrix<Rational> kernel_basis;  // Q(lambda)
};

std::vector<EigenvectorClass> eigenvectors_at(const RingMatrix<Poly>& A, const Rational& lambda);

}  // namespace edd
