#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "edd/eigen.hpp"
#include "edd/jet.hpp"
#include "edd/matrix.hpp"

namespace edd {

/// Local Smith form of a jet matrix over the truncated series ring at the
/// expansion point. The ring is a discrete valuation ring: the pivot of
/// minimal vanishing order divides everything else, so A = U S V with
/// S = diag(z^{m_1}, z^{m_2}, ...), m_1 <= m_2 <= ...
///
/// Truncation bookkeeping: eliminating a pivot of order k costs k
/// coefficients of agreement with the underlying analytic matrix. The
/// `certified_modulus` is what remains; every reported order was decided
/// strictly below the modulus valid at its step. A trailing block whose
/// stored coefficients all vanish without being known-zero leaves the rank
/// uncertified — truncation cannot tell such entries from zero.
struct LocalSmithForm {
    std::vector<int> orders;  // ascending; the local partial multiplicities
    int rank = 0;             // number of pivots found
    bool rank_certified = true;
    int certified_modulus = 0;  // orders are analytic facts modulo z^this
    RingMatrix<Jet> U, S, V, V_inverse;
};

/// Throws InsufficientTruncationError when a visibly nonzero entry cannot
/// have its order certified within the remaining modulus.
LocalSmithForm local_smith_jet(const RingMatrix<Jet>& A);

/// Evaluation at the expansion point of the null-basis columns (the
/// trailing columns of V^{-1}); `certified` inherits the rank flag.
struct LocalKernelJet {
    Rational lambda;
    RingMatrix<Rational> Q_at_lambda;   // n x p
    RingMatrix<Jet> basis;              // the jet columns themselves
    bool certified = true;

    int dimension() const { return Q_at_lambda.cols(); }
};

LocalKernelJet local_kernel_jet(const LocalSmithForm& F, const RingMatrix<Jet>& A);

struct JetRootVector {
    std::vector<Jet> r;
    int order;
};

using JetRootVectorOutcome = std::variant<JetRootVector, NotARootVectorReason>;

/// Order of A r at the expansion point. Throws InsufficientTruncationError
/// when the image vanishes in every stored coefficient without being known
/// zero — the order would be a guess beyond the truncation.
JetRootVectorOutcome root_vector_order_jet(const RingMatrix<Jet>& A, const std::vector<Jet>& r);

/// Jet-side analogue of the polynomial RootVectorSet.
struct JetRootVectorSet {
    Rational lambda;
    std::vector<JetRootVector> vectors;
    std::vector<std::pair<int, NotARootVectorReason>> rejected;

    bool lambda_independent = false;
    bool complete = false;
    bool ordered = false;
    bool maximal = false;
    // Flags above that consumed the (possibly uncertified) local rank are
    // only analytic facts when this is true.
    bool certified = true;

    int concat_rank = 0;
    int kernel_dim_at_lambda = 0;
    std::vector<int> orders_sorted;   // descending
    std::vector<int> multiplicities;  // descending, from the local Smith form
};

JetRootVectorSet check_set_jet(const RingMatrix<Jet>& A, const std::vector<std::vector<Jet>>& candidates);

/// Maximal set for the jet backend: columns of V^{-1} matching the
/// positive-order pivots of the local Smith form, orders descending.
JetRootVectorSet maximal_set_jet(const RingMatrix<Jet>& A);

}  // namespace edd
