#include "edd/local_smith.hpp"

#include <algorithm>
#include <numeric>

#include "edd/errors.hpp"
#include "edd/rational_linalg.hpp"

namespace edd {

namespace {

struct JetSmithState {
    RingMatrix<Jet>& S;
    RingMatrix<Jet>& U;
    RingMatrix<Jet>& V;
    RingMatrix<Jet>& Vinv;

    void row_swap(int a, int b) {
        S.swap_rows(a, b);
        U.swap_cols(a, b);
    }
    void col_swap(int a, int b) {
        S.swap_cols(a, b);
        V.swap_rows(a, b);
        Vinv.swap_cols(a, b);
    }
    void row_axpy(int dst, int src, const Jet& c) {
        for (int j = 0; j < S.cols(); ++j) S(dst, j) = S(dst, j) + c * S(src, j);
        for (int i = 0; i < U.rows(); ++i) U(i, src) = U(i, src) - c * U(i, dst);
    }
    void col_axpy(int dst, int src, const Jet& c) {
        for (int i = 0; i < S.rows(); ++i) S(i, dst) = S(i, dst) + c * S(i, src);
        for (int j = 0; j < V.cols(); ++j) V(src, j) = V(src, j) - c * V(dst, j);
        for (int i = 0; i < Vinv.rows(); ++i) Vinv(i, dst) = Vinv(i, dst) + c * Vinv(i, src);
    }
    void row_scale_by_unit_inverse(int i, const Jet& u) {
        for (int j = 0; j < S.cols(); ++j) S(i, j) = S(i, j).div_unit(u);
        for (int r = 0; r < U.rows(); ++r) U(r, i) = U(r, i) * u;
    }
};

}  // namespace

LocalSmithForm local_smith_jet(const RingMatrix<Jet>& A) {
    if (A.entries().empty()) throw DomainError("local Smith form of an empty matrix");
    const Jet& sample = A.entries().front();
    for (const Jet& e : A.entries())
        if (e.point() != sample.point() || e.truncation() != sample.truncation())
            throw ContextMismatchError("matrix entries have mixed jet contexts");

    const int m = A.rows();
    const int n = A.cols();
    const int N = sample.truncation();

    LocalSmithForm f;
    f.S = A;
    f.U = RingMatrix<Jet>::identity(m, ring_one_like(sample));
    f.V = RingMatrix<Jet>::identity(n, ring_one_like(sample));
    f.V_inverse = f.V;
    JetSmithState st{f.S, f.U, f.V, f.V_inverse};

    int modulus = N;
    const int steps = std::min(m, n);
    int t = 0;
    for (; t < steps; ++t) {
        // Pivot: minimal stored vanishing order in the trailing block,
        // certifiable only while strictly below the remaining modulus.
        int pi = -1, pj = -1, pk = 0;
        bool saw_uncertifiable = false;
        bool saw_unknown_zero = false;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const JetOrder o = f.S(i, j).order();
                if (o.kind == JetOrder::Kind::KnownZero) continue;
                if (o.kind == JetOrder::Kind::BelowTruncation) {
                    saw_unknown_zero = true;
                    continue;
                }
                if (o.order >= modulus) {
                    saw_uncertifiable = true;
                    continue;
                }
                if (pi < 0 || o.order < pk) {
                    pi = i;
                    pj = j;
                    pk = o.order;
                }
            }
        if (pi < 0) {
            if (saw_uncertifiable)
                throw InsufficientTruncationError(
                    "a nonzero entry vanishes past the certified modulus; raise the truncation order");
            f.rank_certified = !saw_unknown_zero;
            break;
        }
        st.row_swap(t, pi);
        st.col_swap(t, pj);

        // Normalize the pivot to exactly z^k.
        const Jet unit = f.S(t, t).shifted_down(pk);
        st.row_scale_by_unit_inverse(t, unit);

        // The pivot order is minimal, so every quotient is a plain shift.
        for (int i = t + 1; i < m; ++i) {
            if (f.S(i, t).order().kind != JetOrder::Kind::Finite) continue;
            const Jet q = f.S(i, t).shifted_down(pk);
            st.row_axpy(i, t, -q);
        }
        for (int j = t + 1; j < n; ++j) {
            if (f.S(t, j).order().kind != JetOrder::Kind::Finite) continue;
            const Jet q = f.S(t, j).shifted_down(pk);
            st.col_axpy(j, t, -q);
        }
        f.orders.push_back(pk);
        modulus -= pk;
    }
    f.rank = t;
    f.certified_modulus = modulus;
    return f;
}

LocalKernelJet local_kernel_jet(const LocalSmithForm& F, const RingMatrix<Jet>& A) {
    const int n = A.cols();
    const int p = n - F.rank;
    LocalKernelJet k;
    k.lambda = A.entries().front().point();
    k.certified = F.rank_certified;
    std::vector<int> trailing;
    trailing.reserve(static_cast<std::size_t>(p));
    for (int j = F.rank; j < n; ++j) trailing.push_back(j);
    k.basis = F.V_inverse.columns(trailing);
    k.Q_at_lambda = RingMatrix<Rational>(n, p, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) k.Q_at_lambda(i, j) = k.basis(i, j).constant_term();
    return k;
}

namespace {

std::vector<Rational> value_at_point(const std::vector<Jet>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Jet& e : v) out.push_back(e.constant_term());
    return out;
}

JetRootVectorOutcome classify_root_vector_jet(const RingMatrix<Jet>& A, const std::vector<Jet>& r,
                                              const LocalKernelJet& kernel) {
    const Jet zero = ring_zero_like(A.entries().front());
    const std::vector<Jet> image = apply(A, r, zero);
    bool all_known_zero = true;
    bool saw_below_truncation = false;
    std::optional<int> order;
    for (const Jet& e : image) {
        const JetOrder o = e.order();
        if (o.kind == JetOrder::Kind::KnownZero) continue;
        all_known_zero = false;
        if (o.kind == JetOrder::Kind::BelowTruncation) {
            saw_below_truncation = true;
            continue;
        }
        if (!order || o.order < *order) order = o.order;
    }
    if (all_known_zero) return NotARootVectorReason::Annihilated;
    if (!order)
        throw InsufficientTruncationError(
            saw_below_truncation
                ? "image of the candidate vanishes to the truncation order; its order cannot be certified"
                : "image order could not be determined");
    if (in_column_span(kernel.Q_at_lambda, value_at_point(r)))
        return NotARootVectorReason::InKernelAtLambda;
    if (*order == 0) return NotARootVectorReason::NonvanishingAtLambda;
    return JetRootVector{r, *order};
}

JetRootVectorSet check_set_jet_impl(const RingMatrix<Jet>& A,
                                    const std::vector<std::vector<Jet>>& candidates,
                                    const LocalSmithForm& F) {
    const LocalKernelJet kernel = local_kernel_jet(F, A);
    JetRootVectorSet set;
    set.lambda = kernel.lambda;
    set.certified = F.rank_certified;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        JetRootVectorOutcome out = classify_root_vector_jet(A, candidates[i], kernel);
        if (auto* rv = std::get_if<JetRootVector>(&out))
            set.vectors.push_back(std::move(*rv));
        else
            set.rejected.emplace_back(static_cast<int>(i), std::get<NotARootVectorReason>(out));
    }

    for (int o : F.orders)
        if (o > 0) set.multiplicities.push_back(o);
    std::sort(set.multiplicities.begin(), set.multiplicities.end(), std::greater<int>());

    const int n = A.cols();
    const int p = kernel.dimension();
    const int s = static_cast<int>(set.vectors.size());
    set.kernel_dim_at_lambda = n - rank(edd::value_at_point(A));

    RingMatrix<Rational> concat(n, p + s, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) concat(i, j) = kernel.Q_at_lambda(i, j);
    for (int v = 0; v < s; ++v) {
        const auto at = value_at_point(set.vectors[static_cast<std::size_t>(v)].r);
        for (int i = 0; i < n; ++i) concat(i, p + v) = at[static_cast<std::size_t>(i)];
    }
    set.concat_rank = rank(concat);

    if (!set.rejected.empty()) return set;

    set.lambda_independent = set.concat_rank == p + s;
    set.complete = set.lambda_independent && (p + s == set.kernel_dim_at_lambda);

    set.ordered = true;
    for (int v = 0; v + 1 < s; ++v)
        if (set.vectors[static_cast<std::size_t>(v)].order < set.vectors[static_cast<std::size_t>(v + 1)].order)
            set.ordered = false;

    for (const JetRootVector& rv : set.vectors) set.orders_sorted.push_back(rv.order);
    std::sort(set.orders_sorted.begin(), set.orders_sorted.end(), std::greater<int>());

    const auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    set.maximal = set.complete && set.orders_sorted == set.multiplicities &&
                  sum(set.orders_sorted) == sum(set.multiplicities);
    return set;
}

}  // namespace

JetRootVectorOutcome root_vector_order_jet(const RingMatrix<Jet>& A, const std::vector<Jet>& r) {
    if (static_cast<int>(r.size()) != A.cols()) throw DomainError("root vector has wrong dimension");
    const LocalSmithForm F = local_smith_jet(A);
    return classify_root_vector_jet(A, r, local_kernel_jet(F, A));
}

JetRootVectorSet check_set_jet(const RingMatrix<Jet>& A, const std::vector<std::vector<Jet>>& candidates) {
    return check_set_jet_impl(A, candidates, local_smith_jet(A));
}

JetRootVectorSet maximal_set_jet(const RingMatrix<Jet>& A) {
    const LocalSmithForm F = local_smith_jet(A);
    std::vector<std::vector<Jet>> candidates;
    for (int i = F.rank - 1; i >= 0; --i) {
        if (F.orders[static_cast<std::size_t>(i)] == 0) break;
        candidates.push_back(F.V_inverse.column(i));
    }
    return check_set_jet_impl(A, candidates, F);
}

}  // namespace edd
