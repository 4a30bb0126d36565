#include "edd/eigen.hpp"

#include <algorithm>
#include <numeric>

#include "edd/fraction_free.hpp"
#include "edd/rational_linalg.hpp"

namespace edd {

EigenvalueCheck is_eigenvalue(const RingMatrix<Poly>& A, const Rational& lambda) {
    const int generic = ff_rank(A);
    const int at = rank(evaluate(A, lambda));
    return {generic, at, at < generic};
}

LocalKernel ker_lambda(const RingMatrix<Poly>& A, const Rational& lambda) {
    InvertibleBasis basis = invertible_null_basis(A);
    RingMatrix<Rational> at(A.cols(), basis.Q.cols(), Rational(0));
    for (int i = 0; i < at.rows(); ++i)
        for (int j = 0; j < at.cols(); ++j) at(i, j) = basis.Q(i, j).eval(lambda);
    return {lambda, std::move(at), std::move(basis)};
}

std::vector<Poly> membership_witness(const LocalKernel& k, const std::vector<Rational>& v) {
    const auto c = solve(k.Q_at_lambda, v);
    if (!c) throw SpanError("vector is not in the local kernel");
    std::vector<Poly> w(static_cast<std::size_t>(k.basis.Q.rows()), Poly());
    for (int i = 0; i < k.basis.Q.rows(); ++i)
        for (int j = 0; j < k.basis.Q.cols(); ++j)
            w[static_cast<std::size_t>(i)] += k.basis.Q(i, j).scaled((*c)[static_cast<std::size_t>(j)]);
    return w;
}

namespace {

// Order of vanishing of a polynomial vector at lambda: the minimum of the
// entry orders. Returns nullopt for the zero vector.
std::optional<int> vector_root_order(const std::vector<Poly>& v, const Rational& lambda) {
    std::optional<int> k;
    for (const Poly& e : v) {
        if (e.is_zero()) continue;
        const int o = root_order(e, lambda);
        if (!k || o < *k) k = o;
    }
    return k;
}

std::vector<Rational> evaluate_vector(const std::vector<Poly>& v, const Rational& lambda) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Poly& e : v) out.push_back(e.eval(lambda));
    return out;
}

RootVectorOutcome classify_root_vector(const RingMatrix<Poly>& A, const std::vector<Poly>& r,
                                       const Rational& lambda, const RingMatrix<Rational>& Q_at) {
    const std::vector<Poly> image = apply(A, r, Poly());
    const auto k = vector_root_order(image, lambda);
    if (!k) return NotARootVectorReason::Annihilated;
    if (in_column_span(Q_at, evaluate_vector(r, lambda))) return NotARootVectorReason::InKernelAtLambda;
    if (*k == 0) return NotARootVectorReason::NonvanishingAtLambda;
    const Poly dividers = Poly{-lambda, Rational(1)}.pow(*k);
    std::vector<Poly> residual;
    residual.reserve(image.size());
    for (const Poly& e : image) residual.push_back(e.is_zero() ? Poly() : exact_div(e, dividers));
    return RootVector{r, *k, std::move(residual)};
}

}  // namespace

RootVectorOutcome root_vector_order(const RingMatrix<Poly>& A, const std::vector<Poly>& r,
                                    const Rational& lambda) {
    if (static_cast<int>(r.size()) != A.cols()) throw DomainError("root vector has wrong dimension");
    return classify_root_vector(A, r, lambda, ker_lambda(A, lambda).Q_at_lambda);
}

namespace {

RootVectorSet check_set_impl(const RingMatrix<Poly>& A, const Rational& lambda,
                             const std::vector<std::vector<Poly>>& candidates,
                             const LocalKernel& kl, const SmithDecomposition<Poly>& D) {
    RootVectorSet set;
    set.lambda = lambda;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        RootVectorOutcome out = classify_root_vector(A, candidates[i], lambda, kl.Q_at_lambda);
        if (auto* rv = std::get_if<RootVector>(&out))
            set.vectors.push_back(std::move(*rv));
        else
            set.rejected.emplace_back(static_cast<int>(i), std::get<NotARootVectorReason>(out));
    }

    set.multiplicities = partial_multiplicities_at(D, lambda);
    const int n = A.cols();
    const int p = kl.dimension();
    const int s = static_cast<int>(set.vectors.size());
    set.kernel_dim_at_lambda = n - rank(evaluate(A, lambda));

    // [Q(lambda) | r_1(lambda) ... r_s(lambda)]
    RingMatrix<Rational> concat(n, p + s, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) concat(i, j) = kl.Q_at_lambda(i, j);
    for (int v = 0; v < s; ++v) {
        const auto at = evaluate_vector(set.vectors[static_cast<std::size_t>(v)].r, lambda);
        for (int i = 0; i < n; ++i) concat(i, p + v) = at[static_cast<std::size_t>(i)];
    }
    set.concat_rank = rank(concat);

    if (!set.rejected.empty()) return set;  // flags stay false; diagnostics carry the reasons

    set.lambda_independent = set.concat_rank == p + s;
    // Complete iff the columns are a basis of ker A(lambda): they always
    // lie inside it, so span equality is the two rank checks.
    set.complete = set.lambda_independent && (p + s == set.kernel_dim_at_lambda);

    set.ordered = true;
    for (int v = 0; v + 1 < s; ++v)
        if (set.vectors[static_cast<std::size_t>(v)].order < set.vectors[static_cast<std::size_t>(v + 1)].order)
            set.ordered = false;

    for (const RootVector& rv : set.vectors) set.orders_sorted.push_back(rv.order);
    std::sort(set.orders_sorted.begin(), set.orders_sorted.end(), std::greater<int>());

    const auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    set.multiplicity_sum_check = sum(set.orders_sorted) == sum(set.multiplicities);
    set.maximal = set.complete && set.orders_sorted == set.multiplicities && set.multiplicity_sum_check;
    return set;
}

}  // namespace

RootVectorSet check_set(const RingMatrix<Poly>& A, const Rational& lambda,
                        const std::vector<std::vector<Poly>>& candidates) {
    return check_set_impl(A, lambda, candidates, ker_lambda(A, lambda), smith_decompose(A));
}

RootVectorSet maximal_set(const RingMatrix<Poly>& A, const Rational& lambda) {
    const SmithDecomposition<Poly> D = smith_decompose(A);
    std::vector<std::vector<Poly>> candidates;
    if (!D.invariant_factors.empty()) {
        const RingMatrix<Poly> Vinv = unimodular_inverse(D.V);
        // Invariant factors divide each other upward, so root orders rise
        // with the index; walk the diagonal backwards for descending
        // orders and stop at the first order-zero factor.
        for (int i = D.rank - 1; i >= 0; --i) {
            if (root_order(D.invariant_factors[static_cast<std::size_t>(i)], lambda) == 0) break;
            candidates.push_back(Vinv.column(i));
        }
    }
    return check_set_impl(A, lambda, candidates, ker_lambda(A, lambda), D);
}

std::vector<EigenvectorClass> eigenvectors_at(const RingMatrix<Poly>& A, const Rational& lambda) {
    const RootVectorSet set = maximal_set(A, lambda);
    const LocalKernel kl = ker_lambda(A, lambda);
    std::vector<EigenvectorClass> classes;
    classes.reserve(set.vectors.size());
    for (const RootVector& rv : set.vectors) {
        auto v = evaluate_vector(rv.r, lambda);
        classes.push_back({reduce_mod_span(kl.Q_at_lambda, std::move(v)), kl.Q_at_lambda});
    }
    return classes;
}

}  // namespace edd
