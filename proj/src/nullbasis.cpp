#include "edd/nullbasis.hpp"

#include <random>

#include "edd/fraction_free.hpp"
#include "edd/rational_linalg.hpp"

namespace edd {

namespace {

// Divide a polynomial column by the gcd of its entries and make the first
// nonzero entry monic.
void make_primitive(RingMatrix<Poly>& M, int col) {
    Poly g;
    for (int i = 0; i < M.rows(); ++i) g = gcd(g, M(i, col));
    if (g.is_zero()) return;
    for (int i = 0; i < M.rows(); ++i) M(i, col) = exact_div(M(i, col), g);
    for (int i = 0; i < M.rows(); ++i) {
        if (M(i, col).is_zero()) continue;
        const Rational lead = M(i, col).leading();
        if (lead != 1)
            for (int r = 0; r < M.rows(); ++r) M(r, col) = M(r, col).scaled(Rational(1) / lead);
        break;
    }
}

}  // namespace

RingMatrix<Poly> kernel_over_fractions(const RingMatrix<Poly>& A) {
    RingMatrix<Poly> K = ff_kernel(A);
    for (int j = 0; j < K.cols(); ++j) make_primitive(K, j);
    return K;
}

InvertibleBasis invertible_null_basis(const RingMatrix<Poly>& A) {
    const RingMatrix<Poly> K = kernel_over_fractions(A);
    const int n = A.cols();
    const int p = K.cols();
    InvertibleBasis out;
    if (p == 0) {
        out.Q = RingMatrix<Poly>(n, 0, std::vector<Poly>{});
        out.L = RingMatrix<Poly>(0, n, std::vector<Poly>{});
        return out;
    }
    out.provenance = smith_decompose(K);
    std::vector<int> first_p(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) first_p[static_cast<std::size_t>(j)] = j;
    out.Q = out.provenance.U.columns(first_p);
    const RingMatrix<Poly> Uinv = unimodular_inverse(out.provenance.U);
    out.L = RingMatrix<Poly>(p, n, Poly());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) out.L(i, j) = Uinv(i, j);
    return out;
}

namespace {

Rational sample_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 8);
    return Rational(num(rng), den(rng));
}

}  // namespace

InvertibilityReport check_invertible_conditions(const RingMatrix<Poly>& Q, int samples, std::uint64_t seed) {
    const int n = Q.rows();
    const int p = Q.cols();
    if (p > n) throw DomainError("basis matrix has more columns than rows");
    if (ff_rank(Q) != p) throw DomainError("basis matrix does not have full column rank");

    InvertibilityReport rep;
    rep.samples = samples;

    const SmithDecomposition<Poly> D = smith_decompose(Q);

    // 5: trivial Smith form — every invariant factor is a unit.
    rep.cond5_trivial_smith = D.rank == p;
    for (const Poly& f : D.invariant_factors)
        if (!f.is_unit()) rep.cond5_trivial_smith = false;

    // 1: construct L = V^{-1} S^T U^{-1} from the Smith factors and verify
    // L Q = I_p by multiplication.
    rep.cond1_left_inverse = false;
    if (rep.cond5_trivial_smith) {
        const RingMatrix<Poly> Uinv = unimodular_inverse(D.U);
        const RingMatrix<Poly> Vinv = unimodular_inverse(D.V);
        RingMatrix<Poly> St(p, n, Poly());  // S^T with unit diagonal
        for (int i = 0; i < p; ++i) St(i, i) = Poly(1);
        const RingMatrix<Poly> L = Vinv * St * Uinv;
        rep.cond1_left_inverse = L * Q == RingMatrix<Poly>::identity(p, Poly(1));
    }

    // 2: full column rank of Q(a) at sampled rational points; over a PID
    // full rank modulo the prime x - a is full rank of the evaluation.
    std::mt19937_64 rng(seed);
    rep.cond2_full_rank_at_samples = true;
    for (int s = 0; s < samples; ++s) {
        const Rational a = sample_rational(rng);
        rep.sample_points.push_back(a);
        if (!full_column_rank(evaluate(Q, a))) {
            rep.cond2_full_rank_at_samples = false;
            if (!rep.witness)
                rep.witness = InvertibilityWitness{"rank_drop_at_point", "Q(" + to_string(a) + ") is rank deficient"};
        }
    }

    // 3: gcd of all p x p minors, exhaustively when affordable, otherwise
    // via the product of the invariant factors (the p-th determinantal
    // divisor up to a unit).
    rep.cond3_exhaustive = n <= 12 && p <= 4;
    Poly minor_gcd;
    if (rep.cond3_exhaustive) {
        minor_gcd = determinantal_divisors_oracle(Q, p);
    } else {
        minor_gcd = Poly(1);
        for (const Poly& f : D.invariant_factors) minor_gcd *= f;
        minor_gcd = minor_gcd.monic();
    }
    rep.cond3_minor_gcd_unit = minor_gcd.is_one();
    if (!rep.cond3_minor_gcd_unit && !rep.witness)
        rep.witness = InvertibilityWitness{"non_unit_gcd", "gcd of maximal minors is " + minor_gcd.to_string()};

    // 4: right-hand sides in cs(Q) over Q(x) and in Q[x]^n must solve with
    // polynomial coordinates. The columns of the Smith U-factor restricted
    // to the first p positions span exactly that intersection, so they
    // probe it without bias; a few random module elements are added.
    rep.cond4_ring_solutions = true;
    std::vector<int> first_p(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) first_p[static_cast<std::size_t>(j)] = j;
    const RingMatrix<Poly> T = D.U.columns(first_p);
    auto probe = [&](const std::vector<Poly>& b) {
        const RingSolveResult r = solve_in_ring(Q, b);
        if (r.status == RingSolveResult::Status::NotInModule) {
            rep.cond4_ring_solutions = false;
            if (!rep.witness)
                rep.witness = InvertibilityWitness{
                    "non_ring_coefficient",
                    "coordinate " + std::to_string(r.offending_coordinate) + " solves to (" +
                        r.offending_numerator.to_string() + ")/(" + r.offending_denominator.to_string() + ")"};
        }
    };
    for (int j = 0; j < p; ++j) probe(T.column(j));
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Poly> c;
        c.reserve(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j) c.push_back(Poly{Rational(coef(rng)), Rational(coef(rng))});
        probe(apply(T, c, Poly()));
    }

    return rep;
}

RingSolveResult solve_in_ring(const RingMatrix<Poly>& Q, const std::vector<Poly>& b) {
    const int n = Q.rows();
    const int p = Q.cols();
    if (static_cast<int>(b.size()) != n) throw DomainError("solve_in_ring: dimension mismatch");
    RingMatrix<Poly> aug(n, p + 1, Poly());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) aug(i, j) = Q(i, j);
        aug(i, p) = b[static_cast<std::size_t>(i)];
    }
    const auto gj = ff_gauss_jordan(aug);
    for (int c : gj.pivot_cols)
        if (c == p) throw SpanError("right-hand side is not in the column span");
    if (static_cast<int>(gj.pivot_cols.size()) != p)
        throw DomainError("solve_in_ring: basis matrix does not have full column rank");

    RingSolveResult out;
    out.status = RingSolveResult::Status::InRing;
    out.solution.assign(static_cast<std::size_t>(p), Poly());
    for (int k = 0; k < p; ++k) {
        // Row k carries d * a_k = rhs entry, d the final pivot.
        const Poly num = gj.mat(gj.pivot_rows[static_cast<std::size_t>(k)], p);
        const Poly den = gj.denominator;
        auto [q, r] = divmod(num, den);
        if (r.is_zero()) {
            out.solution[static_cast<std::size_t>(gj.pivot_cols[static_cast<std::size_t>(k)])] = q;
        } else {
            out.status = RingSolveResult::Status::NotInModule;
            out.offending_coordinate = gj.pivot_cols[static_cast<std::size_t>(k)];
            const Poly g = gcd(num, den);
            Poly rn = exact_div(num, g);
            Poly rd = exact_div(den, g);
            const Rational lead = rd.leading();
            rn = rn.scaled(Rational(1) / lead);
            rd = rd.scaled(Rational(1) / lead);
            out.offending_numerator = rn;
            out.offending_denominator = rd;
            out.solution.clear();
            return out;
        }
    }
    return out;
}

}  // namespace edd
