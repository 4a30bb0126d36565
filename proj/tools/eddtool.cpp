// Command-line surface over the library: Smith forms, invertible null
// bases, the invertibility report, and local eigenstructure for matrices
// read from the text file format. All results are printed as JSON
// ("schema": 1); rationals are serialized as strings so nothing is lost to
// floating point. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edd/eigen.hpp"
#include "edd/errors.hpp"
#include "edd/fraction_free.hpp"
#include "edd/local_smith.hpp"
#include "edd/nullbasis.hpp"
#include "edd/parse.hpp"
#include "edd/rational_linalg.hpp"
#include "edd/smith.hpp"

using json = nlohmann::json;
using namespace edd;

namespace {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Int& n) { return to_string(n); }

json to_json(const Poly& p) {
    json a = json::array();
    for (const Rational& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

json to_json(const Jet& j) {
    json coeffs = json::array();
    for (const Rational& c : j.coeffs()) coeffs.push_back(to_json(c));
    return json{{"coefficients", coeffs}, {"known_zero", j.known_zero()}};
}

template <class T>
json to_json(const RingMatrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
json to_json(const std::vector<T>& v) {
    json a = json::array();
    for (const T& e : v) a.push_back(to_json(e));
    return a;
}

json certified_value(int value, bool certified) {
    return json{{"value", value}, {"certified", certified}};
}

json certified_value(bool value, bool certified) {
    return json{{"value", value}, {"certified", certified}};
}

json orders_json(const std::vector<int>& orders, bool certified) {
    json a = json::array();
    for (int o : orders) a.push_back(certified_value(o, certified));
    return a;
}

struct CommonOptions {
    std::string file;
    std::string lambda_text;
    int truncation = 0;
    std::uint64_t seed = kDefaultConditionSeed;
    int samples = kDefaultConditionSamples;
    bool pretty = false;
    std::vector<std::string> vectors;
};

Rational require_lambda(const CommonOptions& opt) {
    if (opt.lambda_text.empty()) throw DomainError("this command needs --lambda");
    const auto q = parse_rational(opt.lambda_text);
    if (!q) throw DomainError("cannot parse --lambda value '" + opt.lambda_text + "'");
    return *q;
}

// Analytic files carry their expansion point; an explicit --lambda must
// agree with it.
Rational analytic_lambda(const CommonOptions& opt, const MatrixFile& file) {
    if (opt.lambda_text.empty()) return file.point;
    const Rational given = require_lambda(opt);
    if (given != file.point)
        throw DomainError("--lambda " + to_string(given) + " differs from the expansion point " +
                          to_string(file.point) + " of the analytic file");
    return given;
}

json flag_with_certificate(bool value, bool certified, bool truncation_dependent) {
    if (!truncation_dependent) return value;
    return certified_value(value, certified);
}

json run_smith(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    json out{{"command", "smith"}, {"ring", to_string(file.ring)}, {"rows", file.rows}, {"cols", file.cols}};
    if (file.ring == RingTag::PolyQ) {
        const auto& a = std::get<RingMatrix<Poly>>(file.matrix);
        const auto d = smith_decompose(a);
        out["rank"] = d.rank;
        out["invariant_factors"] = to_json(d.invariant_factors);
        out["U"] = to_json(d.U);
        out["S"] = to_json(d.S);
        out["V"] = to_json(d.V);
    } else if (file.ring == RingTag::IntZ) {
        const auto& a = std::get<RingMatrix<Int>>(file.matrix);
        const auto d = smith_decompose(a);
        out["rank"] = d.rank;
        out["invariant_factors"] = to_json(d.invariant_factors);
        out["U"] = to_json(d.U);
        out["S"] = to_json(d.S);
        out["V"] = to_json(d.V);
    } else {
        throw DomainError("smith works on polyQ or int files; use `local` for analytic ones");
    }
    return out;
}

json run_nullbasis(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring != RingTag::PolyQ) throw DomainError("nullbasis works on polyQ files");
    const auto& a = std::get<RingMatrix<Poly>>(file.matrix);
    const auto b = invertible_null_basis(a);
    json checks;
    checks["annihilates"] = b.dimension() == 0 || is_zero_matrix(matmul(a, b.Q, Poly()));
    checks["left_inverse"] =
        b.dimension() == 0 || b.L * b.Q == RingMatrix<Poly>::identity(b.dimension(), Poly(1));
    bool trivial = true;
    if (b.dimension() > 0)
        for (const Poly& f : smith_decompose(b.Q).invariant_factors) trivial = trivial && f.is_unit();
    checks["trivial_smith_form"] = trivial;
    return json{{"command", "nullbasis"},
                {"dimension", b.dimension()},
                {"Q", to_json(b.Q)},
                {"L", to_json(b.L)},
                {"checks", checks}};
}

json run_check_invertible(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring != RingTag::PolyQ) throw DomainError("check-invertible works on polyQ files");
    const auto& q = std::get<RingMatrix<Poly>>(file.matrix);
    const auto rep = check_invertible_conditions(q, opt.samples, opt.seed);
    json conditions;
    conditions["left_inverse"] = rep.cond1_left_inverse;
    conditions["full_rank_at_samples"] =
        json{{"holds", rep.cond2_full_rank_at_samples}, {"sampled", rep.cond2_sampled}, {"samples", rep.samples}};
    conditions["minor_gcd_unit"] =
        json{{"holds", rep.cond3_minor_gcd_unit}, {"exhaustive", rep.cond3_exhaustive}};
    conditions["ring_solutions"] = rep.cond4_ring_solutions;
    conditions["trivial_smith_form"] = rep.cond5_trivial_smith;
    json witness = nullptr;
    if (rep.witness) witness = json{{"kind", rep.witness->kind}, {"detail", rep.witness->detail}};
    json points = json::array();
    for (const Rational& a : rep.sample_points) points.push_back(to_json(a));
    return json{{"command", "check-invertible"},
                {"invertible", rep.invertible()},
                {"conditions", conditions},
                {"sample_points", points},
                {"witness", witness}};
}

json run_eig(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring == RingTag::PolyQ) {
        const auto& a = std::get<RingMatrix<Poly>>(file.matrix);
        const Rational lambda = require_lambda(opt);
        const auto chk = is_eigenvalue(a, lambda);
        const auto mults = partial_multiplicities_at(smith_decompose(a), lambda);
        int algebraic = 0;
        for (int m : mults) algebraic += m;
        return json{{"command", "eig"},
                    {"lambda", to_string(lambda)},
                    {"rank_generic", chk.rank_generic},
                    {"rank_at_lambda", chk.rank_at_lambda},
                    {"eigenvalue", chk.is_eigenvalue},
                    {"partial_multiplicities", mults},
                    {"geometric_multiplicity", static_cast<int>(mults.size())},
                    {"algebraic_multiplicity", algebraic}};
    }
    if (file.ring == RingTag::Analytic) {
        const auto& a = std::get<RingMatrix<Jet>>(file.matrix);
        const Rational lambda = analytic_lambda(opt, file);
        const auto f = local_smith_jet(a);
        std::vector<int> mults;
        for (int o : f.orders)
            if (o > 0) mults.push_back(o);
        std::sort(mults.begin(), mults.end(), std::greater<int>());
        int algebraic = 0;
        for (int m : mults) algebraic += m;
        const int rank_at = rank(value_at_point(a));
        return json{{"command", "eig"},
                    {"lambda", to_string(lambda)},
                    {"rank_generic", certified_value(f.rank, f.rank_certified)},
                    {"rank_at_lambda", rank_at},
                    {"eigenvalue", certified_value(rank_at < f.rank, f.rank_certified)},
                    {"partial_multiplicities", orders_json(mults, true)},
                    {"geometric_multiplicity", certified_value(static_cast<int>(mults.size()), f.rank_certified)},
                    {"algebraic_multiplicity", certified_value(algebraic, f.rank_certified)}};
    }
    throw DomainError("eig works on polyQ or analytic files");
}

json run_kerlambda(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring == RingTag::PolyQ) {
        const auto& a = std::get<RingMatrix<Poly>>(file.matrix);
        const Rational lambda = require_lambda(opt);
        const auto k = ker_lambda(a, lambda);
        return json{{"command", "kerlambda"},
                    {"lambda", to_string(lambda)},
                    {"dimension", k.dimension()},
                    {"basis_at_lambda", to_json(k.Q_at_lambda)},
                    {"basis", to_json(k.basis.Q)}};
    }
    if (file.ring == RingTag::Analytic) {
        const auto& a = std::get<RingMatrix<Jet>>(file.matrix);
        const Rational lambda = analytic_lambda(opt, file);
        const auto f = local_smith_jet(a);
        const auto k = local_kernel_jet(f, a);
        return json{{"command", "kerlambda"},
                    {"lambda", to_string(lambda)},
                    {"dimension", certified_value(k.dimension(), k.certified)},
                    {"basis_at_lambda", to_json(k.Q_at_lambda)}};
    }
    throw DomainError("kerlambda works on polyQ or analytic files");
}

json root_vector_set_json(const RootVectorSet& set) {
    json vectors = json::array();
    for (const RootVector& rv : set.vectors)
        vectors.push_back(json{{"entries", to_json(rv.r)},
                               {"order", rv.order},
                               {"residual_witness", to_json(rv.residual_witness)}});
    json rejected = json::array();
    for (const auto& [idx, reason] : set.rejected) {
        const char* text = reason == NotARootVectorReason::InKernelAtLambda ? "in_kernel_at_lambda"
                           : reason == NotARootVectorReason::Annihilated    ? "annihilated"
                                                                            : "nonvanishing_at_lambda";
        rejected.push_back(json{{"index", idx}, {"reason", text}});
    }
    std::vector<int> orders;
    for (const RootVector& rv : set.vectors) orders.push_back(rv.order);
    return json{{"lambda", to_string(set.lambda)},
                {"vectors", vectors},
                {"orders", orders},
                {"rejected", rejected},
                {"flags",
                 json{{"lambda_independent", set.lambda_independent},
                      {"complete", set.complete},
                      {"ordered", set.ordered},
                      {"maximal", set.maximal}}},
                {"multiplicities", set.multiplicities},
                {"concat_rank", set.concat_rank},
                {"kernel_dim_at_lambda", set.kernel_dim_at_lambda}};
}

json jet_root_vector_set_json(const JetRootVectorSet& set) {
    json vectors = json::array();
    for (const JetRootVector& rv : set.vectors)
        vectors.push_back(json{{"entries", to_json(rv.r)}, {"order", certified_value(rv.order, true)}});
    json rejected = json::array();
    for (const auto& [idx, reason] : set.rejected) {
        const char* text = reason == NotARootVectorReason::InKernelAtLambda ? "in_kernel_at_lambda"
                           : reason == NotARootVectorReason::Annihilated    ? "annihilated"
                                                                            : "nonvanishing_at_lambda";
        rejected.push_back(json{{"index", idx}, {"reason", text}});
    }
    json orders = json::array();
    for (const JetRootVector& rv : set.vectors) orders.push_back(certified_value(rv.order, true));
    return json{{"lambda", to_string(set.lambda)},
                {"vectors", vectors},
                {"orders", orders},
                {"rejected", rejected},
                {"flags",
                 json{{"lambda_independent", flag_with_certificate(set.lambda_independent, true, false)},
                      {"complete", certified_value(set.complete, set.certified)},
                      {"ordered", set.ordered},
                      {"maximal", certified_value(set.maximal, set.certified)}}},
                {"multiplicities", orders_json(set.multiplicities, true)},
                {"concat_rank", set.concat_rank},
                {"kernel_dim_at_lambda", set.kernel_dim_at_lambda}};
}

json run_rootvectors(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring == RingTag::PolyQ) {
        const auto& a = std::get<RingMatrix<Poly>>(file.matrix);
        const Rational lambda = require_lambda(opt);
        RootVectorSet set;
        if (opt.vectors.empty()) {
            set = maximal_set(a, lambda);
        } else {
            std::vector<std::vector<Poly>> candidates;
            for (const std::string& text : opt.vectors)
                candidates.push_back(parse_poly_vector(text, a.cols()));
            set = check_set(a, lambda, candidates);
        }
        json out = root_vector_set_json(set);
        out["command"] = "rootvectors";
        out["constructed"] = opt.vectors.empty();
        return out;
    }
    if (file.ring == RingTag::Analytic) {
        const auto& a = std::get<RingMatrix<Jet>>(file.matrix);
        const Rational lambda = analytic_lambda(opt, file);
        (void)lambda;
        JetRootVectorSet set;
        if (opt.vectors.empty()) {
            set = maximal_set_jet(a);
        } else {
            std::vector<std::vector<Jet>> candidates;
            for (const std::string& text : opt.vectors)
                candidates.push_back(parse_jet_vector(text, a.cols(), file.point, file.truncation));
            set = check_set_jet(a, candidates);
        }
        json out = jet_root_vector_set_json(set);
        out["command"] = "rootvectors";
        out["constructed"] = opt.vectors.empty();
        return out;
    }
    throw DomainError("rootvectors works on polyQ or analytic files");
}

json run_local(const CommonOptions& opt) {
    const MatrixFile file = read_matrix_file_from_path(opt.file, opt.truncation);
    if (file.ring != RingTag::Analytic) throw DomainError("local works on analytic files");
    const auto& a = std::get<RingMatrix<Jet>>(file.matrix);
    const auto f = local_smith_jet(a);
    for (int o : f.orders)
        if (o >= file.truncation - 1)
            throw InsufficientTruncationError("multiplicity " + std::to_string(o) +
                                              " reaches the truncation order " +
                                              std::to_string(file.truncation) + "; raise --trunc");
    std::vector<int> mults;
    for (int o : f.orders)
        if (o > 0) mults.push_back(o);
    std::sort(mults.begin(), mults.end(), std::greater<int>());
    return json{{"command", "local"},
                {"point", to_string(file.point)},
                {"truncation", file.truncation},
                {"orders", orders_json(f.orders, true)},
                {"rank", certified_value(f.rank, f.rank_certified)},
                {"certified_modulus", f.certified_modulus},
                {"partial_multiplicities", orders_json(mults, true)},
                {"U", to_json(f.U)},
                {"V", to_json(f.V)}};
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("file", opt.file, "matrix file")->required();
    cmd->add_option("--lambda", opt.lambda_text, "evaluation point (rational, e.g. 3/2)");
    cmd->add_option("--trunc", opt.truncation, "override the truncation order of analytic files");
    cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    cmd->add_option("--samples", opt.samples, "number of sample points for condition 2");
    cmd->add_flag("--pretty", opt.pretty, "indent the JSON output");
    bool json_flag = false;
    cmd->add_flag("--json", json_flag, "compact JSON output (the default)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Smith forms, invertible null bases, and local eigenstructure"};
    app.require_subcommand(1);

    CommonOptions opt;
    json (*runner)(const CommonOptions&) = nullptr;

    const std::pair<const char*, json (*)(const CommonOptions&)> commands[] = {
        {"smith", run_smith},
        {"nullbasis", run_nullbasis},
        {"check-invertible", run_check_invertible},
        {"eig", run_eig},
        {"kerlambda", run_kerlambda},
        {"rootvectors", run_rootvectors},
        {"local", run_local},
    };
    for (const auto& [name, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, opt);
        if (std::string(name) == "rootvectors")
            sub->add_option("--vec", opt.vectors,
                            "candidate root vector, comma-separated entries (repeatable); "
                            "omit to construct a maximal set");
        sub->callback([&runner, fn = fn]() { runner = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        json out = runner(opt);
        out["schema"] = 1;
        std::cout << (opt.pretty ? out.dump(2) : out.dump()) << "\n";
        return 0;
    } catch (const ParseError& e) {
        json err{{"schema", 1}, {"error", {{"type", "parse"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        const char* type = "domain";
        if (dynamic_cast<const InsufficientTruncationError*>(&e)) type = "insufficient_truncation";
        else if (dynamic_cast<const NotAUnitError*>(&e)) type = "not_a_unit";
        else if (dynamic_cast<const SpanError*>(&e)) type = "not_in_span";
        else if (dynamic_cast<const ContextMismatchError*>(&e)) type = "context_mismatch";
        else if (dynamic_cast<const DivisionByZeroError*>(&e)) type = "division_by_zero";
        json err{{"schema", 1}, {"error", {{"type", type}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 1;
    }
}
