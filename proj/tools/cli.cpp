#include "cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "realhur/branch_spec.hpp"
#include "realhur/errors.hpp"
#include "realhur/json_io.hpp"
#include "render.hpp"

namespace realhur::cli {

namespace {

struct Flags {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed, budget, enum_budget;
    std::optional<unsigned> workers;
    std::optional<double> tol_residual, tol_dedup, tol_real, tol_cluster;
    std::optional<std::string> cache, format;
    std::optional<int> max_degree;
    int verbose = 0;

    std::string profiles, values, lambda = "1";
    int mmax = 2, dmax = 4, kmax = 3;
    std::optional<int> fit;
    bool corrupt_sign = false, force_full = false;
};

RunConfig resolve(const Flags& f) {
    RunConfig c = f.config_path ? load_config(*f.config_path) : default_config();
    auto& s = c.solver;
    if (f.seed) s.seed = *f.seed;
    if (f.budget) s.budget = *f.budget;
    if (f.enum_budget) s.count.max_visits = *f.enum_budget;
    if (f.workers) s.workers = s.count.workers = *f.workers;
    if (f.tol_residual) s.tol.residual = *f.tol_residual;
    if (f.tol_dedup) s.tol.dedup = *f.tol_dedup;
    if (f.tol_real) s.tol.realness = *f.tol_real;
    if (f.tol_cluster) s.tol.cluster = *f.tol_cluster;
    if (f.cache) c.cache = *f.cache;
    if (f.format) c.format = parse_format(*f.format);
    if (f.max_degree) c.max_degree = *f.max_degree;
    c.verbosity = f.verbose;
    c.validate();
    return c;
}

BranchSpec spec_from(const Flags& f, const RunConfig& c) {
    if (f.profiles.empty()) throw ValidationError("--profiles is required");
    auto profiles = parse_profile_list(f.profiles);
    auto spec = f.values.empty() ? BranchSpec::with_default_values(std::move(profiles))
                                 : BranchSpec::from_attachment(std::move(profiles), parse_values(f.values));
    if (spec.degree() > c.max_degree) {
        throw ScaleExceeded("degree " + std::to_string(spec.degree()) + " above max_degree " +
                            std::to_string(c.max_degree));
    }
    return spec;
}

void add_spec_options(CLI::App* cmd, Flags& f, bool with_values) {
    cmd->add_option("--profiles", f.profiles, "Ramification profiles, e.g. \"2,1|2,1\"")->required();
    if (with_values) cmd->add_option("--values", f.values, "Branch values, one per profile (default 1..k)");
}

int dispatch(const std::string& name, const Flags& f, std::ostream& out) {
    const RunConfig config = resolve(f);
    ojson result;
    int code = ok;

    if (name == "hurwitz") {
        auto profiles = parse_profile_list(f.profiles);
        result = to_json(count_factorizations(profiles, config.solver.count));
    } else if (name == "verify") {
        VerifyOptions vo;
        vo.dmax = f.dmax;
        vo.kmax = f.kmax;
        vo.corrupt_sign = f.corrupt_sign;
        vo.workers = config.solver.workers;
        if (vo.dmax > config.max_degree) throw ScaleExceeded("dmax above max_degree " + std::to_string(config.max_degree));
        const auto report = run_verify(config.solver, config.cache, vo);
        result = to_json(report);
        if (report.summary.failed > 0) code = property_failure;
        else if (report.summary.infra > 0) code = infra_error;
    } else {
        SolveSession session(config.solver, config.cache);
        if (name == "solve") {
            const auto spec = spec_from(f, config);
            const auto& set = session.solve(spec);
            result = to_json(set, config.solver.tol.realness);
            if (!set.certificate.complete) code = infra_error;
        } else if (name == "s-number") {
            const auto spec = spec_from(f, config);
            result = to_json(spec);
            result.update(to_json(s_number(session, spec)));
        } else if (name == "real-hurwitz") {
            const auto spec = spec_from(f, config);
            result = to_json(spec);
            result.update(to_json(real_hurwitz(session, spec, f.force_full)));
        } else if (name == "series") {
            SeriesOptions so;
            so.max_degree = config.max_degree;
            so.force_full = f.force_full;
            const auto table = series_table(session, Partition::parse(f.lambda), f.mmax, so);
            result = to_json(table);
            if (f.fit) {
                auto& fits = result["fits"] = ojson::array();
                for (auto parity : {Parity::even, Parity::odd}) {
                    try {
                        fits.push_back(to_json(basis_fit(table, parity, *f.fit)));
                    } catch (const ValidationError& e) {
                        fits.push_back({{"parity", to_string(parity)}, {"skipped", e.what()}});
                    }
                }
            }
            if (table.truncated) code = infra_error;
        }
    }
    render(envelope(name, config, std::move(result)), config.format, out);
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Real polynomial Hurwitz numbers and signed counts", "realhur"};
    app.require_subcommand(1);
    Flags f;
    app.add_option("--config", f.config_path, "JSON run config (default: $REALHUR_CONFIG)");
    app.add_option("--seed", f.seed, "RNG seed");
    app.add_option("--budget", f.budget, "Newton start budget");
    app.add_option("--enum-budget", f.enum_budget, "Factorization search visit budget");
    app.add_option("--workers", f.workers, "Worker threads");
    app.add_option("--tol-residual", f.tol_residual);
    app.add_option("--tol-dedup", f.tol_dedup);
    app.add_option("--tol-real", f.tol_real);
    app.add_option("--tol-cluster", f.tol_cluster);
    app.add_option("--cache", f.cache, "JSONL solution cache");
    app.add_option("--format", f.format, "json, csv or text");
    app.add_option("--max-degree", f.max_degree, "Largest degree attempted");
    app.add_flag("-v,--verbose", f.verbose);
    app.fallthrough();

    auto* hurwitz = app.add_subcommand("hurwitz", "Count factorizations N and H = N/d");
    hurwitz->add_option("--profiles", f.profiles)->required();
    add_spec_options(app.add_subcommand("solve", "All normalized polynomials with the given branch data"), f, true);
    add_spec_options(app.add_subcommand("s-number", "Signed count of real normalized polynomials"), f, true);
    auto* hr = app.add_subcommand("real-hurwitz", "Signed count of real covering classes");
    add_spec_options(hr, f, true);
    hr->add_flag("--force-full", f.force_full, "Compute classes even where parity forces 0");
    auto* verify = app.add_subcommand("verify", "Theorem and property sweep");
    verify->add_option("--dmax", f.dmax);
    verify->add_option("--kmax", f.kmax);
    verify->add_flag("--corrupt-sign", f.corrupt_sign, "Negative control: corrupt the sign route");
    auto* series = app.add_subcommand("series", "One-part tables h_lambda(m)");
    series->add_option("--lambda", f.lambda);
    series->add_option("--mmax", f.mmax);
    series->add_option("--fit", f.fit, "Basis degree bound D");
    series->add_flag("--force-full", f.force_full, "Compute classes even where parity forces 0");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return dispatch(name, f, out);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return validation_error;
    } catch (const IncompleteEnumeration& e) {
        err << "incomplete: " << e.what() << '\n';
        return infra_error;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return infra_error;
    } catch (const ScaleExceeded& e) {
        err << "scale exceeded: " << e.what() << '\n';
        return infra_error;
    } catch (const DegenerateConfiguration& e) {
        err << "degenerate configuration: " << e.what() << '\n';
        return infra_error;
    } catch (const AmbiguousRealness& e) {
        err << "ambiguous realness: " << e.what() << '\n';
        return infra_error;
    } catch (const ClusterAmbiguity& e) {
        err << "cluster ambiguity: " << e.what() << '\n';
        return infra_error;
    } catch (const OvercountDetected& e) {
        err << "overcount: " << e.what() << '\n';
        return property_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace realhur::cli
