#include "fibprod/cli.hpp"

#include <exception>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "fibprod/errors.hpp"

namespace fibprod::cli {

namespace {

constexpr std::string_view kDescription =
    "Exact verification of Fibonacci/Lucas infinite product identities.\n"
    "Defaults: --terms 40 --digits 30 --mode limit --format text. At these\n"
    "defaults every catalog identity with n, q <= 2 passes limit verification\n"
    "with a certified tail bound below 1e-6. --terms is capped at 200 (exact\n"
    "arithmetic). Exit codes: 0 all passed, 1 any failed, 2 usage error.";

std::vector<Mode> modes_of(ModeSelection m) {
    switch (m) {
        case ModeSelection::exact: return {Mode::exact};
        case ModeSelection::limit: return {Mode::limit};
        case ModeSelection::both: break;
    }
    return {Mode::exact, Mode::limit};
}

bool all_passed(const ReportSet& set) {
    for (const auto& r : set) {
        if (!r.passed) return false;
    }
    return true;
}

VerificationReport failed_report(IdentityId id, Params params, std::int64_t N, Mode mode,
                                 const std::exception& e) {
    VerificationReport r;
    r.id = id;
    r.params = params;
    r.N = N;
    r.mode = mode;
    r.rhs = rhs_closed_form(id, params);
    r.reason = e.what();
    return r;
}

int run_eval(const RunConfig& c, std::ostream& out) {
    const Params params{*c.n, *c.q};
    const GoldenExt product = partial_product(*c.identity, params, c.terms);
    const std::string lhs = golden_to_decimal(product, c.digits);
    if (c.format == Format::text) {
        out << lhs << '\n';
        return kExitPassed;
    }
    // Exact-mode report without the boundary check, so the usual emitters apply.
    VerificationReport r;
    r.id = *c.identity;
    r.params = params;
    r.N = c.terms;
    r.partial_product = product;
    r.rhs = rhs_closed_form(*c.identity, params);
    r.passed = true;
    out << emit_report({r}, c.format, {c.digits, c.timing});
    return kExitPassed;
}

}  // namespace

std::variant<RunConfig, Usage> parse_args(std::span<const std::string> args) {
    CLI::App app{std::string(kDescription), "fibprod"};
    app.allow_windows_style_options(false);

    std::string command;
    std::string identity;
    std::string format = "text";
    std::string mode;
    RunConfig config;
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t n_max = 0;
    std::int64_t q_max = 0;

    app.add_option("command", command, "list | verify | grid | eval | special")
        ->required()
        ->check(CLI::IsMember({"list", "verify", "grid", "eval", "special"}));
    auto* identity_opt = app.add_option("--identity", identity, "identity label, T1.1 ... T4.6");
    auto* n_opt = app.add_option("--n", n, "parameter n >= 1");
    auto* q_opt = app.add_option("--q", q, "parameter q >= 1");
    auto* n_max_opt = app.add_option("--n-max", n_max, "grid bound on n");
    auto* q_max_opt = app.add_option("--q-max", q_max, "grid bound on q");
    app.add_option("--terms", config.terms, "truncation N (default 40)");
    app.add_option("--digits", config.digits, "decimal digits (default 30)");
    app.add_option("--format", format, "text | json | csv | markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
    app.add_option("--mode", mode, "exact | limit | both (default limit)")
        ->check(CLI::IsMember({"exact", "limit", "both"}));
    app.add_option("--jobs", config.jobs, "grid worker threads (0 = all cores)");
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "write elapsed_ms as 0 for reproducible output");

    // CLI11 expects argv-order with the program name stripped, reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return Usage{app.help(), 0};
    } catch (const CLI::ParseError& e) {
        return Usage{std::string(e.what()) + "\n" + app.help(), kExitUsage};
    }

    auto usage = [&](const std::string& message) { return Usage{message + "\n", kExitUsage}; };

    if (command == "list") config.command = Command::list;
    else if (command == "verify") config.command = Command::verify;
    else if (command == "grid") config.command = Command::grid;
    else if (command == "eval") config.command = Command::eval;
    else config.command = Command::special;

    config.timing = !no_timing;
    config.format = *parse_format(format);
    if (mode == "exact") config.mode = ModeSelection::exact;
    else if (mode == "both") config.mode = ModeSelection::both;

    if (identity_opt->count() > 0) {
        config.identity = parse_identity(identity);
        if (!config.identity) return usage("unknown identity label '" + identity + "'");
    }
    if (n_opt->count() > 0) {
        if (n < 1) return usage("--n must be a positive integer");
        config.n = n;
    }
    if (q_opt->count() > 0) {
        if (q < 1) return usage("--q must be a positive integer");
        config.q = q;
    }
    if (config.terms < 1) return usage("--terms must be a positive integer");
    if (config.terms > kDefaultExactCap) {
        return usage("--terms must not exceed the exact-arithmetic cap of " +
                     std::to_string(kDefaultExactCap));
    }
    if (config.digits < 1 || config.digits > 100000) return usage("--digits must be in 1..100000");

    const bool needs_instance = config.command == Command::verify || config.command == Command::eval;
    if (needs_instance && (!config.identity || !config.n || !config.q)) {
        return usage(command + " requires --identity, --n and --q");
    }
    // Index sizes scale with n*q*N; keep malformed input from exhausting memory.
    constexpr std::int64_t kParamCeiling = 1000;
    if ((config.n && *config.n > kParamCeiling) || (config.q && *config.q > kParamCeiling)) {
        return usage("--n and --q must not exceed " + std::to_string(kParamCeiling));
    }
    if (config.command == Command::grid) {
        if (n_max_opt->count() == 0 || q_max_opt->count() == 0) {
            return usage("grid requires --n-max and --q-max");
        }
        if (n_max < 1 || q_max < 1) return usage("--n-max and --q-max must be >= 1");
        if (n_max > kCatalogParamLimit || q_max > kCatalogParamLimit) {
            return usage("--n-max and --q-max must not exceed " + std::to_string(kCatalogParamLimit));
        }
        config.n_max = n_max;
        config.q_max = q_max;
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const EmitOptions emit{config.digits, config.timing};
    switch (config.command) {
        case Command::list:
            out << emit_catalog(config.format);
            return kExitPassed;
        case Command::eval:
            if (auto warning = validate_params(*config.identity, {*config.n, *config.q})) {
                err << "warning: " << *warning << '\n';
            }
            return run_eval(config, out);
        case Command::special: {
            const ReportSet set = special_evaluations();
            out << emit_report(set, config.format, emit);
            return all_passed(set) ? kExitPassed : kExitFailed;
        }
        case Command::verify: {
            const IdentityId id = *config.identity;
            const Params params{*config.n, *config.q};
            if (auto warning = validate_params(id, params)) err << "warning: " << *warning << '\n';
            ReportSet set;
            for (Mode mode : modes_of(config.mode)) {
                try {
                    set.push_back(mode == Mode::exact ? verify_exact(id, params, config.terms)
                                                      : verify_limit(id, params, config.terms));
                } catch (const std::exception& e) {
                    set.push_back(failed_report(id, params, config.terms, mode, e));
                }
            }
            out << emit_report(set, config.format, emit);
            return all_passed(set) ? kExitPassed : kExitFailed;
        }
        case Command::grid: {
            GridSpec spec;
            spec.n_max = config.n_max;
            spec.q_max = config.q_max;
            spec.terms = config.terms;
            spec.modes = modes_of(config.mode);
            const ReportSet set = run_grid(spec, config.jobs);
            out << emit_report(set, config.format, emit);
            return all_passed(set) ? kExitPassed : kExitFailed;
        }
    }
    return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    try {
        auto parsed = parse_args(args);
        if (auto* u = std::get_if<Usage>(&parsed)) {
            (u->exit_code == 0 ? out : err) << u->message;
            return u->exit_code;
        }
        return run(std::get<RunConfig>(parsed), out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}

}  // namespace fibprod::cli
