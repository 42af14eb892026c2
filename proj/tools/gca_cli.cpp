// gca: exact step-3 join/meet calculator and Pappus verification demos.
//
// Subcommands: expand, check, perm-scan, pappus. Output is deterministic:
// identical argv produces byte-identical stdout. All randomness flows from
// an explicit --seed (default 0), never from the clock.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/gca.hpp"

namespace {

using namespace gca;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitStep = 3;
constexpr int kExitInvalidConfig = 4;
constexpr int kExitDegenerate = 5;

void collect_atoms(const CayleyExpr& e, std::vector<std::string>& order, std::set<std::string>& seen) {
    if (e.is_atom()) {
        if (seen.insert(e.name()).second) order.push_back(e.name());
        return;
    }
    for (const CayleyExpr& k : e.children()) collect_atoms(k, order, seen);
}

/// Session point set: the six hexagon points in canonical order, then any
/// further atoms in first-appearance order.
PointSet session_points(const std::vector<CayleyExpr>& exprs) {
    PointSet points = PointSet::pappus_points();
    std::vector<std::string> order;
    std::set<std::string> seen;
    for (const CayleyExpr& e : exprs) collect_atoms(e, order, seen);
    for (const std::string& name : order)
        if (!points.find(name)) points.declare(name);
    return points;
}

std::string format_check_text(const CheckReport& report) {
    std::ostringstream out;
    out << report.mode << ": " << report.verdict();
    if (!report.details.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [k, v] : report.details) {
            if (!first) out << ", ";
            first = false;
            out << k << " " << v;
        }
        out << ")";
    }
    out << "\n";
    if (report.witness) {
        out << "witness:\n";
        const PointSet points = PointSet::pappus_points();
        for (const auto& [name, point] : report.witness->points)
            out << "  " << name << (name.size() < 2 ? " " : "") << " = " << to_string(point) << "\n";
    }
    return out.str();
}

int run_expand(const std::string& expr_text, bool raw, const std::string& format) {
    const CayleyExpr expr = parse(expr_text);
    const PointSet points = session_points({expr});
    if (raw) {
        const RawValue value = raw_eval(expr, points);
        if (format == "json") {
            Json terms = Json::array();
            for (const RawTerm& t : value.terms) terms.push_back(to_json(t, points));
            std::cout << Json{{"schema", 1}, {"step", value.step}, {"raw_terms", std::move(terms)}}.dump(2) << "\n";
        } else {
            for (const RawTerm& t : value.terms) std::cout << to_string(t, points) << "\n";
        }
        return kExitPass;
    }
    const StepValue value = eval_symbolic(expr, points);
    if (format == "json") {
        std::cout << to_json(value, points).dump(2) << "\n";
    } else {
        std::cout << to_string(value, points) << "\n";
    }
    return kExitPass;
}

int run_check(const std::string& lhs_text, const std::string& rhs_text, const std::string& mode,
              const std::string& sign_text, int trials, std::uint64_t seed, long long bound,
              const std::string& format) {
    const CayleyExpr lhs = parse(lhs_text);
    const CayleyExpr rhs = parse(rhs_text);
    const PointSet points = session_points({lhs, rhs});
    const SignRequest sign = sign_request_from_string(sign_text);

    std::vector<CheckReport> reports;
    if (mode == "symbolic" || mode == "both") reports.push_back(check_identity_symbolic(lhs, rhs, points, sign));
    if (mode == "numeric" || mode == "both") {
        NumericCheckOptions options;
        options.trials = trials;
        options.seed = seed;
        options.bound = bound;
        reports.push_back(check_identity_numeric(lhs, rhs, points, options));
    }
    bool pass = true;
    for (const CheckReport& r : reports) pass = pass && r.pass;

    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << to_json(reports.front()).dump(2) << "\n";
        } else {
            Json checks = Json::array();
            for (const CheckReport& r : reports) checks.push_back(to_json(r));
            std::cout << Json{{"schema", 1},
                              {"verdict", pass ? "PASS" : "FAIL"},
                              {"mode", "both"},
                              {"seed", seed},
                              {"details", Json::object()},
                              {"checks", std::move(checks)}}
                             .dump(2)
                      << "\n";
        }
    } else {
        for (const CheckReport& r : reports) std::cout << format_check_text(r);
        std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

int run_perm_scan(const std::string& expr_text, const std::string& format) {
    const CayleyExpr expr = parse(expr_text);
    const PointSet points = PointSet::pappus_points();
    const PermScanResult result = permutation_scan(expr, points);
    if (format == "json") {
        std::cout << to_json(result, points).dump(2) << "\n";
    } else {
        for (const PermScanRow& row : result.rows) {
            std::string images;
            for (int i = 0; i < points.size(); ++i) {
                if (i > 0) images += ' ';
                images += points.name(row.sigma(FormalPoint{i}));
            }
            std::cout << images << "  " << (row.sign > 0 ? "+1" : (row.sign < 0 ? "-1" : "FAIL")) << "\n";
        }
        std::cout << "summary: plus " << result.plus_count << "  minus " << result.minus_count << "  fail "
                  << result.fail_count << "  multiplicative " << (result.multiplicative ? "yes" : "no")
                  << "  samples " << result.multiplicative_samples << "\n";
    }
    return result.pass() ? kExitPass : kExitFail;
}

void print_pappus_run_text(const PappusReport& report, std::uint64_t run_index) {
    static constexpr const char* kAxisNames[3] = {"ab' ^ a'b", "bc' ^ b'c", "ca' ^ c'a"};
    const PointSet points = PointSet::pappus_points();
    std::cout << "run " << run_index;
    if (!report.config.generator.empty()) std::cout << " generator " << report.config.generator;
    if (report.config.generator != "fixture" && report.config.generator != "file")
        std::cout << " seed " << report.config.seed;
    std::cout << "\n";
    for (const std::string& name : points.names())
        std::cout << "  " << name << (name.size() < 2 ? " " : "") << " = "
                  << to_string(report.config.points.at(name)) << "\n";
    if (report.degenerate) {
        std::cout << "  DEGENERATE: " << report.degenerate_detail << "\n";
        return;
    }
    for (std::size_t i = 0; i < 3; ++i)
        std::cout << "  " << kAxisNames[i] << " = " << to_string(display_normalize(report.intersections[i])) << "\n";
    std::cout << "  bracket = " << to_string(report.final_bracket) << "\n";
    std::cout << "  " << (report.pass ? "PASS" : "FAIL") << "\n";
}

int run_pappus(const std::string& config_path, std::uint64_t seed, int runs, const std::string& format) {
    std::vector<PappusReport> reports;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw InvalidConfigError("cannot open configuration file '" + config_path + "'");
        Json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw InvalidConfigError("configuration file is not valid JSON: " + std::string(e.what()));
        }
        Configuration config = config_from_json(j);
        if (config.generator.empty()) config.generator = "file";
        validate_pappus_hypotheses(config);
        reports.push_back(pappus_check(config));
    } else {
        for (int run = 0; run < runs; ++run) {
            const Rng derived = Rng(seed).split(static_cast<std::uint64_t>(run));
            Rng probe = derived;
            const std::uint64_t run_seed = probe.next_u64();
            reports.push_back(pappus_check(random_pappus_config(run_seed, 1000)));
        }
    }

    int pass = 0, fail = 0, degenerate = 0;
    for (const PappusReport& r : reports) {
        if (r.degenerate) ++degenerate;
        else if (r.pass) ++pass;
        else ++fail;
    }

    if (format == "json") {
        Json run_array = Json::array();
        for (const PappusReport& r : reports) run_array.push_back(to_json(r));
        std::cout << Json{{"schema", 1},
                          {"runs", std::move(run_array)},
                          {"summary",
                           Json{{"runs", reports.size()}, {"pass", pass}, {"fail", fail}, {"degenerate", degenerate}}}}
                         .dump(2)
                  << "\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) print_pappus_run_text(reports[i], i + 1);
        std::cout << "summary: runs " << reports.size() << "  pass " << pass << "  fail " << fail << "  degenerate "
                  << degenerate << "\n";
    }
    if (fail > 0) return kExitFail;
    if (degenerate > 0) return kExitDegenerate;
    return kExitPass;
}

/// "--sign -" would read as a flag-like token in some argv parsers; fold
/// the value into --sign=... before CLI11 sees it.
std::vector<std::string> preprocess_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--sign" && i + 1 < argc) {
            arg += "=";
            arg += argv[++i];
        }
        args.push_back(std::move(arg));
    }
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Grassmann-Cayley algebra of step 3: expansion, identity checking, Pappus demos"};
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string expand_expr;
    bool expand_raw = false;
    CLI::App* expand = app.add_subcommand("expand", "expand an expression into bracket coefficients");
    expand->add_option("expr", expand_expr, "expression, e.g. \"(bc' ^ b'c) v (ca' ^ c'a) v (ab' ^ a'b)\"")
        ->required();
    expand->add_flag("--raw", expand_raw, "print the distributed terms before normalization");

    std::string check_lhs, check_rhs, check_mode = "both", check_sign = "+";
    int check_trials = 100;
    std::uint64_t check_seed = 0;
    long long check_bound = 1'000'000;
    CLI::App* check = app.add_subcommand("check", "check lhs == rhs (up to the requested sign)");
    check->add_option("lhs", check_lhs)->required();
    check->add_option("rhs", check_rhs)->required();
    check->add_option("--mode", check_mode)->check(CLI::IsMember({"symbolic", "numeric", "both"}));
    check->add_option("--sign", check_sign)->check(CLI::IsMember({"+", "-", "either", "plus", "minus"}));
    check->add_option("--trials", check_trials)->check(CLI::PositiveNumber);
    check->add_option("--seed", check_seed);
    check->add_option("--bound", check_bound)->check(CLI::PositiveNumber);

    std::string scan_expr;
    CLI::App* scan = app.add_subcommand("perm-scan", "sign of the expression under all 720 point permutations");
    scan->add_option("expr", scan_expr)->required();

    std::string pappus_config;
    std::uint64_t pappus_seed = 0;
    int pappus_runs = 1;
    CLI::App* pappus = app.add_subcommand("pappus", "numeric Pappus demonstration on exact configurations");
    CLI::Option* config_opt = pappus->add_option("--config", pappus_config, "configuration JSON file");
    pappus->add_option("--seed", pappus_seed, "root seed for generated configurations")->excludes(config_opt);
    pappus->add_option("--runs", pappus_runs, "number of generated configurations")
        ->check(CLI::PositiveNumber)
        ->excludes(config_opt);

    app.require_subcommand(1);

    const std::vector<std::string> args = preprocess_args(argc, argv);
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (const std::string& s : args) cargs.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    }

    try {
        if (expand->parsed()) return run_expand(expand_expr, expand_raw, format);
        if (check->parsed())
            return run_check(check_lhs, check_rhs, check_mode, check_sign, check_trials, check_seed, check_bound,
                             format);
        if (scan->parsed()) return run_perm_scan(scan_expr, format);
        return run_pappus(pappus_config, pappus_seed, pappus_runs, format);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const InvalidExpressionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const UnknownPointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const StepError& e) {
        std::cerr << "step error: " << e.what() << "\n";
        return kExitStep;
    } catch (const StepMismatchError& e) {
        std::cerr << "step error: " << e.what() << "\n";
        return kExitStep;
    } catch (const InvalidConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const DegenerateSamplingError& e) {
        std::cerr << "degenerate sampling: " << e.what() << "\n";
        return kExitDegenerate;
    }
}
