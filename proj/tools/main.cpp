#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nwfund/io.hpp"
#include "nwfund/money.hpp"
#include "nwfund/report.hpp"
#include "nwfund/solver.hpp"

namespace fs = std::filesystem;
using namespace nwfund;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInputError = 3;

struct CommonOpts {
    std::string cash_mode = "full";
    bool no_liquidity = false;
    std::string escalation_combine = "mult";
    double tolerance = -1.0;  // roi: percent; balance: EUR
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--cash-mode", opts.cash_mode, "Growth mode: full|drag")
        ->check(CLI::IsMember({"full", "drag"}));
    cmd->add_flag("--no-liquidity", opts.no_liquidity, "Disable the liquidity constraint");
    cmd->add_option("--escalation-combine", opts.escalation_combine,
                    "Combine inflation and sector increase: mult|add")
        ->check(CLI::IsMember({"mult", "add"}));
    cmd->add_option("--tolerance", opts.tolerance,
                    "Bisection tolerance (percent for ROI, EUR for balance)");
}

FundParams make_fund_params(const CommonOpts& opts) {
    FundParams params;
    params.cash_mode = cash_mode_from_string(opts.cash_mode);
    params.enforce_liquidity = !opts.no_liquidity;
    return params;
}

// "builtin:N" or a path to a scenario JSON file.
ScenarioSpec resolve_scenario(const std::string& ref) {
    if (ref.starts_with("builtin:")) {
        int n = 0;
        try {
            n = std::stoi(ref.substr(8));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad builtin scenario reference: '" + ref + "'");
        }
        auto all = builtin_scenarios();
        if (n < 1 || n > static_cast<int>(all.size())) {
            throw std::invalid_argument("builtin scenario index out of range: " + ref);
        }
        return all[static_cast<std::size_t>(n - 1)];
    }
    return load_scenario_json(ref);
}

EscalationCombine combine_from(const CommonOpts& opts) {
    return opts.escalation_combine == "add" ? EscalationCombine::additive
                                            : EscalationCombine::multiplicative;
}

// Aggregated nominal cost vector for the scenario horizon.
std::vector<double> build_costs(const std::string& costs_path, ScenarioSpec& spec,
                                const CommonOpts& opts) {
    spec.economics.combine = combine_from(opts);
    auto records = load_cost_records_csv(costs_path);
    int horizon = spec.fdsa_completion_year;
    for (const CostRecord& r : records) horizon = std::max(horizon, r.year);
    CostProjection projection =
        make_projection(spec.economics.base_year, horizon, std::move(records));
    return aggregate_annual_costs(projection, spec.flags, spec.economics);
}

void print_solve_tail(const SolveResult& result) {
    std::cout << "iterations: " << result.iterations << "\n";
    if (result.binding_year.has_value()) {
        std::cout << "binding year: " << *result.binding_year << "\n";
    } else {
        std::cout << "binding year: none\n";
    }
    std::cout << "terminal balance: " << format_double(result.terminal_balance) << " EUR\n";
}

int cmd_solve_roi(const std::string& costs_path, const std::string& scenario_ref,
                  double initial_balance, const CommonOpts& opts) {
    ScenarioSpec spec = resolve_scenario(scenario_ref);
    std::vector<double> costs = build_costs(costs_path, spec, opts);

    FundParams params = make_fund_params(opts);
    params.start_year = spec.economics.base_year;
    params.initial_balance = initial_balance;

    SolveConfig cfg;
    if (opts.tolerance > 0.0) cfg.tolerance_roi_pct = opts.tolerance;

    SolveResult result = min_roi(costs, params, cfg);
    if (!result.feasible) {
        std::cout << "infeasible: no ROI up to " << format_fixed2(cfg.roi_upper_pct)
                  << " % covers the projected costs\n";
        print_solve_tail(result);
        return kExitInfeasible;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", result.value * 100.0);
    std::cout << "minimal ROI: " << buf << " %\n";
    print_solve_tail(result);
    return kExitOk;
}

int cmd_solve_balance(const std::string& costs_path, const std::string& scenario_ref,
                      double roi_pct, const CommonOpts& opts) {
    ScenarioSpec spec = resolve_scenario(scenario_ref);
    std::vector<double> costs = build_costs(costs_path, spec, opts);

    FundParams params = make_fund_params(opts);
    params.start_year = spec.economics.base_year;

    SolveConfig cfg;
    if (opts.tolerance > 0.0) cfg.tolerance_balance = opts.tolerance;

    SolveResult result = min_initial_balance(costs, roi_pct / 100.0, params, cfg);
    if (!result.feasible) {
        std::cout << "infeasible: no initial balance up to "
                  << format_double(result.value) << " EUR covers the projected costs\n";
        print_solve_tail(result);
        return kExitInfeasible;
    }
    std::cout << "minimal initial balance: " << format_fixed2(result.value) << " EUR\n";
    print_solve_tail(result);
    return kExitOk;
}

int cmd_inject(const std::string& costs_path, const std::string& scenario_ref, double roi_pct,
               double current_balance, const CommonOpts& opts) {
    ScenarioSpec spec = resolve_scenario(scenario_ref);
    std::vector<double> costs = build_costs(costs_path, spec, opts);

    FundParams params = make_fund_params(opts);
    params.start_year = spec.economics.base_year;

    SolveConfig cfg;
    if (opts.tolerance > 0.0) cfg.tolerance_balance = opts.tolerance;

    InjectionResult result =
        capital_injection(costs, roi_pct / 100.0, current_balance, params, cfg);
    if (!result.balance_solve.feasible) {
        std::cout << "infeasible: no initial balance covers the projected costs\n";
        return kExitInfeasible;
    }
    std::cout << "required balance: " << format_fixed2(result.balance_solve.value) << " EUR\n";
    std::cout << "raw gap: " << format_fixed2(result.raw_gap) << " EUR\n";
    std::cout << "injection: " << format_fixed2(result.injection) << " EUR\n";
    return kExitOk;
}

int cmd_simulate(const std::string& costs_path, const std::string& scenario_ref,
                 double initial_balance, double roi_pct, const std::string& out_path,
                 const CommonOpts& opts) {
    ScenarioSpec spec = resolve_scenario(scenario_ref);
    std::vector<double> costs = build_costs(costs_path, spec, opts);

    FundParams params = make_fund_params(opts);
    params.start_year = spec.economics.base_year;
    params.initial_balance = initial_balance;
    params.roi = roi_pct / 100.0;

    SimOutcome outcome = simulate(params, costs);

    if (out_path.empty()) {
        write_ledger_csv(std::cout, outcome.rows);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        write_ledger_csv(out, outcome.rows);
    }

    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    if (!outcome.feasible()) {
        info << "infeasible: " << to_string(outcome.failure->reason) << " in year "
             << outcome.failure->year << " (t=" << outcome.failure->t << ")\n";
        return kExitInfeasible;
    }
    info << "terminal balance: " << format_double(outcome.final_balance()) << " EUR\n";
    return kExitOk;
}

int cmd_compare(const std::string& scenarios_ref, const std::string& costs_dir,
                double current_balance, double target_roi_pct, const std::string& out_path,
                const CommonOpts& opts) {
    std::vector<ScenarioSpec> specs;
    if (scenarios_ref == "builtin") {
        specs = builtin_scenarios();
    } else {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(scenarios_ref)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) specs.push_back(load_scenario_json(file.string()));
    }
    if (specs.empty()) throw std::invalid_argument("no scenarios found");

    CompareOptions copts;
    copts.current_balance = current_balance;
    copts.target_roi = target_roi_pct / 100.0;
    copts.fund = make_fund_params(opts);
    if (opts.tolerance > 0.0) copts.solve.tolerance_balance = opts.tolerance;

    std::vector<ComparisonRow> rows;
    for (ScenarioSpec& spec : specs) {
        spec.economics.combine = combine_from(opts);
        fs::path costs_file = fs::path(costs_dir) / (spec.name + ".csv");
        ComparisonRow row;
        if (!fs::exists(costs_file)) {
            row.scenario = spec.name;
            row.timeframe_until = spec.fdsa_completion_year;
            row.error = "missing costs file: " + costs_file.string();
        } else {
            row = compare_scenario(spec, load_cost_records_csv(costs_file.string()), copts);
        }
        rows.push_back(std::move(row));
    }

    std::cout << comparison_to_markdown(rows, copts);
    std::string csv = comparison_to_csv(rows);
    if (out_path.empty()) {
        std::cout << "\n" << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << csv;
    }
    return kExitOk;
}

int cmd_validate(const std::string& scenario_ref) {
    ScenarioSpec spec = resolve_scenario(scenario_ref);
    std::vector<Finding> findings = validate_scenario(spec);
    if (findings.empty()) {
        std::cout << "no findings\n";
        return kExitOk;
    }
    for (const Finding& f : findings) {
        std::cout << (f.severity == Severity::error ? "error: " : "warning: ") << f.message
                  << "\n";
    }
    return has_errors(findings) ? kExitInfeasible : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Long-horizon waste-management fund model: scenario costs, fund "
                 "simulation, and bisection solvers for minimal ROI or initial balance"};
    app.require_subcommand(1);

    std::string costs_path;
    std::string scenario_ref;
    std::string scenarios_ref;
    std::string costs_dir;
    std::string out_path;
    double initial_balance = 0.0;
    double current_balance = 21.41e9;
    double roi_pct = 0.0;
    CommonOpts common;

    auto* solve_roi = app.add_subcommand(
        "solve-roi", "Minimal constant ROI that keeps the fund solvent");
    solve_roi->add_option("--costs", costs_path, "Cost projection CSV")->required();
    solve_roi->add_option("--scenario", scenario_ref, "Scenario JSON path or builtin:N")
        ->required();
    solve_roi->add_option("--initial-balance", initial_balance, "Fund balance in EUR")
        ->required();
    add_common(solve_roi, common);

    auto* solve_balance = app.add_subcommand(
        "solve-balance", "Minimal initial balance that keeps the fund solvent");
    solve_balance->add_option("--costs", costs_path, "Cost projection CSV")->required();
    solve_balance->add_option("--scenario", scenario_ref, "Scenario JSON path or builtin:N")
        ->required();
    solve_balance->add_option("--roi", roi_pct, "Constant ROI in percent")->required();
    add_common(solve_balance, common);

    auto* inject = app.add_subcommand(
        "inject", "Capital injection needed today at a given target ROI");
    inject->add_option("--costs", costs_path, "Cost projection CSV")->required();
    inject->add_option("--scenario", scenario_ref, "Scenario JSON path or builtin:N")
        ->required();
    inject->add_option("--roi", roi_pct, "Constant ROI in percent")->required();
    inject->add_option("--current-balance", current_balance, "Current fund balance in EUR");
    add_common(inject, common);

    auto* simulate_cmd = app.add_subcommand("simulate", "Run the fund ledger year by year");
    simulate_cmd->add_option("--costs", costs_path, "Cost projection CSV")->required();
    simulate_cmd->add_option("--scenario", scenario_ref, "Scenario JSON path or builtin:N")
        ->required();
    simulate_cmd->add_option("--initial-balance", initial_balance, "Fund balance in EUR")
        ->required();
    simulate_cmd->add_option("--roi", roi_pct, "Constant ROI in percent")->required();
    simulate_cmd->add_option("--out", out_path, "Ledger CSV path (default stdout)");
    add_common(simulate_cmd, common);

    auto* compare = app.add_subcommand(
        "compare", "Scenario comparison table (markdown + CSV)");
    compare->add_option("--scenarios", scenarios_ref,
                        "Directory of scenario JSON files, or 'builtin'")
        ->required();
    compare->add_option("--costs-dir", costs_dir, "Directory with <scenario-name>.csv files")
        ->required();
    compare->add_option("--current-balance", current_balance, "Current fund balance in EUR");
    compare->add_option("--roi", roi_pct, "Target ROI in percent")->default_val(3.70);
    compare->add_option("--out", out_path, "CSV output path (default: append to stdout)");
    add_common(compare, common);

    auto* validate = app.add_subcommand("validate", "Check a scenario for findings");
    validate->add_option("--scenario", scenario_ref, "Scenario JSON path or builtin:N")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve_roi->parsed()) {
            return cmd_solve_roi(costs_path, scenario_ref, initial_balance, common);
        }
        if (solve_balance->parsed()) {
            return cmd_solve_balance(costs_path, scenario_ref, roi_pct, common);
        }
        if (inject->parsed()) {
            return cmd_inject(costs_path, scenario_ref, roi_pct, current_balance, common);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(costs_path, scenario_ref, initial_balance, roi_pct, out_path,
                                common);
        }
        if (compare->parsed()) {
            return cmd_compare(scenarios_ref, costs_dir, current_balance, roi_pct, out_path,
                               common);
        }
        if (validate->parsed()) {
            return cmd_validate(scenario_ref);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return kExitInputError;
    }
    return kExitInputError;
}
