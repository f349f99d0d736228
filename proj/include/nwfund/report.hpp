#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwfund/scenario.hpp"
#include "nwfund/solver.hpp"

namespace nwfund {

// One scenario line of the comparison report.
struct ComparisonRow {
    std::string scenario;
    int timeframe_until = 0;
    double total_cost_nominal = 0.0;  // sum of the aggregated cost vector, EUR
    double required_roi = 0.0;        // fraction; minimal roi at the current balance
    bool roi_feasible = false;
    double balance_required = 0.0;    // minimal initial balance at the target roi
    bool balance_feasible = false;
    double capital_injection = 0.0;   // max(balance_required - current, 0)
    std::optional<std::string> error; // set when the scenario could not be solved
};

struct CompareOptions {
    double current_balance = 21.41e9;
    double target_roi = 0.037;  // fraction
    FundParams fund;            // initial_balance/roi/start_year overridden per scenario
    SolveConfig solve;
};

// Aggregates the scenario's costs over its horizon and solves both
// directions (minimal roi at the current balance, minimal balance at the
// target roi). Cost records are taken as base-year amounts.
ComparisonRow compare_scenario(const ScenarioSpec& spec,
                               const std::vector<CostRecord>& records,
                               const CompareOptions& opts);

// Fixed-format renderings; identical inputs produce identical bytes.
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_to_markdown(const std::vector<ComparisonRow>& rows,
                                   const CompareOptions& opts);

}  // namespace nwfund
