#include "nwfund/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nwfund/money.hpp"

namespace nwfund {

ComparisonRow compare_scenario(const ScenarioSpec& spec,
                               const std::vector<CostRecord>& records,
                               const CompareOptions& opts) {
    ComparisonRow row;
    row.scenario = spec.name;
    row.timeframe_until = spec.fdsa_completion_year;

    try {
        int horizon = spec.fdsa_completion_year;
        for (const CostRecord& r : records) horizon = std::max(horizon, r.year);
        CostProjection projection =
            make_projection(spec.economics.base_year, horizon, records);
        std::vector<double> costs =
            aggregate_annual_costs(projection, spec.flags, spec.economics);
        row.total_cost_nominal = std::accumulate(costs.begin(), costs.end(), 0.0);

        FundParams params = opts.fund;
        params.start_year = spec.economics.base_year;
        params.initial_balance = opts.current_balance;

        SolveResult roi = min_roi(costs, params, opts.solve);
        row.required_roi = roi.value;
        row.roi_feasible = roi.feasible;

        SolveResult balance = min_initial_balance(costs, opts.target_roi, params, opts.solve);
        row.balance_required = balance.value;
        row.balance_feasible = balance.feasible;
        row.capital_injection = std::max(row.balance_required - opts.current_balance, 0.0);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

namespace {

std::string billions(double eur) { return format_fixed2(eur / 1e9); }

std::string csv_roi(const ComparisonRow& row) {
    return row.roi_feasible ? format_double(row.required_roi * 100.0) : "infeasible";
}

}  // namespace

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "scenario,timeframe_until,total_cost_nominal_eur,required_roi_pct,"
           "balance_required_eur,capital_injection_eur\n";
    for (const ComparisonRow& row : rows) {
        out << row.scenario << ',';
        if (row.error.has_value()) {
            if (row.timeframe_until > 0) out << row.timeframe_until;
            out << ",ERROR,ERROR,ERROR,ERROR\n";
            continue;
        }
        out << row.timeframe_until << ',' << format_double(row.total_cost_nominal) << ','
            << csv_roi(row) << ','
            << (row.balance_feasible ? format_double(row.balance_required) : "infeasible")
            << ',' << format_double(row.capital_injection) << "\n";
    }
    return out.str();
}

std::string comparison_to_markdown(const std::vector<ComparisonRow>& rows,
                                   const CompareOptions& opts) {
    std::ostringstream out;
    out << "Current balance: EUR " << billions(opts.current_balance)
        << "B; target ROI: " << format_fixed2(opts.target_roi * 100.0) << "%\n\n";
    out << "| Scenario | Timeframe (until) | Total cost projections | Required yearly ROI | "
           "Balance required | Required capital injection |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const ComparisonRow& row : rows) {
        out << "| " << row.scenario << " | ";
        if (row.error.has_value()) {
            if (row.timeframe_until > 0) out << row.timeframe_until;
            out << " | ERROR: " << *row.error << " | | | |\n";
            continue;
        }
        out << row.timeframe_until << " | EUR " << billions(row.total_cost_nominal) << "B | ";
        if (row.roi_feasible) {
            out << format_fixed2(row.required_roi * 100.0) << "%";
        } else {
            out << "infeasible";
        }
        out << " | ";
        if (row.balance_feasible) {
            out << "EUR " << billions(row.balance_required) << "B";
        } else {
            out << "infeasible";
        }
        out << " | EUR " << billions(row.capital_injection) << "B |\n";
    }
    return out.str();
}

}  // namespace nwfund
