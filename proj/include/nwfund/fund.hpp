#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace nwfund {

// full_growth applies the return to the whole balance; cash_drag excludes
// the cash share from earning (growth = opening * roi * (1 - cash_t)).
enum class CashMode { full_growth, cash_drag };

std::string_view to_string(CashMode m);
CashMode cash_mode_from_string(std::string_view s);

struct FundParams {
    double initial_balance = 0.0;  // EUR at end of start_year
    double roi = 0.0;              // constant fraction per year
    int start_year = 2024;         // calendar year of t = 0
    CashMode cash_mode = CashMode::full_growth;
    bool enforce_liquidity = true;
    // Liquid share per horizon quarter (tradable assets available for payouts).
    std::array<double, 4> liquid_schedule{0.70, 0.60, 0.50, 0.40};
    // Cash share starts here and runs down linearly to zero.
    double cash_start = 0.08;
    int cash_rundown_years = 5;
};

struct LedgerRow {
    int t = 0;  // 1..T
    int year = 0;
    double opening_balance = 0.0;
    double growth_amount = 0.0;
    double cost = 0.0;
    double closing_balance = 0.0;
    double liquid_fraction = 0.0;
    double cash_fraction = 0.0;
    double liquid_assets = 0.0;  // (liquid + cash fraction) * opening
};

enum class InfeasibilityReason { liquidity_shortfall, negative_balance };

std::string_view to_string(InfeasibilityReason r);

struct Infeasibility {
    int t = 0;
    int year = 0;
    InfeasibilityReason reason = InfeasibilityReason::negative_balance;
};

// Rows cover the completed years; on failure they stop just before the
// violating year, which is identified in `failure`.
struct SimOutcome {
    std::vector<LedgerRow> rows;
    std::optional<Infeasibility> failure;

    bool feasible() const { return !failure.has_value(); }
    double final_balance() const { return rows.empty() ? 0.0 : rows.back().closing_balance; }
};

// Piecewise liquid share by horizon quarter; boundaries are real-valued
// (t < T/4 -> first, T/4 <= t < T/2 -> second, ...). Throws when t is
// outside [1, T].
double liquid_percentage(int t, int T,
                         const std::array<double, 4>& schedule = {0.70, 0.60, 0.50, 0.40});

// max(cash_start * (1 - (t-1)/rundown), 0). Throws when t < 1.
double cash_percentage(int t, double cash_start = 0.08, int rundown_years = 5);

// Year-by-year run: liquidity check against the opening balance, growth,
// cost deduction, solvency check. Costs are the nominal annual vector for
// t = 1..size. Throws on negative cost entries.
SimOutcome simulate(const FundParams& params, std::span<const double> costs);

// (1/T) * sum((closing_t + cost_t) / opening_t) - 1; equals the simulated
// roi exactly on a full-growth ledger. Throws on non-positive openings.
double realized_avg_growth(const std::vector<LedgerRow>& ledger);

}  // namespace nwfund
