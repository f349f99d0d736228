#pragma once

#include <optional>
#include <span>

#include "nwfund/fund.hpp"

namespace nwfund {

// Bisection bounds and tolerances. ROI is searched in percent units over
// [0, 100]; the balance search runs in EUR with its cap derived from the
// cost vector when not set explicitly.
struct SolveConfig {
    double roi_lower_pct = 0.0;
    double roi_upper_pct = 100.0;
    double tolerance_roi_pct = 1e-13;
    double balance_upper = -1.0;  // < 0: use sum of costs (over min liquid share)
    double tolerance_balance = 1e-5;
    int max_iterations = 200;
};

struct SolveResult {
    double value = 0.0;      // roi as fraction, or initial balance in EUR
    int iterations = 0;
    bool feasible = false;
    std::optional<int> binding_year;  // first violating year just below the solution
    double terminal_balance = 0.0;
};

// Smallest constant roi keeping the fund solvent for the given costs and
// initial balance. Any infeasible probe (liquidity shortfall or negative
// balance) raises the lower bound. feasible=false when even the upper
// bound cannot cover the costs.
SolveResult min_roi(std::span<const double> costs, FundParams params,
                    const SolveConfig& cfg = {});

// Smallest initial balance keeping the fund solvent at the given roi
// (fraction). Same feasibility oracle, searched over [0, balance_upper].
SolveResult min_initial_balance(std::span<const double> costs, double roi,
                                FundParams params, const SolveConfig& cfg = {});

struct InjectionResult {
    double injection = 0.0;  // max(raw_gap, 0)
    double raw_gap = 0.0;    // required balance - current balance
    SolveResult balance_solve;
};

// One-time top-up needed today: minimal required balance minus what the
// fund currently holds, clamped at zero.
InjectionResult capital_injection(std::span<const double> costs, double roi,
                                  double current_balance, FundParams params,
                                  const SolveConfig& cfg = {});

}  // namespace nwfund
