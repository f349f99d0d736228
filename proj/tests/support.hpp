#pragma once

// Shared helpers for solver tests: random fund instances and the
// independent grid-scan oracles the bisection results are checked against.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "nwfund/fund.hpp"

namespace nwfund::testing {

struct Instance {
    FundParams params;
    std::vector<double> costs;
};

// T <= 50, total costs <= 5x the initial balance, modes randomized.
inline Instance random_instance(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(1, 50);
    std::uniform_real_distribution<double> balance(50.0, 2000.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Instance inst;
    inst.params.initial_balance = balance(rng);
    inst.params.cash_mode = unit(rng) < 0.5 ? CashMode::full_growth : CashMode::cash_drag;
    inst.params.enforce_liquidity = unit(rng) < 0.5;

    int T = len(rng);
    double total = inst.params.initial_balance * 5.0 * unit(rng);
    std::vector<double> weights(static_cast<std::size_t>(T));
    double sum = 0.0;
    for (double& w : weights) {
        w = unit(rng) < 0.2 ? 0.0 : unit(rng);
        sum += w;
    }
    inst.costs.resize(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        inst.costs[i] = sum > 0.0 ? total * weights[i] / sum : 0.0;
    }
    return inst;
}

inline bool feasible_at_roi(const Instance& inst, double roi) {
    FundParams params = inst.params;
    params.roi = roi;
    return simulate(params, inst.costs).feasible();
}

inline bool feasible_at_balance(const Instance& inst, double roi, double balance) {
    FundParams params = inst.params;
    params.roi = roi;
    params.initial_balance = balance;
    return simulate(params, inst.costs).feasible();
}

// Smallest feasible value on the grid {0, step, 2*step, ...} <= limit,
// scanned from below. A coarse pre-scan skips blocks whose upper end is
// infeasible; because feasibility is monotone in the searched variable the
// result is identical to a full scan.
template <typename Feasible>
std::optional<double> grid_scan(double limit, double step, double coarse,
                                Feasible&& feasible) {
    double block_start = 0.0;
    for (long long k = 0;; ++k) {
        block_start = static_cast<double>(k) * coarse;
        if (block_start >= limit) return std::nullopt;
        if (feasible(std::min(block_start + coarse, limit))) break;
    }
    long long first = static_cast<long long>(block_start / step);
    long long last = static_cast<long long>(limit / step) + 1;  // one step of slack at the cap
    for (long long i = first; i <= last; ++i) {
        double value = static_cast<double>(i) * step;
        if (feasible(value)) return value;
    }
    return std::nullopt;
}

inline std::optional<double> grid_min_roi(const Instance& inst, double step = 1e-6,
                                          double coarse = 1e-3) {
    return grid_scan(1.0, step, coarse,
                     [&](double roi) { return feasible_at_roi(inst, roi); });
}

inline std::optional<double> grid_min_balance(const Instance& inst, double roi, double cap,
                                              double step = 0.5, double coarse = 50.0) {
    return grid_scan(cap, step, coarse,
                     [&](double b) { return feasible_at_balance(inst, roi, b); });
}

}  // namespace nwfund::testing
