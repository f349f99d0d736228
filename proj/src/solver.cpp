#include "nwfund/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nwfund {

namespace {

struct Probe {
    bool feasible;
    std::optional<int> violating_year;
    double terminal_balance;
};

Probe probe(const FundParams& params, std::span<const double> costs) {
    SimOutcome out = simulate(params, costs);
    if (out.feasible()) return {true, std::nullopt, out.final_balance()};
    return {false, out.failure->year, 0.0};
}

void validate_costs(std::span<const double> costs) {
    if (costs.empty()) throw std::invalid_argument("cost vector must not be empty");
    for (double c : costs) {
        if (!(c >= 0.0)) throw std::invalid_argument("negative cost entry");
    }
}

}  // namespace

SolveResult min_roi(std::span<const double> costs, FundParams params, const SolveConfig& cfg) {
    validate_costs(costs);
    if (params.initial_balance <= 0.0) {
        throw std::invalid_argument("initial balance must be positive");
    }
    if (cfg.roi_lower_pct >= cfg.roi_upper_pct || cfg.tolerance_roi_pct <= 0.0) {
        throw std::invalid_argument("bad roi search bounds");
    }

    const auto feasible_at = [&](double roi_pct) {
        params.roi = roi_pct / 100.0;
        return probe(params, costs);
    };

    SolveResult result;
    Probe at_upper = feasible_at(cfg.roi_upper_pct);
    result.iterations = 1;
    if (!at_upper.feasible) {
        result.feasible = false;
        result.value = cfg.roi_upper_pct / 100.0;
        result.binding_year = at_upper.violating_year;
        return result;
    }

    double lower = cfg.roi_lower_pct;
    double upper = cfg.roi_upper_pct;
    while (upper - lower > cfg.tolerance_roi_pct) {
        if (result.iterations >= cfg.max_iterations) {
            throw std::runtime_error("roi bisection did not converge within " +
                                     std::to_string(cfg.max_iterations) + " iterations");
        }
        const double mid = (upper + lower) / 2.0;
        // Any failure mode means the return is too low: a liquidity shortfall
        // also shrinks as growth compounds, so it raises the lower bound.
        if (feasible_at(mid).feasible) {
            upper = mid;
        } else {
            lower = mid;
        }
        ++result.iterations;
    }

    const double value_pct = (upper + lower) / 2.0;
    result.value = value_pct / 100.0;
    result.feasible = true;

    Probe at_value = feasible_at(value_pct);
    result.terminal_balance =
        at_value.feasible ? at_value.terminal_balance
                          : feasible_at(value_pct + cfg.tolerance_roi_pct).terminal_balance;

    const double below = value_pct - 2.0 * cfg.tolerance_roi_pct;
    if (below >= cfg.roi_lower_pct) {
        Probe p = feasible_at(below);
        if (!p.feasible) result.binding_year = p.violating_year;
    }
    return result;
}

SolveResult min_initial_balance(std::span<const double> costs, double roi, FundParams params,
                                const SolveConfig& cfg) {
    validate_costs(costs);
    if (roi < 0.0) throw std::invalid_argument("roi must be non-negative");
    if (cfg.tolerance_balance <= 0.0) throw std::invalid_argument("bad balance tolerance");
    params.roi = roi;

    double cap = cfg.balance_upper;
    if (cap < 0.0) {
        // Sum of costs is enough to pay everything with no return; with the
        // liquidity rule active, scale by the worst-case liquid share.
        cap = std::accumulate(costs.begin(), costs.end(), 0.0);
        if (params.enforce_liquidity) {
            double min_share =
                *std::min_element(params.liquid_schedule.begin(), params.liquid_schedule.end());
            if (min_share <= 0.0) {
                throw std::invalid_argument("liquid schedule admits no payouts; set an "
                                            "explicit balance_upper");
            }
            cap /= min_share;
        }
    }

    const auto feasible_at = [&](double balance) {
        params.initial_balance = balance;
        return probe(params, costs);
    };

    SolveResult result;
    Probe at_upper = feasible_at(cap);
    result.iterations = 1;
    if (!at_upper.feasible) {
        result.feasible = false;
        result.value = cap;
        result.binding_year = at_upper.violating_year;
        return result;
    }

    double lower = 0.0;
    double upper = cap;
    while (upper - lower > cfg.tolerance_balance) {
        if (result.iterations >= cfg.max_iterations) {
            throw std::runtime_error("balance bisection did not converge within " +
                                     std::to_string(cfg.max_iterations) + " iterations");
        }
        const double mid = (upper + lower) / 2.0;
        if (feasible_at(mid).feasible) {
            upper = mid;
        } else {
            lower = mid;
        }
        ++result.iterations;
    }

    result.value = (upper + lower) / 2.0;
    result.feasible = true;

    Probe at_value = feasible_at(result.value);
    result.terminal_balance =
        at_value.feasible ? at_value.terminal_balance
                          : feasible_at(result.value + cfg.tolerance_balance).terminal_balance;

    const double below = result.value - 2.0 * cfg.tolerance_balance;
    if (below >= 0.0) {
        Probe p = feasible_at(below);
        if (!p.feasible) result.binding_year = p.violating_year;
    }
    return result;
}

InjectionResult capital_injection(std::span<const double> costs, double roi,
                                  double current_balance, FundParams params,
                                  const SolveConfig& cfg) {
    InjectionResult result;
    result.balance_solve = min_initial_balance(costs, roi, params, cfg);
    result.raw_gap = result.balance_solve.value - current_balance;
    result.injection = std::max(result.raw_gap, 0.0);
    return result;
}

}  // namespace nwfund
