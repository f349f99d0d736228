#include "nwfund/fund.hpp"

#include <stdexcept>
#include <string>

namespace nwfund {

std::string_view to_string(CashMode m) {
    return m == CashMode::full_growth ? "full" : "drag";
}

CashMode cash_mode_from_string(std::string_view s) {
    if (s == "full" || s == "full_growth") return CashMode::full_growth;
    if (s == "drag" || s == "cash_drag") return CashMode::cash_drag;
    throw std::invalid_argument("unknown cash mode: '" + std::string(s) + "'");
}

std::string_view to_string(InfeasibilityReason r) {
    return r == InfeasibilityReason::liquidity_shortfall ? "liquidity_shortfall"
                                                         : "negative_balance";
}

double liquid_percentage(int t, int T, const std::array<double, 4>& schedule) {
    if (t < 1 || t > T) {
        throw std::invalid_argument("period " + std::to_string(t) + " outside [1, " +
                                    std::to_string(T) + "]");
    }
    const double q = static_cast<double>(T) / 4.0;  // real-valued quarter boundaries
    if (t < q) return schedule[0];
    if (t < 2.0 * q) return schedule[1];
    if (t < 3.0 * q) return schedule[2];
    return schedule[3];
}

double cash_percentage(int t, double cash_start, int rundown_years) {
    if (t < 1) throw std::invalid_argument("period must be >= 1");
    if (rundown_years <= 0) throw std::invalid_argument("rundown years must be positive");
    double share = cash_start * (1.0 - static_cast<double>(t - 1) / rundown_years);
    return share > 0.0 ? share : 0.0;
}

SimOutcome simulate(const FundParams& params, std::span<const double> costs) {
    if (costs.empty()) throw std::invalid_argument("cost vector must not be empty");
    if (params.initial_balance < 0.0) {
        throw std::invalid_argument("initial balance must be non-negative");
    }
    if (params.roi < 0.0) throw std::invalid_argument("roi must be non-negative");
    for (double c : costs) {
        if (!(c >= 0.0)) throw std::invalid_argument("negative cost entry");
    }

    const int T = static_cast<int>(costs.size());
    SimOutcome outcome;
    outcome.rows.reserve(costs.size());

    double balance = params.initial_balance;
    for (int t = 1; t <= T; ++t) {
        const int year = params.start_year + t;
        const double cost = costs[static_cast<std::size_t>(t - 1)];
        const double liquid_frac = liquid_percentage(t, T, params.liquid_schedule);
        const double cash_frac =
            cash_percentage(t, params.cash_start, params.cash_rundown_years);
        const double liquid_assets = (liquid_frac + cash_frac) * balance;

        if (params.enforce_liquidity && cost > liquid_assets) {
            outcome.failure = {t, year, InfeasibilityReason::liquidity_shortfall};
            return outcome;
        }

        double growth = balance * params.roi;
        if (params.cash_mode == CashMode::cash_drag) growth *= 1.0 - cash_frac;

        const double closing = balance + growth - cost;
        if (closing < 0.0) {
            outcome.failure = {t, year, InfeasibilityReason::negative_balance};
            return outcome;
        }

        outcome.rows.push_back({t, year, balance, growth, cost, closing, liquid_frac,
                                cash_frac, liquid_assets});
        balance = closing;
    }
    return outcome;
}

double realized_avg_growth(const std::vector<LedgerRow>& ledger) {
    if (ledger.empty()) throw std::invalid_argument("empty ledger");
    double sum = 0.0;
    for (const LedgerRow& row : ledger) {
        if (row.opening_balance <= 0.0) {
            throw std::invalid_argument("average growth undefined: non-positive opening "
                                        "balance in year " + std::to_string(row.year));
        }
        sum += (row.closing_balance + row.cost) / row.opening_balance;
    }
    return sum / static_cast<double>(ledger.size()) - 1.0;
}

}  // namespace nwfund
