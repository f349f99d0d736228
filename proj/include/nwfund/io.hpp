#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nwfund/costmodel.hpp"
#include "nwfund/fund.hpp"
#include "nwfund/scenario.hpp"

namespace nwfund {

// Parse failure with the 1-based line (CSV) it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Cost CSV: header "year,site,category,component,amount_eur", categories
// and components in lower snake_case, amounts as plain decimals.
std::vector<CostRecord> load_cost_records_csv(const std::string& path);
std::vector<CostRecord> read_cost_records_csv(std::istream& in);
void write_cost_records_csv(std::ostream& out, const std::vector<CostRecord>& records);

// Scenario JSON with a fixed key set; unknown keys are rejected.
ScenarioSpec load_scenario_json(const std::string& path);
ScenarioSpec scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const ScenarioSpec& spec);

// Ledger CSV: "t,year,opening_eur,growth_eur,cost_eur,closing_eur,
// liquid_fraction,cash_fraction,liquid_assets_eur". Doubles are written
// in shortest round-trip form, so re-reading reproduces them exactly.
void write_ledger_csv(std::ostream& out, const std::vector<LedgerRow>& rows);
std::vector<LedgerRow> read_ledger_csv(std::istream& in);

}  // namespace nwfund
