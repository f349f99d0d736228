#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nwfund/money.hpp"

namespace nwfund {

enum class EscalationCombine { multiplicative, additive };

// Annual escalation applied to base-year amounts: general inflation plus
// the sector-specific cost increase. The two rates combine multiplicatively
// by default, (1+IR)*(1+NSCI); additive uses (1+IR+NSCI).
struct EscalationParams {
    double inflation_rate = 0.0172;
    double nsci_rate = 0.0197;
    int base_year = 2024;
    EscalationCombine combine = EscalationCombine::multiplicative;
};

// Alternate preset with the lower published inflation assumption (1.60%
// instead of the default 1.72%); sources disagree and neither is canonical.
EscalationParams low_inflation_economics();

enum class CostComponentKind {
    capital,
    operation,
    transport,
    disposal,
    regulatory,
    misc,
    decontamination,
    demolition,
    site_restoration,
    safeguarding,
};

enum class CostCategory {
    interim_storage,
    containers_transport_operational_waste,
    konrad_repository,
    haw_final_disposal,
    decommissioning,
    consolidated_interim_storage,
    transport_to_cis,
};

// Category classes: final-disposal categories are gated by flag i,
// interim-storage categories by j, decommissioning by k.
bool is_final_disposal_category(CostCategory c);
bool is_interim_category(CostCategory c);
bool is_decommissioning_category(CostCategory c);

// Whether the component may appear under the category (final-disposal
// records carry {capital, operation, transport, disposal, regulatory, misc},
// interim records the same minus disposal, decommissioning records
// {decontamination, demolition, transport, site_restoration, safeguarding, misc}).
bool component_valid_for(CostCategory category, CostComponentKind component);

std::string_view to_string(CostComponentKind k);
std::string_view to_string(CostCategory c);
CostComponentKind component_from_string(std::string_view s);
CostCategory category_from_string(std::string_view s);

// One cost line: amount is in base-year real EUR; escalation to nominal
// happens inside aggregation.
struct CostRecord {
    int year = 0;
    std::string site;
    CostCategory category = CostCategory::interim_storage;
    CostComponentKind component = CostComponentKind::operation;
    Money amount;
};

struct CostProjection {
    int base_year = 2024;
    int horizon_end = 2080;
    std::vector<CostRecord> records;
};

// Validates amounts >= 0 and base_year <= record year <= horizon_end;
// throws std::invalid_argument naming the offending record.
CostProjection make_projection(int base_year, int horizon_end,
                               std::vector<CostRecord> records);

// Coverage switches for the three cost classes (the German fund preset
// covers final disposal and interim storage but not decommissioning).
struct CoverageFlags {
    int i = 1;
    int j = 1;
    int k = 0;
};

inline constexpr CoverageFlags kKenfoFlags{1, 1, 0};

// Size-cost curve for an interim storage option: unit cost = a + b/capacity.
// Coefficients may be quoted in USD; conversion multiplies each coefficient
// by the fx rate and rounds it to whole euros, matching the published
// euro-denominated curve.
struct StorageCostParams {
    double fixed_unit_cost = 0.0;   // a, currency per kgHM
    double variable_term = 0.0;     // b, currency per kgHM scaled by capacity in t
    enum class Currency { USD, EUR } currency = Currency::EUR;
    double fx_usd_to_eur = 0.93;
};

// Offsite consolidated pool storage curve (USD coefficients).
StorageCostParams offsite_pool_storage_params();

// EUR per kgHM for a facility of the given capacity (metric tons heavy metal).
double unit_storage_cost(const StorageCostParams& params, double capacity_tons);

// Total facility cost in EUR for the given waste volume (tons heavy metal).
Money cis_total_cost(const StorageCostParams& params, double volume_tons);

// amount * combined_factor^years_from_base.
double escalate(double amount_eur, int years_from_base, const EscalationParams& esc);

// Dry-storage cask fleet at one site; casks are replaced on a fixed cycle
// until the waste is transported away.
struct ContainerFleet {
    std::string site;
    std::int64_t container_count = 0;
    int load_year = 0;
    int replacement_interval = 40;
    Money unit_replacement_cost = Money::from_cents(2'000'000'00);
};

// Replacement events at load_year + n*interval, strictly before
// transfer_year. Each event costs container_count * unit cost (base-year EUR).
std::vector<std::pair<int, Money>> replacement_schedule(const ContainerFleet& fleet,
                                                        int transfer_year);

// Splits a base-year total equally over [start_year, end_year]; the last
// year absorbs the sub-cent rounding residue so the records sum exactly
// to the input.
std::vector<CostRecord> allocate_over_period(Money total, int start_year, int end_year,
                                             std::string site = {},
                                             CostCategory category = CostCategory::consolidated_interim_storage,
                                             CostComponentKind component = CostComponentKind::capital);

// Annual nominal cost vector indexed t = 1..T with T = horizon_end - base_year.
// Each record is escalated from base_year to its own year and summed into
// its slot; coverage flags gate whole category classes. Throws on records
// whose component is invalid for their category, and on records dated at
// the base year itself (the simulation starts the following year).
std::vector<double> aggregate_annual_costs(const CostProjection& projection,
                                           const CoverageFlags& flags,
                                           const EscalationParams& esc);

}  // namespace nwfund
