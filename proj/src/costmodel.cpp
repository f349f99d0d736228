#include "nwfund/costmodel.hpp"

#include <cmath>
#include <stdexcept>

namespace nwfund {

namespace {

[[noreturn]] void input_error(const std::string& msg) {
    throw std::invalid_argument(msg);
}

std::string describe(const CostRecord& r) {
    return std::to_string(r.year) + "," + r.site + "," + std::string(to_string(r.category)) +
           "," + std::string(to_string(r.component)) + "," + r.amount.str();
}

}  // namespace

EscalationParams low_inflation_economics() {
    EscalationParams esc;
    esc.inflation_rate = 0.0160;
    return esc;
}

bool is_final_disposal_category(CostCategory c) {
    return c == CostCategory::konrad_repository || c == CostCategory::haw_final_disposal;
}

bool is_interim_category(CostCategory c) {
    return c == CostCategory::interim_storage ||
           c == CostCategory::containers_transport_operational_waste ||
           c == CostCategory::consolidated_interim_storage ||
           c == CostCategory::transport_to_cis;
}

bool is_decommissioning_category(CostCategory c) {
    return c == CostCategory::decommissioning;
}

bool component_valid_for(CostCategory category, CostComponentKind component) {
    using K = CostComponentKind;
    if (is_decommissioning_category(category)) {
        switch (component) {
            case K::decontamination:
            case K::demolition:
            case K::transport:
            case K::site_restoration:
            case K::safeguarding:
            case K::misc:
                return true;
            default:
                return false;
        }
    }
    switch (component) {
        case K::capital:
        case K::operation:
        case K::transport:
        case K::regulatory:
        case K::misc:
            return true;
        case K::disposal:
            return is_final_disposal_category(category);
        default:
            return false;
    }
}

std::string_view to_string(CostComponentKind k) {
    switch (k) {
        case CostComponentKind::capital: return "capital";
        case CostComponentKind::operation: return "operation";
        case CostComponentKind::transport: return "transport";
        case CostComponentKind::disposal: return "disposal";
        case CostComponentKind::regulatory: return "regulatory";
        case CostComponentKind::misc: return "misc";
        case CostComponentKind::decontamination: return "decontamination";
        case CostComponentKind::demolition: return "demolition";
        case CostComponentKind::site_restoration: return "site_restoration";
        case CostComponentKind::safeguarding: return "safeguarding";
    }
    input_error("bad CostComponentKind");
}

std::string_view to_string(CostCategory c) {
    switch (c) {
        case CostCategory::interim_storage: return "interim_storage";
        case CostCategory::containers_transport_operational_waste:
            return "containers_transport_operational_waste";
        case CostCategory::konrad_repository: return "konrad_repository";
        case CostCategory::haw_final_disposal: return "haw_final_disposal";
        case CostCategory::decommissioning: return "decommissioning";
        case CostCategory::consolidated_interim_storage:
            return "consolidated_interim_storage";
        case CostCategory::transport_to_cis: return "transport_to_cis";
    }
    input_error("bad CostCategory");
}

CostComponentKind component_from_string(std::string_view s) {
    using K = CostComponentKind;
    for (K k : {K::capital, K::operation, K::transport, K::disposal, K::regulatory, K::misc,
                K::decontamination, K::demolition, K::site_restoration, K::safeguarding}) {
        if (to_string(k) == s) return k;
    }
    input_error("unknown cost component: '" + std::string(s) + "'");
}

CostCategory category_from_string(std::string_view s) {
    using C = CostCategory;
    for (C c : {C::interim_storage, C::containers_transport_operational_waste,
                C::konrad_repository, C::haw_final_disposal, C::decommissioning,
                C::consolidated_interim_storage, C::transport_to_cis}) {
        if (to_string(c) == s) return c;
    }
    input_error("unknown cost category: '" + std::string(s) + "'");
}

CostProjection make_projection(int base_year, int horizon_end,
                               std::vector<CostRecord> records) {
    if (horizon_end < base_year) input_error("horizon_end before base_year");
    for (const CostRecord& r : records) {
        if (r.amount < Money{}) input_error("negative cost amount in record: " + describe(r));
        if (r.year < base_year) input_error("record before base year: " + describe(r));
        if (r.year > horizon_end) input_error("record beyond horizon: " + describe(r));
    }
    return CostProjection{base_year, horizon_end, std::move(records)};
}

StorageCostParams offsite_pool_storage_params() {
    StorageCostParams p;
    p.fixed_unit_cost = 176.0;
    p.variable_term = 370'000.0;
    p.currency = StorageCostParams::Currency::USD;
    p.fx_usd_to_eur = 0.93;
    return p;
}

namespace {

// Coefficients in EUR; USD inputs are converted and rounded to whole euros.
std::pair<double, double> eur_coefficients(const StorageCostParams& params) {
    if (params.currency == StorageCostParams::Currency::EUR) {
        return {params.fixed_unit_cost, params.variable_term};
    }
    if (params.fx_usd_to_eur <= 0.0) input_error("fx rate must be positive");
    return {std::round(params.fixed_unit_cost * params.fx_usd_to_eur),
            std::round(params.variable_term * params.fx_usd_to_eur)};
}

}  // namespace

double unit_storage_cost(const StorageCostParams& params, double capacity_tons) {
    if (params.fixed_unit_cost < 0.0 || params.variable_term < 0.0) {
        input_error("storage cost coefficients must be non-negative");
    }
    if (capacity_tons <= 0.0) input_error("capacity must be positive");
    auto [a, b] = eur_coefficients(params);
    return a + b / capacity_tons;
}

Money cis_total_cost(const StorageCostParams& params, double volume_tons) {
    if (volume_tons <= 0.0) input_error("volume must be positive");
    return Money::from_eur(unit_storage_cost(params, volume_tons) * volume_tons * 1000.0);
}

double escalate(double amount_eur, int years_from_base, const EscalationParams& esc) {
    if (years_from_base < 0) input_error("escalation offset must be non-negative");
    if (esc.inflation_rate < 0.0 || esc.nsci_rate < 0.0) {
        input_error("escalation rates must be non-negative");
    }
    double factor = esc.combine == EscalationCombine::multiplicative
                        ? (1.0 + esc.inflation_rate) * (1.0 + esc.nsci_rate)
                        : 1.0 + esc.inflation_rate + esc.nsci_rate;
    return amount_eur * std::pow(factor, years_from_base);
}

std::vector<std::pair<int, Money>> replacement_schedule(const ContainerFleet& fleet,
                                                        int transfer_year) {
    if (fleet.replacement_interval <= 0) input_error("replacement interval must be positive");
    if (fleet.container_count < 0) input_error("container count must be non-negative");
    if (fleet.unit_replacement_cost < Money{}) {
        input_error("replacement cost must be non-negative");
    }
    if (transfer_year < fleet.load_year) {
        input_error("transfer year precedes load year for site '" + fleet.site + "'");
    }
    std::vector<std::pair<int, Money>> events;
    Money per_event = fleet.unit_replacement_cost * fleet.container_count;
    for (int year = fleet.load_year + fleet.replacement_interval; year < transfer_year;
         year += fleet.replacement_interval) {
        events.emplace_back(year, per_event);
    }
    return events;
}

std::vector<CostRecord> allocate_over_period(Money total, int start_year, int end_year,
                                             std::string site, CostCategory category,
                                             CostComponentKind component) {
    if (start_year > end_year) input_error("allocation start after end");
    if (total < Money{}) input_error("allocation total must be non-negative");

    const std::int64_t years = end_year - start_year + 1;
    const std::int64_t per = total.cents() / years;

    std::vector<CostRecord> records;
    records.reserve(static_cast<std::size_t>(years));
    std::int64_t allocated = 0;
    for (int year = start_year; year <= end_year; ++year) {
        std::int64_t cents = (year == end_year) ? total.cents() - allocated : per;
        allocated += cents;
        records.push_back({year, site, category, component, Money::from_cents(cents)});
    }
    return records;
}

std::vector<double> aggregate_annual_costs(const CostProjection& projection,
                                           const CoverageFlags& flags,
                                           const EscalationParams& esc) {
    const int T = projection.horizon_end - projection.base_year;
    if (T < 0) input_error("projection horizon precedes base year");
    std::vector<double> costs(static_cast<std::size_t>(T), 0.0);

    for (const CostRecord& r : projection.records) {
        if (!component_valid_for(r.category, r.component)) {
            input_error("component '" + std::string(to_string(r.component)) +
                        "' not valid for category '" + std::string(to_string(r.category)) +
                        "' in record: " + describe(r));
        }
        int gate = is_decommissioning_category(r.category) ? flags.k
                 : is_interim_category(r.category)         ? flags.j
                                                           : flags.i;
        if (gate == 0) continue;

        int t = r.year - projection.base_year;
        if (t == 0) {
            input_error("record dated at the base year cannot be funded (simulation starts "
                        "the following year): " + describe(r));
        }
        if (t < 0 || t > T) input_error("record outside projection: " + describe(r));
        costs[static_cast<std::size_t>(t - 1)] += escalate(r.amount.eur(), t, esc);
    }
    return costs;
}

}  // namespace nwfund
