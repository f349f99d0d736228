#include "nwfund/scenario.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nwfund {

std::string_view to_string(Phase3Method m) {
    return m == Phase3Method::boreholes ? "boreholes" : "exploratory_mines";
}

Phase3Method phase3_method_from_string(std::string_view s) {
    if (s == "boreholes") return Phase3Method::boreholes;
    if (s == "exploratory_mines") return Phase3Method::exploratory_mines;
    throw std::invalid_argument("unknown phase3 method: '" + std::string(s) + "'");
}

bool has_errors(const std::vector<Finding>& findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::error; });
}

std::vector<ScenarioSpec> builtin_scenarios() {
    const EscalationParams economics{};  // 1.72% inflation, 1.97% sector increase, base 2024
    const CoverageFlags flags = kKenfoFlags;

    const auto make = [&](std::string name, int p2, int p3, Phase3Method method, int risk,
                          std::optional<int> fdsp, int cis_delay,
                          std::optional<std::string> cis_site, int completion) {
        ScenarioSpec s;
        s.name = std::move(name);
        s.phase1_completion = 2028;
        s.phase2_duration_years = p2;
        s.phase3_duration_years = p3;
        s.phase3_method = method;
        s.risk_delay_years = risk;
        s.fdsp_year = fdsp;
        s.cis.enabled = cis_site.has_value();
        s.cis.delay_years = cis_delay;
        s.cis.site = std::move(cis_site);
        s.cis.capacity_mthm = s.cis.enabled ? 10'500.0 : 0.0;
        s.fdsa_completion_year = completion;
        s.economics = economics;
        s.flags = flags;
        return s;
    };

    using M = Phase3Method;
    return {
        make("scenario-1", 10, 5, M::boreholes, 3, 2031, 0, std::nullopt, 2080),
        make("scenario-2", 10, 5, M::boreholes, 3, 2046, 0, std::nullopt, 2095),
        make("scenario-3", 10, 13, M::exploratory_mines, 4, 2057, 0, std::nullopt, 2106),
        make("scenario-4", 12, 23, M::exploratory_mines, 5, 2068, 0, std::nullopt, 2118),
        make("scenario-5", 10, 5, M::boreholes, 3, 2070, 15, "Ahaus", 2120),
        make("scenario-6", 10, 13, M::exploratory_mines, 4, std::nullopt, 20, "Gorleben", 2154),
        make("scenario-7", 12, 23, M::exploratory_mines, 5, std::nullopt, 25, "Lubmin", 2180),
    };
}

Timeline build_timeline(const ScenarioSpec& spec, TimelineOffsets offsets) {
    if (!spec.fdsp_year.has_value()) {
        throw std::invalid_argument("scenario '" + spec.name +
                                    "' has no site-selection year; supply fdsp_year to build "
                                    "a timeline");
    }
    Timeline tl;
    tl.fdsp_year = *spec.fdsp_year;
    tl.transport_start = tl.fdsp_year + offsets.transport_offset;
    tl.transport_end = tl.transport_start + 30;
    tl.disposal_start = tl.fdsp_year + offsets.disposal_offset;
    tl.disposal_end = spec.fdsa_completion_year;

    if (tl.disposal_end - tl.disposal_start < 30) {
        throw std::invalid_argument("scenario '" + spec.name +
                                    "' leaves less than 30 years for disposal operations");
    }
    if (tl.disposal_end - tl.fdsp_year < 49) {
        throw std::invalid_argument("scenario '" + spec.name +
                                    "' completes less than 49 years after site selection");
    }

    tl.milestones = {
        {tl.fdsp_year, "site selection complete"},
        {tl.transport_start, "transport to repository begins"},
        {tl.transport_end, "transport complete"},
        {tl.disposal_start, "disposal operations begin"},
        {tl.disposal_end, "disposal complete"},
    };
    std::sort(tl.milestones.begin(), tl.milestones.end());
    return tl;
}

std::vector<Finding> validate_scenario(const ScenarioSpec& spec) {
    std::vector<Finding> findings;
    const auto error = [&](std::string msg) {
        findings.push_back({Severity::error, std::move(msg)});
    };
    const auto warn = [&](std::string msg) {
        findings.push_back({Severity::warning, std::move(msg)});
    };

    if (spec.fdsp_year.has_value()) {
        int gap = spec.fdsa_completion_year - *spec.fdsp_year;
        if (gap < 49) {
            error("completion " + std::to_string(spec.fdsa_completion_year) + " is only " +
                  std::to_string(gap) + " years after site selection " +
                  std::to_string(*spec.fdsp_year) + "; at least 49 required");
        }
        int additive = spec.phase1_completion + spec.phase2_duration_years +
                       spec.phase3_duration_years + spec.risk_delay_years;
        if (*spec.fdsp_year < additive) {
            warn("site-selection year " + std::to_string(*spec.fdsp_year) +
                 " is earlier than the phase durations add up to (" +
                 std::to_string(additive) + ")");
        }
    }
    if (spec.phase2_duration_years < 0 || spec.phase3_duration_years < 0 ||
        spec.risk_delay_years < 0) {
        error("phase durations and risk delay must be non-negative");
    }
    if (spec.cis.delay_years > 0 && !spec.cis.enabled) {
        error("cis delay set but consolidated interim storage is disabled");
    }
    if (spec.cis.delay_years < 0) {
        error("cis delay must be non-negative");
    }
    if (spec.economics.inflation_rate < 0.0 || spec.economics.nsci_rate < 0.0) {
        error("escalation rates must be non-negative");
    }
    if (spec.economics.base_year < 1900 || spec.economics.base_year > 2300) {
        error("base year out of range [1900, 2300]");
    }
    const auto binary = [](int v) { return v == 0 || v == 1; };
    if (!binary(spec.flags.i) || !binary(spec.flags.j) || !binary(spec.flags.k)) {
        error("coverage flags must be 0 or 1");
    }
    return findings;
}

ShiftResult shift_costs(const CostProjection& base, const Timeline& from, const Timeline& to,
                        const std::vector<ContainerFleet>& fleets) {
    ShiftResult result;
    const int delta = to.fdsp_year - from.fdsp_year;

    std::vector<CostRecord> records;
    records.reserve(base.records.size());

    // Final-disposal activity follows the selection year; everything else
    // stays put.
    for (CostRecord r : base.records) {
        if (is_final_disposal_category(r.category)) r.year += delta;
        records.push_back(std::move(r));
    }

    // Extend the annual interim-storage series while waste waits for the new
    // transport window, repeating each site/component's final year. Only
    // years past the old transport end are added so an unchanged timeline is
    // a no-op.
    std::map<std::pair<std::string, CostComponentKind>, CostRecord> last_rows;
    for (const CostRecord& r : base.records) {
        if (r.category != CostCategory::interim_storage) continue;
        auto key = std::make_pair(r.site, r.component);
        auto it = last_rows.find(key);
        if (it == last_rows.end() || r.year > it->second.year) last_rows[key] = r;
    }
    for (const auto& [key, last] : last_rows) {
        int extend_from = std::max(last.year, from.transport_end) + 1;
        for (int year = extend_from; year <= to.transport_end; ++year) {
            CostRecord r = last;
            r.year = year;
            records.push_back(std::move(r));
        }
    }

    // Cask replacement overheads accrued while waiting for transfer.
    for (const ContainerFleet& fleet : fleets) {
        for (const auto& [year, amount] : replacement_schedule(fleet, to.transport_end)) {
            records.push_back({year, fleet.site,
                               CostCategory::containers_transport_operational_waste,
                               CostComponentKind::capital, amount});
        }
    }

    int horizon = base.horizon_end;
    for (const CostRecord& r : records) horizon = std::max(horizon, r.year);
    if (horizon > base.horizon_end) {
        result.findings.push_back(
            {Severity::warning, "horizon extended from " + std::to_string(base.horizon_end) +
                                    " to " + std::to_string(horizon)});
    }

    result.projection = make_projection(base.base_year, horizon, std::move(records));
    return result;
}

}  // namespace nwfund
