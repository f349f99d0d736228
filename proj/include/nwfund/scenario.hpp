#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nwfund/costmodel.hpp"

namespace nwfund {

enum class Phase3Method { boreholes, exploratory_mines };

std::string_view to_string(Phase3Method m);
Phase3Method phase3_method_from_string(std::string_view s);

struct CisOptions {
    bool enabled = false;
    int delay_years = 0;
    std::optional<std::string> site;
    double capacity_mthm = 0.0;
};

// One disposal-pathway scenario: site-selection phase durations, the
// resulting (or assumed) selection year, completion of the disposal
// activities, and the economic assumptions used to escalate its costs.
struct ScenarioSpec {
    std::string name;
    int phase1_completion = 2028;
    int phase2_duration_years = 0;
    int phase3_duration_years = 0;
    Phase3Method phase3_method = Phase3Method::boreholes;
    int risk_delay_years = 0;
    std::optional<int> fdsp_year;     // site-selection year; unknown in late scenarios
    CisOptions cis;
    int fdsa_completion_year = 0;     // end of transport + disposal operations
    EscalationParams economics;
    CoverageFlags flags;
};

// Derived milestone years. Transport and disposal each span at least
// 30 years; disposal ends at least 49 years after site selection.
struct Timeline {
    int fdsp_year = 0;
    int transport_start = 0;
    int transport_end = 0;
    int disposal_start = 0;
    int disposal_end = 0;
    std::vector<std::pair<int, std::string>> milestones;
};

// Years from site selection to the start of transport / disposal. The
// defaults reproduce the legally planned sequence (selection 2031,
// transport from 2045, disposal from 2050).
struct TimelineOffsets {
    int transport_offset = 14;
    int disposal_offset = 19;
};

enum class Severity { warning, error };

struct Finding {
    Severity severity = Severity::warning;
    std::string message;
};

bool has_errors(const std::vector<Finding>& findings);

// The seven built-in scenarios: the legally mandated 2031 selection, the
// three announced delay variants, and three consolidated-interim-storage
// variants reaching into the 22nd century.
std::vector<ScenarioSpec> builtin_scenarios();

// Throws std::invalid_argument when fdsp_year is unknown (the caller must
// supply one) or when the resulting milestones violate the span floors.
Timeline build_timeline(const ScenarioSpec& spec, TimelineOffsets offsets = {});

// Hard error when completion is less than 49 years after site selection;
// advisory warning when the published selection year is earlier than the
// sum of the phase durations (published rows are not additive).
std::vector<Finding> validate_scenario(const ScenarioSpec& spec);

struct ShiftResult {
    CostProjection projection;
    std::vector<Finding> findings;
};

// Re-times a base projection onto a delayed timeline: final-disposal
// records shift by the selection-year delta, interim-storage annual
// records are extended (last year repeated) through the new transport end,
// and cask replacement events are inserted for the given fleets. The
// horizon is extended automatically when records land beyond it, with a
// finding reporting the extension.
ShiftResult shift_costs(const CostProjection& base, const Timeline& from,
                        const Timeline& to, const std::vector<ContainerFleet>& fleets);

}  // namespace nwfund
