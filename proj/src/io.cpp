#include "nwfund/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nwfund/money.hpp"

namespace nwfund {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string chomp(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

int parse_int(const std::string& text, const char* what, int line) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("malformed ") + what + ": '" + text + "'", line);
    }
}

constexpr const char* kCostHeader = "year,site,category,component,amount_eur";
constexpr const char* kLedgerHeader =
    "t,year,opening_eur,growth_eur,cost_eur,closing_eur,liquid_fraction,cash_fraction,"
    "liquid_assets_eur";

}  // namespace

std::vector<CostRecord> read_cost_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || chomp(line) != kCostHeader) {
        throw ParseError(std::string("expected header '") + kCostHeader + "'", 1);
    }

    std::vector<CostRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 5) {
            throw ParseError("expected 5 fields, got " + std::to_string(fields.size()), lineno);
        }
        CostRecord r;
        r.year = parse_int(fields[0], "year", lineno);
        r.site = fields[1];
        try {
            r.category = category_from_string(fields[2]);
            r.component = component_from_string(fields[3]);
            r.amount = Money::parse(fields[4]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
        if (r.amount < Money{}) throw ParseError("negative amount", lineno);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CostRecord> load_cost_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open costs file: " + path);
    return read_cost_records_csv(in);
}

void write_cost_records_csv(std::ostream& out, const std::vector<CostRecord>& records) {
    out << kCostHeader << "\n";
    for (const CostRecord& r : records) {
        out << r.year << ',' << r.site << ',' << to_string(r.category) << ','
            << to_string(r.component) << ',' << r.amount.str() << "\n";
    }
}

namespace {

void require_keys(const ordered_json& obj, std::initializer_list<const char*> keys,
                  const char* where) {
    for (const char* key : keys) {
        if (!obj.contains(key)) {
            throw ParseError(std::string("missing key '") + key + "' in " + where);
        }
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : keys) known = known || key == k;
        if (!known) {
            throw ParseError(std::string("unknown key '") + key + "' in " + where);
        }
    }
}

int binary_flag(const ordered_json& value, const char* name) {
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1)) {
        throw ParseError(std::string("flag '") + name + "' must be 0 or 1");
    }
    return value.get<int>();
}

}  // namespace

ScenarioSpec scenario_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid scenario JSON: ") + e.what());
    }

    try {
        require_keys(j,
                     {"name", "phase1_completion", "phase2_duration_years",
                      "phase3_duration_years", "phase3_method", "risk_delay_years", "fdsp_year",
                      "cis", "fdsa_completion_year", "economics", "flags"},
                     "scenario");
        require_keys(j.at("cis"), {"enabled", "delay_years", "site", "capacity_mthm"}, "cis");
        require_keys(j.at("economics"), {"inflation_rate", "nsci_rate", "base_year"},
                     "economics");
        require_keys(j.at("flags"), {"i", "j", "k"}, "flags");

        ScenarioSpec s;
        s.name = j.at("name").get<std::string>();
        s.phase1_completion = j.at("phase1_completion").get<int>();
        s.phase2_duration_years = j.at("phase2_duration_years").get<int>();
        s.phase3_duration_years = j.at("phase3_duration_years").get<int>();
        s.phase3_method = phase3_method_from_string(j.at("phase3_method").get<std::string>());
        s.risk_delay_years = j.at("risk_delay_years").get<int>();
        if (!j.at("fdsp_year").is_null()) s.fdsp_year = j.at("fdsp_year").get<int>();

        const auto& cis = j.at("cis");
        s.cis.enabled = cis.at("enabled").get<bool>();
        s.cis.delay_years = cis.at("delay_years").get<int>();
        if (!cis.at("site").is_null()) s.cis.site = cis.at("site").get<std::string>();
        s.cis.capacity_mthm = cis.at("capacity_mthm").get<double>();

        s.fdsa_completion_year = j.at("fdsa_completion_year").get<int>();

        const auto& eco = j.at("economics");
        s.economics.inflation_rate = eco.at("inflation_rate").get<double>();
        s.economics.nsci_rate = eco.at("nsci_rate").get<double>();
        s.economics.base_year = eco.at("base_year").get<int>();

        s.flags.i = binary_flag(j.at("flags").at("i"), "i");
        s.flags.j = binary_flag(j.at("flags").at("j"), "j");
        s.flags.k = binary_flag(j.at("flags").at("k"), "k");
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid scenario JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ScenarioSpec load_scenario_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

std::string scenario_to_json_text(const ScenarioSpec& spec) {
    ordered_json j;
    j["name"] = spec.name;
    j["phase1_completion"] = spec.phase1_completion;
    j["phase2_duration_years"] = spec.phase2_duration_years;
    j["phase3_duration_years"] = spec.phase3_duration_years;
    j["phase3_method"] = std::string(to_string(spec.phase3_method));
    j["risk_delay_years"] = spec.risk_delay_years;
    if (spec.fdsp_year.has_value()) {
        j["fdsp_year"] = *spec.fdsp_year;
    } else {
        j["fdsp_year"] = nullptr;
    }
    j["cis"]["enabled"] = spec.cis.enabled;
    j["cis"]["delay_years"] = spec.cis.delay_years;
    if (spec.cis.site.has_value()) {
        j["cis"]["site"] = *spec.cis.site;
    } else {
        j["cis"]["site"] = nullptr;
    }
    j["cis"]["capacity_mthm"] = spec.cis.capacity_mthm;
    j["fdsa_completion_year"] = spec.fdsa_completion_year;
    j["economics"]["inflation_rate"] = spec.economics.inflation_rate;
    j["economics"]["nsci_rate"] = spec.economics.nsci_rate;
    j["economics"]["base_year"] = spec.economics.base_year;
    j["flags"]["i"] = spec.flags.i;
    j["flags"]["j"] = spec.flags.j;
    j["flags"]["k"] = spec.flags.k;
    return j.dump(2) + "\n";
}

void write_ledger_csv(std::ostream& out, const std::vector<LedgerRow>& rows) {
    out << kLedgerHeader << "\n";
    for (const LedgerRow& r : rows) {
        out << r.t << ',' << r.year << ',' << format_double(r.opening_balance) << ','
            << format_double(r.growth_amount) << ',' << format_double(r.cost) << ','
            << format_double(r.closing_balance) << ',' << format_double(r.liquid_fraction)
            << ',' << format_double(r.cash_fraction) << ',' << format_double(r.liquid_assets)
            << "\n";
    }
}

std::vector<LedgerRow> read_ledger_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || chomp(line) != kLedgerHeader) {
        throw ParseError(std::string("expected header '") + kLedgerHeader + "'", 1);
    }
    std::vector<LedgerRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = chomp(line);
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 9) {
            throw ParseError("expected 9 fields, got " + std::to_string(fields.size()), lineno);
        }
        try {
            LedgerRow r;
            r.t = parse_int(fields[0], "t", lineno);
            r.year = parse_int(fields[1], "year", lineno);
            r.opening_balance = parse_double(fields[2]);
            r.growth_amount = parse_double(fields[3]);
            r.cost = parse_double(fields[4]);
            r.closing_balance = parse_double(fields[5]);
            r.liquid_fraction = parse_double(fields[6]);
            r.cash_fraction = parse_double(fields[7]);
            r.liquid_assets = parse_double(fields[8]);
            rows.push_back(r);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return rows;
}

}  // namespace nwfund
