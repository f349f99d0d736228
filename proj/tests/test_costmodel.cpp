#include "doctest.h"

#include <stdexcept>

#include "checks.hpp"

#include <cmath>
#include <random>

#include "nwfund/costmodel.hpp"

using namespace nwfund;

namespace {

EscalationParams zero_rates() {
    EscalationParams esc;
    esc.inflation_rate = 0.0;
    esc.nsci_rate = 0.0;
    esc.base_year = 2024;
    return esc;
}

}  // namespace

TEST_CASE("unit storage cost reproduces the published offsite pool curve") {
    // 176 USD + 370,000 USD/t at 10,500 t, converted at 0.93.
    double cost = unit_storage_cost(offsite_pool_storage_params(), 10'500.0);
    CHECK(std::abs(cost - 196.78) <= 0.01);
}

TEST_CASE("unit storage cost with zero variable term is flat") {
    StorageCostParams p;
    p.fixed_unit_cost = 164.0;
    p.variable_term = 0.0;
    CHECK(unit_storage_cost(p, 1.0) == 164.0);
    CHECK(unit_storage_cost(p, 99'999.0) == 164.0);
}

TEST_CASE("unit storage cost hand arithmetic") {
    StorageCostParams p;
    p.fixed_unit_cost = 100.0;
    p.variable_term = 1'000.0;
    CHECK(unit_storage_cost(p, 50.0) == doctest::Approx(120.0));
}

TEST_CASE("unit storage cost rejects non-positive capacity") {
    CHECK_THROWS_AS(unit_storage_cost(offsite_pool_storage_params(), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(unit_storage_cost(offsite_pool_storage_params(), -1.0),
                    std::invalid_argument);
}

TEST_CASE("unit storage cost is strictly decreasing in capacity when b > 0") {
    StorageCostParams p;
    p.fixed_unit_cost = 10.0;
    p.variable_term = 500.0;
    double prev = unit_storage_cost(p, 1.0);
    for (double cap : {2.0, 5.0, 17.0, 120.0, 9'000.0}) {
        double cur = unit_storage_cost(p, cap);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("cis total cost reproduces the published total") {
    Money total = cis_total_cost(offsite_pool_storage_params(), 10'500.0);
    CHECK(std::abs(total.eur() - 2.066e9) <= 1e6);
}

TEST_CASE("cis total cost trivial and hand cases") {
    StorageCostParams zero;
    zero.fixed_unit_cost = 0.0;
    zero.variable_term = 0.0;
    CHECK(cis_total_cost(zero, 123.0) == Money{});

    StorageCostParams unit;
    unit.fixed_unit_cost = 1.0;
    unit.variable_term = 0.0;
    CHECK(cis_total_cost(unit, 2.0) == Money::parse("2000.00"));

    CHECK_THROWS_AS(cis_total_cost(unit, 0.0), std::invalid_argument);
}

TEST_CASE("escalation basics") {
    EscalationParams esc;  // defaults 1.72% / 1.97%
    CHECK(escalate(1'000'000.0, 0, esc) == 1'000'000.0);
    CHECK(escalate(1'000'000.0, 1, esc) == doctest::Approx(1'037'238.84).epsilon(1e-10));

    EscalationParams flat = zero_rates();
    CHECK(escalate(1.0, 57, flat) == 1.0);

    CHECK_THROWS_AS(escalate(1.0, -1, esc), std::invalid_argument);
}

TEST_CASE("escalation is multiplicative over time splits") {
    EscalationParams esc;
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> years(0, 60);
    std::uniform_real_distribution<double> amounts(0.01, 1e9);
    for (int trial = 0; trial < 100; ++trial) {
        int m = years(rng);
        int n = years(rng);
        double x = amounts(rng);
        double joint = escalate(x, m + n, esc);
        double split = escalate(escalate(x, m, esc), n, esc);
        CHECK(joint == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("additive escalation combines rates linearly") {
    EscalationParams esc;
    esc.combine = EscalationCombine::additive;
    CHECK(escalate(100.0, 1, esc) == doctest::Approx(100.0 * 1.0369));
}

TEST_CASE("both published inflation presets ship") {
    EscalationParams standard;
    CHECK(standard.inflation_rate == 0.0172);
    EscalationParams low = low_inflation_economics();
    CHECK(low.inflation_rate == 0.0160);
    CHECK(low.nsci_rate == standard.nsci_rate);
}

TEST_CASE("replacement schedule matches the published cask cycle") {
    ContainerFleet fleet;
    fleet.site = "Biblis";
    fleet.container_count = 1;
    fleet.load_year = 1992;
    auto events = replacement_schedule(fleet, 2118);
    REQUIRE(events.size() == 3);
    CHECK(events[0].first == 2032);
    CHECK(events[1].first == 2072);
    CHECK(events[2].first == 2112);
}

TEST_CASE("replacement schedule edge cases") {
    ContainerFleet fleet;
    fleet.load_year = 2000;

    SUBCASE("no interval elapses") {
        CHECK(replacement_schedule(fleet, 2039).empty());
    }
    SUBCASE("event on the transfer year is excluded") {
        CHECK(replacement_schedule(fleet, 2040).empty());
        CHECK(replacement_schedule(fleet, 2041).size() == 1);
    }
    SUBCASE("transfer before load rejected") {
        CHECK_THROWS_AS(replacement_schedule(fleet, 1999), std::invalid_argument);
    }
    SUBCASE("event cost is count times unit cost") {
        fleet.container_count = 50;
        auto events = replacement_schedule(fleet, 2050);
        REQUIRE(events.size() == 1);
        CHECK(events[0].second == Money::parse("100000000.00"));
    }
}

TEST_CASE("replacement schedule is strictly increasing and below the transfer year") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> loads(1980, 2030);
    std::uniform_int_distribution<int> intervals(1, 45);
    std::uniform_int_distribution<int> spans(0, 300);
    for (int trial = 0; trial < 100; ++trial) {
        ContainerFleet fleet;
        fleet.load_year = loads(rng);
        fleet.replacement_interval = intervals(rng);
        int transfer = fleet.load_year + spans(rng);
        auto events = replacement_schedule(fleet, transfer);
        int prev = fleet.load_year;
        for (const auto& [year, cost] : events) {
            CHECK(year > prev);
            CHECK(year < transfer);
            prev = year;
        }
    }
}

TEST_CASE("allocation splits equally with the last year absorbing the residue") {
    auto records = allocate_over_period(Money::parse("2066000000.00"), 2040, 2059);
    REQUIRE(records.size() == 20);
    for (const auto& r : records) {
        CHECK(r.amount == Money::parse("103300000.00"));
    }
    CHECK(records.front().year == 2040);
    CHECK(records.back().year == 2059);
}

TEST_CASE("allocation trivial cases") {
    auto one = allocate_over_period(Money::parse("100"), 2030, 2030);
    REQUIRE(one.size() == 1);
    CHECK(one[0].amount == Money::parse("100.00"));

    auto zero = allocate_over_period(Money{}, 2030, 2034);
    REQUIRE(zero.size() == 5);
    for (const auto& r : zero) CHECK(r.amount == Money{});

    CHECK_THROWS_AS(allocate_over_period(Money::parse("1"), 2031, 2030),
                    std::invalid_argument);
}

TEST_CASE("allocation sums exactly to the input total") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> cents(0, 4'000'000'000'000LL);
    std::uniform_int_distribution<int> spans(0, 80);
    for (int trial = 0; trial < 200; ++trial) {
        Money total = Money::from_cents(cents(rng));
        int start = 2030;
        int end = start + spans(rng);
        auto records = allocate_over_period(total, start, end);
        Money sum;
        for (const auto& r : records) sum += r.amount;
        CHECK(sum == total);
    }
}

TEST_CASE("aggregation basics") {
    EscalationParams esc = zero_rates();
    std::vector<CostRecord> records = {
        {2025, "A", CostCategory::haw_final_disposal, CostComponentKind::disposal,
         Money::parse("10")},
        {2025, "B", CostCategory::interim_storage, CostComponentKind::operation,
         Money::parse("10")},
        {2026, "A", CostCategory::decommissioning, CostComponentKind::demolition,
         Money::parse("7")},
    };
    CostProjection projection = make_projection(2024, 2027, records);

    SUBCASE("all flags off yields zeros") {
        auto costs = aggregate_annual_costs(projection, {0, 0, 0}, esc);
        REQUIRE(costs.size() == 3);
        for (double c : costs) CHECK(c == 0.0);
    }
    SUBCASE("fund preset excludes decommissioning") {
        auto costs = aggregate_annual_costs(projection, kKenfoFlags, esc);
        REQUIRE(costs.size() == 3);
        CHECK(costs[0] == doctest::Approx(20.0));
        CHECK(costs[1] == 0.0);
        CHECK(costs[2] == 0.0);
    }
    SUBCASE("k flag admits decommissioning") {
        auto costs = aggregate_annual_costs(projection, {1, 1, 1}, esc);
        CHECK(costs[1] == doctest::Approx(7.0));
    }
}

TEST_CASE("aggregation escalates each record to its own year") {
    EscalationParams esc;  // 1.72% / 1.97%
    std::vector<CostRecord> records = {
        {2026, "A", CostCategory::haw_final_disposal, CostComponentKind::capital,
         Money::parse("1000000")},
    };
    CostProjection projection = make_projection(2024, 2026, records);
    auto costs = aggregate_annual_costs(projection, kKenfoFlags, esc);
    REQUIRE(costs.size() == 2);
    CHECK(costs[0] == 0.0);
    double factor = 1.0172 * 1.0197;
    CHECK(costs[1] == doctest::Approx(1e6 * factor * factor).epsilon(1e-12));
}

TEST_CASE("aggregation rejects invalid category-component pairs") {
    std::vector<CostRecord> records = {
        {2025, "A", CostCategory::interim_storage, CostComponentKind::disposal,
         Money::parse("1")},
    };
    CostProjection projection = make_projection(2024, 2026, records);
    CHECK_THROWS_CONTAINS(aggregate_annual_costs(projection, kKenfoFlags, zero_rates()),
                          std::invalid_argument, "interim_storage");
}

TEST_CASE("aggregation rejects records dated at the base year") {
    std::vector<CostRecord> records = {
        {2024, "A", CostCategory::interim_storage, CostComponentKind::operation,
         Money::parse("1")},
    };
    CostProjection projection = make_projection(2024, 2026, records);
    CHECK_THROWS_AS(aggregate_annual_costs(projection, kKenfoFlags, zero_rates()),
                    std::invalid_argument);
}

TEST_CASE("aggregation is linear in records") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> year(2025, 2060);
    std::uniform_int_distribution<std::int64_t> cents(0, 1'000'000'00);
    std::uniform_int_distribution<int> pick(0, 2);
    EscalationParams esc;

    const auto random_records = [&](int n) {
        std::vector<CostRecord> records;
        for (int i = 0; i < n; ++i) {
            CostCategory cat = pick(rng) == 0   ? CostCategory::interim_storage
                               : pick(rng) == 1 ? CostCategory::haw_final_disposal
                                                : CostCategory::konrad_repository;
            records.push_back({year(rng), "S", cat, CostComponentKind::operation,
                               Money::from_cents(cents(rng))});
        }
        return records;
    };

    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_records(8);
        auto b = random_records(5);
        auto both = a;
        both.insert(both.end(), b.begin(), b.end());

        auto agg_a = aggregate_annual_costs(make_projection(2024, 2060, a), kKenfoFlags, esc);
        auto agg_b = aggregate_annual_costs(make_projection(2024, 2060, b), kKenfoFlags, esc);
        auto agg_both =
            aggregate_annual_costs(make_projection(2024, 2060, both), kKenfoFlags, esc);

        REQUIRE(agg_a.size() == agg_both.size());
        for (std::size_t i = 0; i < agg_both.size(); ++i) {
            CHECK(agg_both[i] == doctest::Approx(agg_a[i] + agg_b[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("projection validation names the offending record") {
    std::vector<CostRecord> bad = {
        {2023, "A", CostCategory::interim_storage, CostComponentKind::operation,
         Money::parse("1")},
    };
    CHECK_THROWS_CONTAINS(make_projection(2024, 2030, bad), std::invalid_argument, "2023");

    std::vector<CostRecord> beyond = {
        {2031, "A", CostCategory::interim_storage, CostComponentKind::operation,
         Money::parse("1")},
    };
    CHECK_THROWS_AS(make_projection(2024, 2030, beyond), std::invalid_argument);
}
