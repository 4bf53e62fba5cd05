// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "isac/harness.hpp"

#include <sstream>

using namespace isac;

namespace {
std::string scen(const std::string& name) {
    return std::string(ISAC_SCENARIO_DIR) + "/" + name;
}

ScenarioConfig small_scenario() {
    ScenarioConfig c = load_scenario(scen("scenario_I.cfg"));
    // shrink the menus so table builds stay fast in unit tests
    c.grid_tx = BeamGrid::from_direction_range(60, 120, 10, {13, 26}, {0.2, 1.0});
    c.grid_rx = BeamGrid::from_direction_range(60, 120, 10, {6, 13}, {0.1});
    c.realizations = 3;
    return c;
}
} // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("bundled scenario files carry the published parameters") {
    const ScenarioConfig s1 = load_scenario(scen("scenario_I.cfg"));
    CHECK(s1.n_users == 1);
    CHECK(s1.n_targets == 1);
    CHECK(s1.user.snr_min == 80.0);
    CHECK(s1.target.sinr_min == 2.0);
    CHECK(s1.horizon_s == 1);
    CHECK(s1.grid_tx.n_dir() == 19);
    CHECK(s1.grid_tx.size() == 570);
    CHECK(s1.grid_rx.size() == 57);

    const ScenarioConfig s7 = load_scenario(scen("scenario_VII.cfg"));
    CHECK(s7.n_users == 6);
    CHECK(s7.n_targets == 4);
    CHECK(s7.user.slots_com == 3);
    CHECK(s7.target.slots_sen == 3);
    CHECK(s7.horizon_s == 30);
    CHECK(s7.eta2_auto);
}

TEST_CASE("schema errors name the missing field") {
    json j = {{"schema", "isac-scenario-v1"}, {"name", "x"}};
    try {
        scenario_from_json(j);
        FAIL("expected a schema error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("array") != std::string::npos);
    }
    // nested field
    json full = json::parse(R"({
      "schema": "isac-scenario-v1",
      "array": {"n_tx": 4, "n_rx": 4, "fc_ghz": 41.0},
      "codebook": {"tx": {"directions_deg": [90], "beamwidths_deg": [25],
                          "powers_w": [0.5]},
                   "rx": {"directions_deg": [90], "beamwidths_deg": [25],
                          "powers_w": [0.1]}},
      "users": {"count": 1, "beta_deg": 90, "r_m": 50, "slots": 1},
      "targets": {"count": 1, "aod_deg": 90, "rc": 0.001, "sinr_min": 2, "slots": 1},
      "uncertainty": {},
      "objective": {"eta1": 1, "eta2": 1},
      "horizon": {"slots": 1}
    })");
    try {
        scenario_from_json(full);
        FAIL("expected a schema error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("snr_min") != std::string::npos);
    }
}

TEST_CASE("degenerate scenario values are rejected at load time") {
    json base = json::parse(R"({
      "schema": "isac-scenario-v1",
      "array": {"n_tx": 4, "n_rx": 4, "fc_ghz": 41.0},
      "codebook": {"tx": {"directions_deg": [90], "beamwidths_deg": [25], "powers_w": [0.5]},
                   "rx": {"directions_deg": [90], "beamwidths_deg": [25], "powers_w": [0.1]}},
      "users": {"count": 1, "beta_deg": 90, "r_m": 50, "snr_min": 10, "slots": 1},
      "targets": {"count": 1, "aod_deg": 90, "rc": 0.001, "sinr_min": 2, "slots": 1},
      "uncertainty": {},
      "objective": {"eta1": 1, "eta2": 1},
      "horizon": {"slots": 1}
    })");
    CHECK_NOTHROW(scenario_from_json(base));
    json bad = base;
    bad["users"]["count"] = -1;
    CHECK_THROWS_AS(scenario_from_json(bad), std::invalid_argument);
    bad = base;
    bad["horizon"]["slots"] = 0;
    CHECK_THROWS_AS(scenario_from_json(bad), std::invalid_argument);
    bad = base;
    bad["targets"]["sinr_min"] = -3;
    CHECK_THROWS_AS(scenario_from_json(bad), std::invalid_argument);
}

TEST_CASE("auto eta2 resolves just above the priority threshold") {
    ScenarioConfig c = load_scenario(scen("scenario_V.cfg"));
    REQUIRE(c.eta2_auto);
    const double thr = priority_eta2_threshold(c.eta1, c.horizon_s, 1.0, 0.1, c.delta0);
    CHECK(resolved_eta2(c) == doctest::Approx(1.01 * thr).epsilon(1e-12));
}

TEST_CASE("identical seeds reproduce identical records byte for byte") {
    const ScenarioConfig c = small_scenario();
    const auto run1 = run_scenario(c, {"opt", "tlb"});
    const auto run2 = run_scenario(c, {"opt", "tlb"});
    std::ostringstream a, b;
    emit_results_csv(run1, a);
    emit_results_csv(run2, b);
    CHECK(a.str() == b.str());
    CHECK(run1.size() == 2 * 3);
}

TEST_CASE("realized instances honor the configured ranges") {
    const ScenarioConfig c = load_scenario(scen("scenario_VI.cfg"));
    for (int r = 0; r < 5; ++r) {
        const Instance inst = realize(c, r);
        for (const UserSpec& u : inst.users) {
            CHECK(u.beta_deg >= 45.0);
            CHECK(u.beta_deg <= 135.0);
            CHECK(u.r_m >= 40.0);
            CHECK(u.r_m <= 70.0);
        }
        for (const TargetSpec& t : inst.targets) {
            CHECK(t.aod_bar_deg >= 50.0);
            CHECK(t.aod_bar_deg <= 130.0);
            CHECK(std::abs(t.rc_bar) >= 4e-4);
            CHECK(std::abs(t.rc_bar) <= 12e-4);
        }
    }
}

TEST_CASE("emission: header-only CSV, JSON round trip, total consistency") {
    std::ostringstream empty_csv;
    emit_results_csv({}, empty_csv);
    CHECK(empty_csv.str() ==
          "scheme,realization,feasible,fallback,energy_mJ,time_ms,objective,active_slots\n");

    const ScenarioConfig c = small_scenario();
    const auto records = run_scenario(c, {"opt"});
    std::ostringstream js;
    emit_results_json(records, js);
    const json parsed = json::parse(js.str());
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        const ResultRecord back = record_from_json(parsed[i]);
        CHECK(back.scheme == records[i].scheme);
        CHECK(back.energy_mj == records[i].energy_mj);
        CHECK(back.time_ms == records[i].time_ms);
        CHECK(back.active_slots == records[i].active_slots);
        CHECK(back.slots.size() == records[i].slots.size());
        // per-slot energies reproduce the record totals
        if (back.feasible) {
            double sum_w = 0.0;
            for (const SlotDetail& d : back.slots) sum_w += d.energy_w;
            CHECK(std::abs(sum_w * c.slot_dur_ms - back.energy_mj) <=
                  1e-9 * std::max(1.0, back.energy_mj));
        }
    }
}

TEST_CASE("allocation serialization round trip") {
    const ScenarioConfig c = small_scenario();
    const Instance inst = realize(c, 0);
    const Allocation alloc = solve(inst, build_tables(inst));
    REQUIRE(alloc.feasible());
    const Allocation back = allocation_from_json(allocation_to_json(alloc));
    CHECK(back.status == alloc.status);
    CHECK(back.active_slots == alloc.active_slots);
    CHECK(back.objective == alloc.objective);
    REQUIRE(back.slots.size() == alloc.slots.size());
    for (size_t s = 0; s < back.slots.size(); ++s) {
        CHECK(back.slots[s].tx_flat == alloc.slots[s].tx_flat);
        CHECK(back.slots[s].rx_flat == alloc.slots[s].rx_flat);
    }
    // a deserialized allocation verifies exactly like the original
    CHECK(check_allocation(inst, back).all_pass());
}

TEST_CASE("per-realization failures are recorded, not fatal") {
    ScenarioConfig c = small_scenario();
    c.array.coupling_tx = 1.5; // invalid; realize() rejects it every realization
    const auto records = run_scenario(c, {"opt", "tlb"});
    REQUIRE(records.size() == 2 * 3);
    for (const ResultRecord& r : records) {
        CHECK_FALSE(r.feasible);
        CHECK(r.error.find("coupling") != std::string::npos);
    }
}

TEST_CASE("ELB allocations verify against the relaxed horizon") {
    // tight horizon and a pair expensive to serve jointly: the energy bound
    // spills past S, and run_scenario must still certify it
    ScenarioConfig c = small_scenario();
    c.realizations = 1;
    c.user.snr_min = 15000.0; // forces max power on the shared beam
    c.target.aod_deg = {120.0, 120.0};
    c.target.sinr_min = 200.0;
    c.horizon_s = 1;
    const Instance inst = realize(c, 0);
    const ConfigTables tb = build_tables(inst);
    const Allocation elb = solve_baseline(BaselineKind::ELB, inst, tb);
    if (elb.feasible() && elb.active_slots > c.horizon_s) {
        const auto records = run_scenario(c, {"elb"}); // must not throw
        CHECK(records.size() == 1);
        CHECK(records[0].active_slots == elb.active_slots);
    }
}

TEST_CASE("sweep infeasibility agrees with the enumeration oracle") {
    ScenarioConfig c = small_scenario();
    c.target.aod_deg = {125.0, 125.0};
    const std::vector<double> ups{100, 3000, 9000, 20000};
    const std::vector<double> lams{10, 800, 4000};
    const SweepResult res = sweep_grid(c, ups, lams);
    const Instance base = realize(c, 0);
    int spot = 0;
    for (size_t i = 0; i < ups.size() && spot < 10; ++i)
        for (size_t j = 0; j < lams.size() && spot < 10; ++j) {
            Instance inst = base;
            for (UserSpec& u : inst.users) u.snr_min = ups[i];
            for (TargetSpec& t : inst.targets) t.sinr_min = lams[j];
            const EnumerationResult ref = enumerate_optimum(inst);
            const bool oracle_feasible = ref.status == SolveStatus::Optimal;
            CHECK(static_cast<bool>(res.feasible(static_cast<int>(i), static_cast<int>(j))) ==
                  oracle_feasible);
            ++spot;
        }
    CHECK(spot == 10);
}

TEST_CASE("threshold sweep: easy corner feasible; wider horizon never loses cells") {
    ScenarioConfig c = small_scenario();
    c.target.aod_deg = {120.0, 120.0};
    const std::vector<double> ups{50, 5000, 20000};
    const std::vector<double> lams{5, 500, 5000};
    ScenarioConfig c1 = c;
    c1.horizon_s = 1;
    ScenarioConfig c2 = c;
    c2.horizon_s = 2;
    const SweepResult s1 = sweep_grid(c1, ups, lams);
    const SweepResult s2 = sweep_grid(c2, ups, lams);
    CHECK(s1.feasible(0, 0) == 1); // low thresholds, aligned enough
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (s1.feasible(i, j)) CHECK(s2.feasible(i, j)); // containment
    CHECK(s2.feasible_count() >= s1.feasible_count());
    std::ostringstream os;
    sweep_to_csv(s2, os);
    CHECK(os.str().find("energy_mJ") != std::string::npos); // units noted in the header
    CHECK(os.str().find("snr_min\\sinr_min") != std::string::npos);
}

TEST_SUITE_END();
