// SPDX-License-Identifier: Apache-2.0
//
// isac-rrm command line: exact solves, threshold sweeps, independent
// verification and the bundled experiment drivers.
//
// Exit codes: 0 success, 2 infeasible instance, 1 error.

#include "isac/isac.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace isac;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo * std::pow(hi / lo, i / double(n - 1));
    return g;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(const std::string& config_path, std::uint64_t seed_override, bool seed_given,
              int realizations_override, const std::string& schemes_csv, const std::string& out,
              const std::string& format, const std::string& alloc_out, int alloc_realization,
              const std::string& alloc_scheme) {
    ScenarioConfig cfg = load_scenario(config_path);
    if (seed_given) cfg.seed = seed_override;
    if (realizations_override > 0) cfg.realizations = realizations_override;
    if (cfg.horizon_s < std::max(cfg.n_users * cfg.user.slots_com,
                                 cfg.n_targets * cfg.target.slots_sen))
        std::cerr << "warning: horizon below the maximal-pairing lower bound; "
                     "the instance cannot be scheduled\n";
    const std::vector<std::string> schemes = split(schemes_csv, ',');
    const auto records = run_scenario(cfg, schemes);

    // summary per scheme
    std::cout << "scenario " << cfg.name << ", " << cfg.realizations << " realization(s)\n";
    for (const std::string& s : schemes) {
        int feas = 0, n = 0;
        double e = 0, t = 0;
        for (const ResultRecord& r : records) {
            if (r.scheme != s) continue;
            ++n;
            if (!r.feasible) continue;
            ++feas;
            e += r.energy_mj;
            t += r.time_ms;
        }
        std::cout << "  " << s << ": feasible " << feas << "/" << n;
        if (feas)
            std::cout << ", mean energy " << e / feas << " mJ, mean time " << t / feas << " ms";
        std::cout << "\n";
    }

    if (!out.empty()) {
        if (format == "json") {
            std::ostringstream os;
            emit_results_json(records, os);
            write_file(out, os.str());
        } else {
            std::ostringstream os, slots;
            emit_results_csv(records, os);
            emit_slot_csv(records, slots);
            write_file(out, os.str());
            const fs::path p(out);
            fs::path companion = p.parent_path() / (p.stem().string() + "_slots.csv");
            write_file(companion.string(), slots.str());
        }
        std::cout << "results written to " << out << "\n";
    }

    if (!alloc_out.empty()) {
        const Instance inst = realize(cfg, alloc_realization);
        const ConfigTables tb = build_tables(inst);
        const Allocation alloc = run_scheme(alloc_scheme, inst, tb);
        json j = {{"scenario", cfg.name},
                  {"seed", cfg.seed},
                  {"realization", alloc_realization},
                  {"scheme", alloc_scheme},
                  {"allocation", allocation_to_json(alloc)}};
        write_file(alloc_out, j.dump(2) + "\n");
        std::cout << "allocation written to " << alloc_out << "\n";
    }

    int feasible_first = 0;
    for (const ResultRecord& r : records)
        if (r.scheme == schemes.front() && r.feasible) ++feasible_first;
    return feasible_first > 0 ? 0 : 2;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const std::string& config_path, const std::string& grid_spec,
              const std::string& out) {
    ScenarioConfig cfg = load_scenario(config_path);
    // grid syntax: ups=lo:hi:n,lams=lo:hi:n[,log]
    std::vector<double> ups{10, 50, 100, 150}, lams{1, 5, 10, 15};
    bool log_spaced = false;
    for (const std::string& part : split(grid_spec, ',')) {
        if (part == "log") log_spaced = true;
    }
    for (const std::string& part : split(grid_spec, ',')) {
        if (part == "log") continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad --grid spec: " + part);
        const auto nums = split(part.substr(eq + 1), ':');
        if (nums.size() != 3) throw std::runtime_error("--grid ranges use lo:hi:n");
        const double lo = std::stod(nums[0]), hi = std::stod(nums[1]);
        const int n = std::stoi(nums[2]);
        auto& dst = part.substr(0, eq) == "ups" ? ups : lams;
        dst = log_spaced ? log_grid(lo, hi, n) : linear_grid(lo, hi, n);
    }
    const SweepResult res = sweep_grid(cfg, ups, lams);
    std::cout << "feasible cells: " << res.feasible_count() << "/"
              << ups.size() * lams.size() << "\n";
    std::ostringstream os;
    sweep_to_csv(res, os);
    if (!out.empty()) {
        write_file(out, os.str());
        std::cout << "heatmap written to " << out << "\n";
    } else {
        std::cout << os.str();
    }
    return res.feasible_count() > 0 ? 0 : 2;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& config_path, const std::string& alloc_path, long mc_samples,
               const std::string& out) {
    ScenarioConfig cfg = load_scenario(config_path);
    std::ifstream in(alloc_path);
    if (!in) throw std::runtime_error("cannot open allocation file: " + alloc_path);
    json j;
    in >> j;
    cfg.seed = j.value("seed", cfg.seed);
    const int realization = j.value("realization", 0);
    const Allocation alloc = allocation_from_json(j.at("allocation"));
    Instance inst = realize(cfg, realization);
    if (j.value("scheme", std::string()) == "elb") inst.horizon_s = inst.s_tilde();
    if (!alloc.feasible()) {
        std::cout << "allocation is marked infeasible; nothing to verify\n";
        return 2;
    }
    VerificationReport rep = check_allocation(inst, alloc);
    RngStream rng(cfg.seed ^ 0x5eedULL);
    const McResult mc = monte_carlo_robustness(inst, alloc, mc_samples, rng);
    rep.mc_samples = mc.samples;
    rep.mc_violations = mc.violations_linear;
    for (const ConstraintRecord& r : rep.records) {
        const char* st = r.status == ConstraintRecord::Status::Pass
                             ? "pass"
                             : (r.status == ConstraintRecord::Status::Fail ? "FAIL" : "n/a ");
        std::printf("  %-5s %-5s worst slack %.3e\n", r.id.c_str(), st, r.worst_slack);
    }
    std::printf("  monte-carlo: %ld/%ld linearized violations, %ld nonlinear\n",
                mc.violations_linear, mc.samples, mc.violations_nonlinear);
    if (!out.empty()) write_file(out, report_to_json(rep).dump(2) + "\n");
    const bool ok = rep.all_pass() && mc.violations_linear == 0;
    std::cout << (ok ? "verification PASSED" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// codebook dump

int cmd_codebook_dump(const std::string& config_path, const std::string& out) {
    const ScenarioConfig cfg = load_scenario(config_path);
    ArrayConfig arr = cfg.array;
    arr.wavelength_m = kSpeedOfLight / (cfg.fc_ghz * 1e9);
    const Codebook tx = build_codebook(arr, Side::Tx, cfg.grid_tx);
    const Codebook rx = build_codebook(arr, Side::Rx, cfg.grid_rx);
    std::ostringstream os;
    dump_codebook(tx, os);
    dump_codebook(rx, os);
    if (!out.empty()) {
        write_file(out, os.str());
        std::cout << "codebooks written to " << out << " (" << tx.size() << " tx + " << rx.size()
                  << " rx codewords)\n";
    } else {
        std::cout << os.str();
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce: built-in experiment presets (desk scale unless --full)

ScenarioConfig base_config(double dir_step = 5.0) {
    ScenarioConfig c;
    c.fc_ghz = 41.0;
    c.array = ArrayConfig::from_carrier_ghz(41.0);
    c.grid_tx = BeamGrid::from_direction_range(
        45, 135, dir_step, {13, 26, 60}, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});
    c.grid_rx = BeamGrid::from_direction_range(45, 135, dir_step, {6, 13, 26}, {0.1});
    c.user = {{90, 90}, {50, 50}, 80.0, 1};
    c.target = {{110, 110}, {1e-3, 1e-3}, 2.0, 1};
    c.horizon_s = 1;
    return c;
}

void emit_record_files(const std::vector<ResultRecord>& records, const fs::path& dir,
                       const std::string& stem) {
    std::ostringstream os, slots;
    emit_results_csv(records, os);
    emit_slot_csv(records, slots);
    write_file((dir / (stem + ".csv")).string(), os.str());
    write_file((dir / (stem + "_slots.csv")).string(), slots.str());
}

int cmd_reproduce(const std::string& which, const std::string& out_dir, bool full,
                  std::uint64_t seed) {
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    // single-pair studies always run the full 5-degree menu (it is cheap);
    // the multi-user batches reduce the direction grid at desk scale
    ScenarioConfig base = base_config();
    base.seed = seed;
    if (full)
        std::cout << "running at full published scale; this takes substantially longer\n";

    if (which == "I") {
        // beam adaptation vs user-target alignment, then vs mutual coupling;
        // the alignment sweep runs at tight requirements so the power and
        // beamwidth escalation is visible
        std::vector<ResultRecord> all;
        std::cout << "alignment sweep (beta = 90, snr_min = 2000, sinr_min = 200):\n";
        for (double theta : {90.0, 100.0, 110.0, 120.0, 130.0}) {
            ScenarioConfig c = base;
            c.name = "I_theta";
            c.user.snr_min = 2000.0;
            c.target.sinr_min = 200.0;
            c.target.aod_deg = {theta, theta};
            const auto rec = run_scenario(c, {"opt"});
            all.insert(all.end(), rec.begin(), rec.end());
            if (rec[0].feasible && !rec[0].slots.empty()) {
                const SlotDetail& d = rec[0].slots[0];
                std::printf("  theta %5.1f: tx dir %5.1f deg, bw %4.1f deg, P %.1f W\n", theta,
                            d.tx_dir_deg, d.tx_bw_deg, d.tx_power_w);
            } else {
                std::printf("  theta %5.1f: infeasible\n", theta);
            }
        }
        std::cout << "coupling sweep (theta = 110, delta_rx = 0.02):\n";
        for (double dtx : {0.0, 0.02, 0.06, 0.10, 0.14}) {
            ScenarioConfig c = base;
            c.name = "I_coupling";
            c.array.coupling_tx = dtx;
            c.array.coupling_rx = 0.02;
            const auto rec = run_scenario(c, {"opt"});
            all.insert(all.end(), rec.begin(), rec.end());
            std::printf("  delta_tx %.2f: %s, energy %.3f mJ\n", dtx,
                        rec[0].feasible ? "feasible" : "infeasible", rec[0].energy_mj);
        }
        emit_record_files(all, dir, "scenario_I");
        return 0;
    }
    if (which == "II") {
        ScenarioConfig c = base;
        c.target.aod_deg = {130, 130};
        const int n = full ? 15 : 10;
        const auto ups = log_grid(1500, 15000, n);
        const auto lams = log_grid(200, 9000, n);
        ScenarioConfig c1 = c;
        c1.horizon_s = 1;
        ScenarioConfig c2 = c;
        c2.horizon_s = 2;
        c2.eta2 = 2.0;
        const SweepResult s1 = sweep_grid(c1, ups, lams);
        const SweepResult s2 = sweep_grid(c2, ups, lams);
        std::ostringstream o1, o2;
        sweep_to_csv(s1, o1);
        sweep_to_csv(s2, o2);
        write_file((dir / "scenario_II_s1.csv").string(), o1.str());
        write_file((dir / "scenario_II_s2.csv").string(), o2.str());
        std::printf("  feasible cells: S=1 %d, S=2 %d -> expansion %.0f%%\n", s1.feasible_count(),
                    s2.feasible_count(),
                    100.0 * s2.feasible_count() / std::max(1, s1.feasible_count()));
        return 0;
    }
    if (which == "III") {
        ScenarioConfig c = base;
        c.user.snr_min = 50.0;
        c.target.sinr_min = 2.0;
        std::ostringstream os;
        os << "eps_aod_deg\\eps_rc_rel,0,0.2,0.4,0.6,0.8\n";
        for (double ea : {0.0, 1.2, 2.4, 3.6, 4.8}) {
            os << ea;
            for (double er : {0.0, 0.2, 0.4, 0.6, 0.8}) {
                ScenarioConfig cc = c;
                cc.eps_aod_deg = ea;
                cc.eps_rc_rel = er;
                const auto rec = run_scenario(cc, {"opt"});
                os << ',' << (rec[0].feasible ? rec[0].energy_mj : -1.0);
            }
            os << '\n';
        }
        write_file((dir / "scenario_III.csv").string(), os.str());
        std::cout << "  energy vs (eps_AOD, eps_RC) heatmap -> "
                  << (dir / "scenario_III.csv").string() << "\n";
        return 0;
    }
    if (which == "IV") {
        ScenarioConfig c = base;
        c.user.snr_min = 50.0;
        c.target.sinr_min = 1.0;
        std::ostringstream os;
        os << "eps_csi_over_sigma\\upsilon,0,0.1,0.2,0.3\n";
        for (double ec : {0.0, 2.0, 4.0, 6.0, 8.0, 10.0}) {
            os << ec;
            for (double up : {0.0, 0.1, 0.2, 0.3}) {
                ScenarioConfig cc = c;
                cc.eps_csi_over_sigma = ec;
                cc.upsilon = up;
                cc.eps_rsi_rel = 0.3;
                const auto rec = run_scenario(cc, {"opt"});
                os << ',' << (rec[0].feasible ? rec[0].energy_mj : -1.0);
            }
            os << '\n';
        }
        write_file((dir / "scenario_IV.csv").string(), os.str());
        std::cout << "  energy vs (eps_CSI, upsilon) heatmap -> "
                  << (dir / "scenario_IV.csv").string() << "\n";
        return 0;
    }
    if (which == "V") {
        ScenarioConfig c = base;
        // thresholds high enough that joint service costs real energy, so the
        // weight presets land on different operating points
        c.user.snr_min = 2000.0;
        c.target.sinr_min = 500.0;
        c.user.slots_com = 4;
        c.target.slots_sen = 2;
        c.horizon_s = 10;
        struct Preset {
            const char* label;
            double eta1, eta2, d0, dw;
        };
        const Preset presets[] = {
            {"energy-only (eta1=10, eta2=0)", 10, 0, 2, 2},
            {"time-only, near-uniform weights", 0, 10, 2, 1e-9},
            {"time-only, structured weights", 0, 10, 2, 2},
            {"time-priority with energy awareness", 1, 10, 2, 2},
        };
        std::vector<ResultRecord> all;
        for (const Preset& p : presets) {
            ScenarioConfig cc = c;
            cc.eta1 = p.eta1;
            cc.eta2 = p.eta2;
            cc.delta0 = p.d0;
            cc.delta_omega = std::max(p.dw, 1e-9);
            const auto rec = run_scenario(cc, {"opt"});
            all.insert(all.end(), rec.begin(), rec.end());
            std::printf("  %-38s -> %d slots, %.3f mJ, %.1f ms\n", p.label,
                        rec[0].active_slots, rec[0].energy_mj, rec[0].time_ms);
        }
        emit_record_files(all, dir, "scenario_V");
        return 0;
    }
    if (which == "VI") {
        ScenarioConfig c = full ? base : base_config(10.0);
        c.seed = seed;
        c.name = "VI";
        c.n_users = 3;
        c.user = {{45, 135}, {40, 70}, 50.0, 1};
        c.n_targets = 2;
        c.target = {{50, 130}, {4e-4, 12e-4}, 4.0, 1};
        c.horizon_s = 5;
        c.eta1 = 1;
        c.eta2_auto = true;
        c.delta0 = c.delta_omega = 2;
        c.realizations = full ? 50 : 10;
        const auto records = run_scenario(c, {"opt", "bl1"});
        emit_record_files(records, dir, "scenario_VI");
        int opt_f = 0, bl1_f = 0;
        for (const ResultRecord& r : records)
            (r.scheme == "opt" ? opt_f : bl1_f) += r.feasible;
        std::printf("  feasibility: opt %d/%d vs bl1 %d/%d\n", opt_f, c.realizations, bl1_f,
                    c.realizations);
        return 0;
    }
    if (which == "VII") {
        ScenarioConfig c = full ? base : base_config(10.0);
        c.seed = seed;
        c.name = "VII";
        c.n_users = full ? 6 : 3;
        c.user = {{45, 135}, {40, 70}, 50.0, full ? 3 : 2};
        c.n_targets = full ? 4 : 2;
        c.target = {{50, 130}, {4e-4, 12e-4}, 4.0, full ? 3 : 2};
        c.horizon_s = full ? 30 : 10;
        c.eta1 = 1;
        c.eta2_auto = true;
        c.delta0 = c.delta_omega = 2;
        c.realizations = full ? 50 : 10;
        c.eps_csi_over_sigma = 4;
        c.eps_aod_deg = 2;
        c.eps_rc_rel = 0.1;
        c.eps_rsi_rel = 0.3;
        c.upsilon = 0.2;
        std::vector<ResultRecord> all;
        for (double lam : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
            ScenarioConfig cc = c;
            cc.target.sinr_min = lam;
            const auto rec = run_scenario(cc, {"opt", "tlb", "elb", "bl1", "bl2", "bl3"});
            all.insert(all.end(), rec.begin(), rec.end());
            std::printf("  Lambda=%.0f:", lam);
            for (const char* s : {"opt", "tlb", "elb", "bl1", "bl2", "bl3"}) {
                double e = 0, t = 0;
                int n = 0;
                for (const ResultRecord& r : rec)
                    if (r.scheme == s && r.feasible) {
                        e += r.energy_mj;
                        t += r.time_ms;
                        ++n;
                    }
                if (n)
                    std::printf("  %s %.2fmJ/%.1fms", s, e / n, t / n);
                else
                    std::printf("  %s -", s);
            }
            std::printf("\n");
        }
        emit_record_files(all, dir, "scenario_VII");
        return 0;
    }
    if (which == "VIII") {
        ScenarioConfig c = base;
        c.name = "VIII";
        c.n_users = 3;
        c.user = {{50, 85}, {40, 60}, 5000.0, full ? 8 : 3};
        c.n_targets = 3;
        c.target = {{75, 100}, {8e-4, 12e-4}, 500.0, full ? 6 : 2};
        c.horizon_s = full ? 60 : 15;
        c.delta0 = c.delta_omega = 2;
        c.realizations = full ? 50 : 5;
        std::ostringstream os;
        os << "eta2_over_eta1,mean_energy_mJ,mean_time_ms,feasible\n";
        for (double ratio : {0.01, 0.1, 1.0, 10.0, 100.0}) {
            ScenarioConfig cc = c;
            cc.eta1 = 1.0;
            cc.eta2 = ratio;
            const auto rec = run_scenario(cc, {"opt"});
            double e = 0, t = 0;
            int n = 0;
            for (const ResultRecord& r : rec)
                if (r.feasible) {
                    e += r.energy_mj;
                    t += r.time_ms;
                    ++n;
                }
            os << ratio << ',' << (n ? e / n : -1) << ',' << (n ? t / n : -1) << ',' << n << '\n';
            std::printf("  eta2/eta1 = %6.2f: mean %.3f mJ, %.1f ms (%d feasible)\n", ratio,
                        n ? e / n : 0.0, n ? t / n : 0.0, n);
        }
        write_file((dir / "scenario_VIII.csv").string(), os.str());
        return 0;
    }
    throw std::runtime_error("unknown scenario id '" + which + "' (use I..VIII)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isac-rrm: exact ISAC radio-resource management under bounded uncertainty"};
    app.require_subcommand(1);

    // solve
    std::string config, out, format = "csv", schemes = "opt";
    std::string alloc_out, alloc_scheme = "opt";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int realizations = 0, alloc_realization = 0;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a scenario and emit result records");
    solve_cmd->add_option("config", config, "scenario file (JSON)")->required();
    solve_cmd->add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });
    solve_cmd->add_option("--realizations", realizations, "override the realization count");
    solve_cmd->add_option("--schemes", schemes, "comma list of opt,tlb,elb,bl1,bl2,bl3");
    solve_cmd->add_option("--out", out, "write records here (plus a _slots companion for csv)");
    solve_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    solve_cmd->add_option("--alloc-out", alloc_out, "write one allocation as JSON for `verify`");
    solve_cmd->add_option("--alloc-realization", alloc_realization,
                          "realization index for --alloc-out");
    solve_cmd->add_option("--alloc-scheme", alloc_scheme, "scheme for --alloc-out");

    // sweep
    std::string grid = "ups=10:150:15,lams=1:15:15";
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "threshold-grid feasibility/energy sweep");
    sweep_cmd->add_option("config", config, "scenario file (JSON)")->required();
    sweep_cmd->add_option("--grid", grid, "ups=lo:hi:n,lams=lo:hi:n[,log]");
    sweep_cmd->add_option("--out", out, "write the energy heatmap CSV here");

    // verify
    std::string alloc_path;
    long mc_samples = 10000;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "independently verify a stored allocation");
    verify_cmd->add_option("config", config, "scenario file (JSON)")->required();
    verify_cmd->add_option("allocation", alloc_path, "allocation JSON from solve --alloc-out")
        ->required();
    verify_cmd->add_option("--mc-samples", mc_samples, "Monte-Carlo sample count");
    verify_cmd->add_option("--out", out, "write the verification report JSON here");

    // reproduce
    std::string which, out_dir = "results";
    bool full = false;
    std::uint64_t rep_seed = 1;
    CLI::App* rep_cmd = app.add_subcommand("reproduce", "run a bundled experiment (I..VIII)");
    rep_cmd->add_option("id", which, "scenario id: I, II, ..., VIII")->required();
    rep_cmd->add_option("--out", out_dir, "output directory");
    rep_cmd->add_flag("--full", full, "published scale instead of desk scale");
    rep_cmd->add_option("--seed", rep_seed, "base seed");

    // codebook dump
    CLI::App* cb_cmd = app.add_subcommand("codebook", "codebook utilities");
    CLI::App* cb_dump = cb_cmd->add_subcommand("dump", "dump tx/rx codewords as text");
    cb_dump->add_option("config", config, "scenario file (JSON)")->required();
    cb_dump->add_option("--out", out, "write here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd)
            return cmd_solve(config, seed, seed_given, realizations, schemes, out, format,
                             alloc_out, alloc_realization, alloc_scheme);
        if (*sweep_cmd) return cmd_sweep(config, grid, out);
        if (*verify_cmd) return cmd_verify(config, alloc_path, mc_samples, out);
        if (*rep_cmd) return cmd_reproduce(which, out_dir, full, rep_seed);
        if (*cb_dump) return cmd_codebook_dump(config, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
