// SPDX-License-Identifier: Apache-2.0
//
// isac-rrm: exact radio resource management for single-cell ISAC downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Scenario definitions, experiment drivers and machine-readable outputs.
// Scenario files are JSON (schema "isac-scenario-v1"); scalar fields may be
// written either as a number (fixed) or as [lo, hi] (drawn uniformly per
// realization). Uncertainty radii follow the usual normalized conventions:
// eps_csi in units of the communication noise std, eps_rc relative to |psi|,
// eps_rsi relative to ||Rbar||_F.

#ifndef ISAC_HARNESS_HPP
#define ISAC_HARNESS_HPP

#include "isac/verify.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace isac {

using json = nlohmann::json;

struct Range {
    double lo = 0.0, hi = 0.0;
    bool fixed() const { return lo == hi; }
    double draw(RngStream& rng) const { return fixed() ? lo : rng.uniform(lo, hi); }
};

struct UserTemplate {
    Range beta_deg{90.0, 90.0};
    Range r_m{50.0, 50.0};
    double snr_min = 1.0;
    int slots_com = 1;
};

struct TargetTemplate {
    Range aod_deg{90.0, 90.0};
    Range rc_mag{1e-3, 1e-3};
    double sinr_min = 1.0;
    int slots_sen = 1;
};

struct ScenarioConfig {
    std::string name = "scenario";
    std::uint64_t seed = 1;
    int realizations = 1;

    double fc_ghz = 41.0;
    ArrayConfig array; // wavelength filled from fc_ghz

    BeamGrid grid_tx;
    BeamGrid grid_rx;

    int n_users = 1;
    UserTemplate user;
    int n_targets = 1;
    TargetTemplate target;

    double eps_csi_over_sigma = 0.0;
    double eps_aod_deg = 0.0;
    double eps_rc_rel = 0.0;
    double eps_rsi_rel = 0.0;
    double upsilon = 0.0;

    double eta1 = 1.0;
    double eta2 = 1.0;
    bool eta2_auto = false;
    double delta0 = 1.0;
    double delta_omega = 1.0;

    int horizon_s = 1;
    double slot_dur_ms = 1.0;
    double sigma2_com_dbm = -110.0;
    double sigma2_sen_dbm = -70.0;
    double rician_k = 100.0;
};

namespace detail {

inline const json& require(const json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw std::invalid_argument("scenario schema error: missing field '" + where + key + "'");
    return *it;
}

inline Range parse_range(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), j.get<double>()};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("scenario schema error: field '" + where +
                                "' must be a number or [lo, hi]");
}

inline BeamGrid parse_grid(const json& j, const std::string& where) {
    const json& dirs = require(j, "directions_deg", where);
    std::vector<double> directions;
    if (dirs.is_array()) {
        directions = dirs.get<std::vector<double>>();
    } else {
        const double start = require(dirs, "start", where + "directions_deg.").get<double>();
        const double stop = require(dirs, "stop", where + "directions_deg.").get<double>();
        const double step = require(dirs, "step", where + "directions_deg.").get<double>();
        for (double d = start; d <= stop + 1e-9; d += step) directions.push_back(d);
    }
    const json& pows = require(j, "powers_w", where);
    std::vector<double> powers;
    if (pows.is_array()) {
        powers = pows.get<std::vector<double>>();
    } else {
        const double start = require(pows, "start", where + "powers_w.").get<double>();
        const double stop = require(pows, "stop", where + "powers_w.").get<double>();
        const double step = require(pows, "step", where + "powers_w.").get<double>();
        for (double p = start; p <= stop + 1e-9; p += step) powers.push_back(p);
    }
    BeamGrid g;
    g.directions_deg = std::move(directions);
    g.beamwidth_classes_deg =
        require(j, "beamwidths_deg", where).get<std::vector<double>>();
    g.power_levels_w = std::move(powers);
    g.validate();
    return g;
}

} // namespace detail

inline ScenarioConfig scenario_from_json(const json& j) {
    using detail::parse_range;
    using detail::require;
    ScenarioConfig c;
    if (require(j, "schema", "").get<std::string>() != "isac-scenario-v1")
        throw std::invalid_argument("scenario schema error: unsupported schema version");
    c.name = j.value("name", "scenario");
    c.seed = j.value("seed", 1ull);
    c.realizations = j.value("realizations", 1);

    const json& arr = require(j, "array", "");
    c.array.n_tx = require(arr, "n_tx", "array.").get<int>();
    c.array.n_rx = require(arr, "n_rx", "array.").get<int>();
    c.fc_ghz = require(arr, "fc_ghz", "array.").get<double>();
    c.array.wavelength_m = kSpeedOfLight / (c.fc_ghz * 1e9);
    c.array.spacing_tx_wl = arr.value("spacing_tx_wl", 0.5);
    c.array.spacing_rx_wl = arr.value("spacing_rx_wl", 0.5);
    c.array.coupling_tx = arr.value("coupling_tx", 0.0);
    c.array.coupling_rx = arr.value("coupling_rx", 0.0);
    c.array.array_center_sep_m = arr.value("center_sep_m", 0.2);

    const json& cb = require(j, "codebook", "");
    c.grid_tx = detail::parse_grid(require(cb, "tx", "codebook."), "codebook.tx.");
    c.grid_rx = detail::parse_grid(require(cb, "rx", "codebook."), "codebook.rx.");

    const json& us = require(j, "users", "");
    c.n_users = require(us, "count", "users.").get<int>();
    c.user.beta_deg = parse_range(require(us, "beta_deg", "users."), "users.beta_deg");
    c.user.r_m = parse_range(require(us, "r_m", "users."), "users.r_m");
    c.user.snr_min = require(us, "snr_min", "users.").get<double>();
    c.user.slots_com = require(us, "slots", "users.").get<int>();

    const json& tg = require(j, "targets", "");
    c.n_targets = require(tg, "count", "targets.").get<int>();
    c.target.aod_deg = parse_range(require(tg, "aod_deg", "targets."), "targets.aod_deg");
    c.target.rc_mag = parse_range(require(tg, "rc", "targets."), "targets.rc");
    c.target.sinr_min = require(tg, "sinr_min", "targets.").get<double>();
    c.target.slots_sen = require(tg, "slots", "targets.").get<int>();

    const json& un = require(j, "uncertainty", "");
    c.eps_csi_over_sigma = un.value("eps_csi_over_sigma", 0.0);
    c.eps_aod_deg = un.value("eps_aod_deg", 0.0);
    c.eps_rc_rel = un.value("eps_rc_rel", 0.0);
    c.eps_rsi_rel = un.value("eps_rsi_rel", 0.0);
    c.upsilon = un.value("upsilon", 0.0);

    const json& ob = require(j, "objective", "");
    c.eta1 = require(ob, "eta1", "objective.").get<double>();
    const json& e2 = require(ob, "eta2", "objective.");
    if (e2.is_string() && e2.get<std::string>() == "auto") {
        c.eta2_auto = true;
    } else {
        c.eta2 = e2.get<double>();
    }
    c.delta0 = ob.value("delta0", 1.0);
    c.delta_omega = ob.value("delta_omega", 1.0);

    const json& hz = require(j, "horizon", "");
    c.horizon_s = require(hz, "slots", "horizon.").get<int>();
    c.slot_dur_ms = hz.value("slot_duration_ms", 1.0);

    if (j.contains("noise")) {
        c.sigma2_com_dbm = j["noise"].value("sigma2_com_dbm", -110.0);
        c.sigma2_sen_dbm = j["noise"].value("sigma2_sen_dbm", -70.0);
    }
    if (j.contains("channel")) c.rician_k = j["channel"].value("rician_k", 100.0);

    if (c.n_users < 0 || c.n_targets < 0)
        throw std::invalid_argument("scenario schema error: counts must be >= 0");
    if (c.user.slots_com < 0 || c.target.slots_sen < 0)
        throw std::invalid_argument("scenario schema error: slot demands must be >= 0");
    if (c.horizon_s < 1) throw std::invalid_argument("scenario schema error: horizon.slots must be >= 1");
    if (c.user.snr_min <= 0 || c.target.sinr_min <= 0)
        throw std::invalid_argument("scenario schema error: snr_min/sinr_min must be positive");
    if (c.realizations < 1)
        throw std::invalid_argument("scenario schema error: realizations must be >= 1");
    return c;
}

inline ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("scenario parse error in " + path + ": " + e.what());
    }
    return scenario_from_json(j);
}

inline double resolved_eta2(const ScenarioConfig& c) {
    if (!c.eta2_auto) return c.eta2;
    const double thr = priority_eta2_threshold(c.eta1, c.horizon_s, c.grid_tx.power_levels_w.back(),
                                               c.grid_rx.power_levels_w.back(), c.delta0);
    return 1.01 * thr;
}

// Draws one realization. Substreams are split per (seed, realization, role)
// so records are reproducible and independent across realizations.
inline Instance realize(const ScenarioConfig& c, int realization) {
    Instance inst;
    inst.array = c.array;
    inst.array.wavelength_m = kSpeedOfLight / (c.fc_ghz * 1e9);
    inst.prepare();
    inst.cb_tx = build_codebook(inst.array, Side::Tx, c.grid_tx);
    inst.cb_rx = build_codebook(inst.array, Side::Rx, c.grid_rx);
    inst.horizon_s = c.horizon_s;
    inst.slot_dur_s = c.slot_dur_ms * 1e-3;
    inst.sigma2_com_w = dbm_to_watt(c.sigma2_com_dbm);
    inst.sigma2_sen_w = dbm_to_watt(c.sigma2_sen_dbm);

    const std::uint64_t base = c.seed * 1000003ull + static_cast<std::uint64_t>(realization);
    RngStream rng_geo = RngStream::substream(base, 0);
    RngStream rng_chan = RngStream::substream(base, 1);

    inst.users.resize(c.n_users);
    inst.h_bar.resize(c.n_users);
    for (int u = 0; u < c.n_users; ++u) {
        UserSpec& spec = inst.users[u];
        spec.beta_deg = c.user.beta_deg.draw(rng_geo);
        spec.r_m = c.user.r_m.draw(rng_geo);
        spec.snr_min = c.user.snr_min;
        spec.slots_com = c.user.slots_com;
        inst.h_bar[u] =
            generate_user_channel(rng_chan, inst.array, spec.beta_deg, spec.r_m, c.rician_k).h;
    }
    inst.targets.resize(c.n_targets);
    for (int t = 0; t < c.n_targets; ++t) {
        TargetSpec& spec = inst.targets[t];
        spec.aod_bar_deg = c.target.aod_deg.draw(rng_geo);
        spec.rc_bar = c.target.rc_mag.draw(rng_geo);
        spec.sinr_min = c.target.sinr_min;
        spec.slots_sen = c.target.slots_sen;
        spec.eps_rc = c.eps_rc_rel * std::abs(spec.rc_bar);
    }

    inst.unc.eps_csi = c.eps_csi_over_sigma * std::sqrt(inst.sigma2_com_w);
    inst.unc.eps_aod_rad = deg2rad(c.eps_aod_deg);
    inst.unc.eps_rsi = c.eps_rsi_rel * inst.rsi.r_bar.norm();
    inst.unc.upsilon = c.upsilon;
    inst.unc.validate();

    inst.weights.eta1 = c.eta1;
    inst.weights.eta2 = resolved_eta2(c);
    inst.weights.delta0 = c.delta0;
    inst.weights.delta_omega = c.delta_omega;
    inst.omega = design_weights(std::max(inst.s_tilde(), 1), c.delta0, c.delta_omega);
    return inst;
}

// -------------------------------------------------------------------------
// Result records and emission

struct SlotDetail {
    int slot = 0;
    int user = -1, target = -1;
    double tx_dir_deg = 0, tx_bw_deg = 0, tx_power_w = 0;
    double rx_dir_deg = 0, rx_bw_deg = 0, rx_power_w = 0;
    double energy_w = 0;
};

struct ResultRecord {
    std::string scheme;
    int realization = 0;
    bool feasible = false;
    bool fallback = false;
    double energy_mj = 0.0;
    double time_ms = 0.0;
    double objective = kInf;
    int active_slots = 0;
    std::vector<SlotDetail> slots;
    std::string error; // per-realization failures are recorded, not fatal
};

// Raised when a solver output fails its own certification; never swallowed.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ResultRecord make_record(const Instance& inst, const Allocation& alloc,
                                const std::string& scheme, int realization) {
    ResultRecord r;
    r.scheme = scheme;
    r.realization = realization;
    r.feasible = alloc.feasible();
    r.fallback = alloc.fallback_used;
    if (!r.feasible) return r;
    r.energy_mj = alloc.energy_total_j * 1e3;
    r.time_ms = alloc.time_ms;
    r.objective = alloc.objective;
    r.active_slots = alloc.active_slots;
    for (size_t s = 0; s < alloc.slots.size(); ++s) {
        const SlotDecision& d = alloc.slots[s];
        if (!d.comm && !d.sense) continue;
        SlotDetail det;
        det.slot = static_cast<int>(s) + 1;
        det.user = d.user;
        det.target = d.target;
        const CodewordSpec& ts = inst.cb_tx[d.tx_flat].spec;
        det.tx_dir_deg = inst.cb_tx.grid.directions_deg[ts.dir_idx];
        det.tx_bw_deg = inst.cb_tx.grid.beamwidth_classes_deg[ts.bw_idx];
        det.tx_power_w = inst.cb_tx.grid.power_levels_w[ts.pow_idx];
        if (d.rx_flat >= 0) {
            const CodewordSpec& rs = inst.cb_rx[d.rx_flat].spec;
            det.rx_dir_deg = inst.cb_rx.grid.directions_deg[rs.dir_idx];
            det.rx_bw_deg = inst.cb_rx.grid.beamwidth_classes_deg[rs.bw_idx];
            det.rx_power_w = inst.cb_rx.grid.power_levels_w[rs.pow_idx];
        }
        det.energy_w = d.energy_w;
        r.slots.push_back(det);
    }
    return r;
}

inline Allocation run_scheme(const std::string& scheme, const Instance& inst,
                             const ConfigTables& tb) {
    if (scheme == "opt") return solve(inst, tb);
    if (scheme == "tlb") return solve_baseline(BaselineKind::TLB, inst, tb);
    if (scheme == "elb") return solve_baseline(BaselineKind::ELB, inst, tb);
    if (scheme == "bl1") return solve_baseline(BaselineKind::BL1, inst, tb);
    if (scheme == "bl2") return solve_baseline(BaselineKind::BL2, inst, tb);
    if (scheme == "bl3") return solve_baseline(BaselineKind::BL3, inst, tb);
    throw std::invalid_argument("unknown scheme: " + scheme);
}

// Runs every scheme over every realization; each feasible allocation must
// verify before it is emitted. ELB is verified against a horizon-relaxed
// instance since it deliberately relaxes C4 to s_tilde.
inline std::vector<ResultRecord> run_scenario(const ScenarioConfig& cfg,
                                              const std::vector<std::string>& schemes) {
    for (const std::string& s : schemes)
        if (s != "opt" && s != "tlb" && s != "elb" && s != "bl1" && s != "bl2" && s != "bl3")
            throw std::invalid_argument("unknown scheme: " + s);
    std::vector<ResultRecord> records;
    for (int r = 0; r < cfg.realizations; ++r) {
        std::vector<ResultRecord> batch; // committed per realization, all or error
        try {
            const Instance inst = realize(cfg, r);
            const ConfigTables tb = build_tables(inst);
            for (const std::string& scheme : schemes) {
                const Allocation alloc = run_scheme(scheme, inst, tb);
                if (alloc.feasible()) {
                    Instance check_inst = inst;
                    if (scheme == "elb") check_inst.horizon_s = inst.s_tilde();
                    const VerificationReport rep = check_allocation(check_inst, alloc);
                    if (!rep.all_pass())
                        throw VerificationFailure("verification failed for scheme '" + scheme +
                                                  "' on realization " + std::to_string(r));
                }
                batch.push_back(make_record(inst, alloc, scheme, r));
            }
        } catch (const VerificationFailure&) {
            throw; // an unverified result must never be emitted
        } catch (const std::exception& e) {
            batch.clear();
            for (const std::string& scheme : schemes) {
                ResultRecord rec;
                rec.scheme = scheme;
                rec.realization = r;
                rec.error = e.what();
                batch.push_back(rec);
            }
        }
        records.insert(records.end(), batch.begin(), batch.end());
    }
    return records;
}

inline void emit_results_csv(const std::vector<ResultRecord>& records, std::ostream& os) {
    os << "scheme,realization,feasible,fallback,energy_mJ,time_ms,objective,active_slots\n";
    os << std::setprecision(12);
    for (const ResultRecord& r : records)
        os << r.scheme << ',' << r.realization << ',' << (r.feasible ? 1 : 0) << ','
           << (r.fallback ? 1 : 0) << ',' << r.energy_mj << ',' << r.time_ms << ','
           << r.objective << ',' << r.active_slots << '\n';
}

inline void emit_slot_csv(const std::vector<ResultRecord>& records, std::ostream& os) {
    os << "scheme,realization,slot,user,target,tx_dir_deg,tx_bw_deg,tx_power_W,"
          "rx_dir_deg,rx_bw_deg,rx_power_W,energy_W\n";
    os << std::setprecision(12);
    for (const ResultRecord& r : records)
        for (const SlotDetail& d : r.slots)
            os << r.scheme << ',' << r.realization << ',' << d.slot << ',' << d.user << ','
               << d.target << ',' << d.tx_dir_deg << ',' << d.tx_bw_deg << ',' << d.tx_power_w
               << ',' << d.rx_dir_deg << ',' << d.rx_bw_deg << ',' << d.rx_power_w << ','
               << d.energy_w << '\n';
}

inline json record_to_json(const ResultRecord& r) {
    json slots = json::array();
    for (const SlotDetail& d : r.slots)
        slots.push_back({{"slot", d.slot},
                         {"user", d.user},
                         {"target", d.target},
                         {"tx_dir_deg", d.tx_dir_deg},
                         {"tx_bw_deg", d.tx_bw_deg},
                         {"tx_power_w", d.tx_power_w},
                         {"rx_dir_deg", d.rx_dir_deg},
                         {"rx_bw_deg", d.rx_bw_deg},
                         {"rx_power_w", d.rx_power_w},
                         {"energy_w", d.energy_w}});
    return {{"scheme", r.scheme},
            {"realization", r.realization},
            {"feasible", r.feasible},
            {"fallback", r.fallback},
            {"energy_mJ", r.energy_mj},
            {"time_ms", r.time_ms},
            {"objective", r.feasible ? json(r.objective) : json()},
            {"active_slots", r.active_slots},
            {"error", r.error},
            {"slots", slots}};
}

inline ResultRecord record_from_json(const json& j) {
    ResultRecord r;
    r.scheme = j.at("scheme").get<std::string>();
    r.realization = j.at("realization").get<int>();
    r.feasible = j.at("feasible").get<bool>();
    r.fallback = j.at("fallback").get<bool>();
    r.energy_mj = j.at("energy_mJ").get<double>();
    r.time_ms = j.at("time_ms").get<double>();
    r.objective = j.at("objective").is_null() ? kInf : j.at("objective").get<double>();
    r.active_slots = j.at("active_slots").get<int>();
    r.error = j.value("error", std::string());
    for (const json& js : j.at("slots")) {
        SlotDetail d;
        d.slot = js.at("slot").get<int>();
        d.user = js.at("user").get<int>();
        d.target = js.at("target").get<int>();
        d.tx_dir_deg = js.at("tx_dir_deg").get<double>();
        d.tx_bw_deg = js.at("tx_bw_deg").get<double>();
        d.tx_power_w = js.at("tx_power_w").get<double>();
        d.rx_dir_deg = js.at("rx_dir_deg").get<double>();
        d.rx_bw_deg = js.at("rx_bw_deg").get<double>();
        d.rx_power_w = js.at("rx_power_w").get<double>();
        d.energy_w = js.at("energy_w").get<double>();
        r.slots.push_back(d);
    }
    return r;
}

inline void emit_results_json(const std::vector<ResultRecord>& records, std::ostream& os) {
    json arr = json::array();
    for (const ResultRecord& r : records) arr.push_back(record_to_json(r));
    os << arr.dump(2) << '\n';
}

// -------------------------------------------------------------------------
// Allocation serialization (for `solve --out` / `verify`)

inline json allocation_to_json(const Allocation& alloc) {
    json slots = json::array();
    for (const SlotDecision& d : alloc.slots)
        slots.push_back({{"comm", d.comm},
                         {"sense", d.sense},
                         {"user", d.user},
                         {"target", d.target},
                         {"tx_flat", d.tx_flat},
                         {"rx_flat", d.rx_flat},
                         {"energy_w", d.energy_w}});
    std::string status = "optimal";
    if (alloc.status == SolveStatus::Infeasible) status = "infeasible";
    if (alloc.status == SolveStatus::HorizonTooSmall) status = "horizon_too_small";
    return {{"status", status},
            {"active_slots", alloc.active_slots},
            {"energy_total_j", alloc.energy_total_j},
            {"time_cost", alloc.time_cost},
            {"time_ms", alloc.time_ms},
            {"objective", alloc.feasible() ? json(alloc.objective) : json()},
            {"fallback_used", alloc.fallback_used},
            {"slots", slots}};
}

inline Allocation allocation_from_json(const json& j) {
    Allocation alloc;
    const std::string status = j.at("status").get<std::string>();
    alloc.status = status == "optimal"
                       ? SolveStatus::Optimal
                       : (status == "infeasible" ? SolveStatus::Infeasible
                                                 : SolveStatus::HorizonTooSmall);
    alloc.active_slots = j.at("active_slots").get<int>();
    alloc.energy_total_j = j.at("energy_total_j").get<double>();
    alloc.time_cost = j.at("time_cost").get<double>();
    alloc.time_ms = j.at("time_ms").get<double>();
    alloc.objective = j.at("objective").is_null() ? kInf : j.at("objective").get<double>();
    alloc.fallback_used = j.at("fallback_used").get<bool>();
    for (const json& js : j.at("slots")) {
        SlotDecision d;
        d.comm = js.at("comm").get<bool>();
        d.sense = js.at("sense").get<bool>();
        d.user = js.at("user").get<int>();
        d.target = js.at("target").get<int>();
        d.tx_flat = js.at("tx_flat").get<int>();
        d.rx_flat = js.at("rx_flat").get<int>();
        d.energy_w = js.at("energy_w").get<double>();
        alloc.slots.push_back(d);
    }
    return alloc;
}

inline json report_to_json(const VerificationReport& rep) {
    json recs = json::array();
    for (const ConstraintRecord& r : rep.records) {
        std::string st = r.status == ConstraintRecord::Status::Pass
                             ? "pass"
                             : (r.status == ConstraintRecord::Status::Fail ? "fail" : "n/a");
        recs.push_back({{"id", r.id}, {"status", st}, {"worst_slack", r.worst_slack}});
    }
    auto certs = [](const std::vector<CertValue>& v) {
        json out = json::array();
        for (const CertValue& c : v)
            out.push_back({{"index", c.i}, {"slot", c.s}, {"value", c.value}});
        return out;
    };
    auto support = [](const std::vector<PiSupport>& v, bool with_b) {
        json out = json::array();
        for (const PiSupport& p : v) {
            json e = {{"c", p.c}, {"t", p.t}, {"s", p.s}};
            if (with_b) e["b"] = p.b;
            out.push_back(e);
        }
        return out;
    };
    return {{"all_pass", rep.all_pass()},
            {"constraints", recs},
            {"certificates",
             {{"alpha", certs(rep.alpha)},
              {"xi", certs(rep.xi)},
              {"iota", certs(rep.iota)},
              {"z", certs(rep.z)},
              {"pi_support", support(rep.pi_support, true)},
              {"delta_support", support(rep.delta_support, false)}}},
            {"monte_carlo", {{"samples", rep.mc_samples}, {"violations", rep.mc_violations}}}};
}

// -------------------------------------------------------------------------
// Threshold sweep (functionality-selection heatmaps)

struct SweepResult {
    std::vector<double> snr_grid;  // Upsilon values
    std::vector<double> sinr_grid; // Lambda values
    RMat energy_mj;                // -1 where infeasible
    Eigen::MatrixXi feasible;
    Eigen::MatrixXi active;

    int feasible_count() const { return feasible.sum(); }
};

inline SweepResult sweep_grid(const ScenarioConfig& cfg, const std::vector<double>& snr_grid,
                              const std::vector<double>& sinr_grid) {
    SweepResult out;
    out.snr_grid = snr_grid;
    out.sinr_grid = sinr_grid;
    const int ni = static_cast<int>(snr_grid.size()), nj = static_cast<int>(sinr_grid.size());
    out.energy_mj = RMat::Constant(ni, nj, -1.0);
    out.feasible = Eigen::MatrixXi::Zero(ni, nj);
    out.active = Eigen::MatrixXi::Zero(ni, nj);
    const Instance base = realize(cfg, 0);
    for (int i = 0; i < ni; ++i) {
        for (int jx = 0; jx < nj; ++jx) {
            Instance inst = base;
            for (UserSpec& u : inst.users) u.snr_min = snr_grid[i];
            for (TargetSpec& t : inst.targets) t.sinr_min = sinr_grid[jx];
            const ConfigTables tb = build_tables(inst);
            const Allocation alloc = solve(inst, tb);
            if (alloc.feasible()) {
                out.feasible(i, jx) = 1;
                out.energy_mj(i, jx) = alloc.energy_total_j * 1e3;
                out.active(i, jx) = alloc.active_slots;
            }
        }
    }
    return out;
}

inline void sweep_to_csv(const SweepResult& s, std::ostream& os) {
    os << std::setprecision(12);
    os << "# cells: energy_mJ, -1 = infeasible; rows snr_min (linear), columns sinr_min (linear)\n";
    os << "snr_min\\sinr_min";
    for (double l : s.sinr_grid) os << ',' << l;
    os << '\n';
    for (size_t i = 0; i < s.snr_grid.size(); ++i) {
        os << s.snr_grid[i];
        for (size_t j = 0; j < s.sinr_grid.size(); ++j)
            os << ',' << s.energy_mj(static_cast<int>(i), static_cast<int>(j));
        os << '\n';
    }
}

} // namespace isac

#endif // ISAC_HARNESS_HPP
