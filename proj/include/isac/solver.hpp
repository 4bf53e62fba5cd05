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
// Exact minimization of eta1*f1' + eta2*f2'. Slot exclusivity (one user, one
// target, one codeword per side) makes every active slot one of three
// configurations -- joint(u,t), user-only(u), target-only(t) -- whose minimal
// robust-feasible energies are precomputed into tables. Slot identity enters
// the objective only through the increasing weights omega, so optimal
// schedules are prefix-packed and the problem reduces to an integer counts
// program solved by depth-first branch-and-bound with an admissible bound.

#ifndef ISAC_SOLVER_HPP
#define ISAC_SOLVER_HPP

#include "isac/scenario.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace isac {

// Lemma-style slot weights: omega_s = delta0 + (s-1)*delta_omega.
inline std::vector<double> design_weights(int s_max, double delta0, double delta_omega) {
    if (s_max < 1) throw std::invalid_argument("horizon must be >= 1");
    if (delta0 <= 0.0 || delta_omega <= 0.0)
        throw std::invalid_argument("weight increments must be positive");
    std::vector<double> w(s_max);
    for (int s = 0; s < s_max; ++s) w[s] = delta0 + s * delta_omega;
    return w;
}

// Any eta2 strictly above this value makes the time term dominate every
// attainable energy difference, enforcing strict time priority.
inline double priority_eta2_threshold(double eta1, int s_max, double p_tx_max_w,
                                      double p_rx_max_w, double delta0) {
    if (s_max < 1 || delta0 <= 0.0) throw std::invalid_argument("bad threshold arguments");
    return eta1 * s_max * (p_tx_max_w + p_rx_max_w) / delta0;
}

struct SlotConfigCost {
    enum class Kind { Joint, UserOnly, TargetOnly };
    Kind kind = Kind::Joint;
    int user = -1;
    int target = -1;
    bool feasible = false;
    double min_energy_w = kInf;
    int argmin_tx = -1;
    int argmin_rx = -1; // -1 when no sensing (C13)
};

struct PrefilterResult {
    bool user_possible = false; // K1 bound can reach the SNR requirement
    double numerator_ub = 0.0;  // (||Ztx^H hbar|| + eps*||Ztx||_F)^2 * P_tx_max
    std::vector<char> keep;     // per tx flat index
};

// K1 cutting plane per user: a global reachability bound plus the exact
// per-codeword robust-SNR filter.
inline PrefilterResult prefilter_k1(const Instance& inst, int u) {
    const CVec& h = inst.h_bar.at(u);
    const UserSpec& us = inst.users.at(u);
    PrefilterResult out;
    out.numerator_ub =
        sq((inst.z_tx.transpose() * h).norm() + inst.unc.eps_csi * inst.z_tx.norm()) *
        inst.p_tx_max();
    out.user_possible = us.snr_min * inst.sigma2_com_w <= out.numerator_ub;
    out.keep.assign(inst.cb_tx.size(), 0);
    if (!out.user_possible) return out;
    for (int b = 0; b < inst.cb_tx.size(); ++b) {
        const double snr =
            worst_case_snr(h, inst.unc.eps_csi, inst.z_tx, inst.cb_tx[b].vector, inst.sigma2_com_w)
                .snr;
        out.keep[b] = snr >= us.snr_min ? 1 : 0;
    }
    return out;
}

struct ConfigTables {
    std::vector<std::vector<SlotConfigCost>> joint; // [u][t]
    std::vector<SlotConfigCost> user_only;          // [u]
    std::vector<SlotConfigCost> target_only;        // [t]
    std::vector<PrefilterResult> prefilter;         // [u]
    std::vector<int> infeasible_users;              // flagged by the K1 bound
};

namespace detail {

// Ties everywhere resolve to the lowest flat index (tx first, then rx):
// scans run in flat order and only strict improvements replace the argmin.
inline void scan_user_min(const Instance& inst, const PrefilterResult& pf, int u,
                          SlotConfigCost& out) {
    out = {SlotConfigCost::Kind::UserOnly, u, -1, false, kInf, -1, -1};
    for (int b = 0; b < inst.cb_tx.size(); ++b) {
        if (!pf.keep[b]) continue;
        const double e = inst.cb_tx[b].energy_w;
        if (e < out.min_energy_w) {
            out.min_energy_w = e;
            out.argmin_tx = b;
            out.feasible = true;
        }
    }
}

inline void scan_target_min(const Instance& inst, const LinkGeometryCache& cache, int t,
                            const std::vector<char>* tx_filter, SlotConfigCost& out) {
    out = {SlotConfigCost::Kind::TargetOnly, -1, t, false, kInf, -1, -1};
    const TargetSpec& ts = inst.targets[t];
    const UncertaintyConfig unc = inst.unc_for_target(t);
    for (int b = 0; b < inst.cb_tx.size(); ++b) {
        if (tx_filter && !(*tx_filter)[b]) continue;
        for (int c = 0; c < inst.cb_rx.size(); ++c) {
            const double e = inst.cb_tx[b].energy_w + inst.cb_rx[c].energy_w;
            if (e >= out.min_energy_w) continue;
            if (robust_sensing_feasible(cache, b, c, ts.sinr_min, ts.rc_bar, unc,
                                        inst.sigma2_sen_w)
                    .feasible) {
                out.min_energy_w = e;
                out.argmin_tx = b;
                out.argmin_rx = c;
                out.feasible = true;
            }
        }
    }
}

inline void scan_joint_min(const Instance& inst, const PrefilterResult& pf,
                           const LinkGeometryCache& cache, int u, int t,
                           const std::vector<char>* tx_filter, SlotConfigCost& out) {
    out = {SlotConfigCost::Kind::Joint, u, t, false, kInf, -1, -1};
    const TargetSpec& ts = inst.targets[t];
    const UncertaintyConfig unc = inst.unc_for_target(t);
    for (int b = 0; b < inst.cb_tx.size(); ++b) {
        if (!pf.keep[b]) continue; // user SNR must hold on the shared beam
        if (tx_filter && !(*tx_filter)[b]) continue;
        for (int c = 0; c < inst.cb_rx.size(); ++c) {
            const double e = inst.cb_tx[b].energy_w + inst.cb_rx[c].energy_w;
            if (e >= out.min_energy_w) continue;
            if (robust_sensing_feasible(cache, b, c, ts.sinr_min, ts.rc_bar, unc,
                                        inst.sigma2_sen_w)
                    .feasible) {
                out.min_energy_w = e;
                out.argmin_tx = b;
                out.argmin_rx = c;
                out.feasible = true;
            }
        }
    }
}

} // namespace detail

// tx_filter, when given, restricts the transmit menu (BL2 uses this).
inline ConfigTables build_tables(const Instance& inst,
                                 const std::vector<char>* tx_filter = nullptr) {
    ConfigTables tb;
    const int nu = inst.n_users(), nt = inst.n_targets();
    tb.prefilter.resize(nu);
    tb.user_only.resize(nu);
    for (int u = 0; u < nu; ++u) {
        tb.prefilter[u] = prefilter_k1(inst, u);
        if (tx_filter)
            for (int b = 0; b < inst.cb_tx.size(); ++b)
                tb.prefilter[u].keep[b] = tb.prefilter[u].keep[b] && (*tx_filter)[b];
        if (!tb.prefilter[u].user_possible) tb.infeasible_users.push_back(u);
        detail::scan_user_min(inst, tb.prefilter[u], u, tb.user_only[u]);
    }
    tb.target_only.resize(nt);
    tb.joint.assign(nu, std::vector<SlotConfigCost>(nt));
    for (int t = 0; t < nt; ++t) {
        const LinkGeometryCache cache(inst.array, inst.z_tx, inst.z_rx, inst.cb_tx, inst.cb_rx,
                                      inst.targets[t].aod_bar_deg, inst.rsi);
        detail::scan_target_min(inst, cache, t, tx_filter, tb.target_only[t]);
        for (int u = 0; u < nu; ++u)
            detail::scan_joint_min(inst, tb.prefilter[u], cache, u, t, tx_filter, tb.joint[u][t]);
    }
    return tb;
}

enum class SolveStatus { Optimal, Infeasible, HorizonTooSmall };

struct CountsSolution {
    bool found = false;
    Eigen::MatrixXi n_joint;
    Eigen::VectorXi n_user, n_target;
    double objective = kInf;
    double energy_w = 0.0; // sum of per-slot powers (watts)
    double time_cost = 0.0;
    int active_slots = 0;
};

struct SlotDecision {
    bool comm = false;  // kappa
    bool sense = false; // zeta
    int user = -1;
    int target = -1;
    int tx_flat = -1;
    int rx_flat = -1;
    double energy_w = 0.0;
};

struct Allocation {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<SlotDecision> slots; // prefix-packed; idle tail up to the horizon
    int active_slots = 0;
    double energy_total_j = 0.0;
    double time_cost = 0.0; // f2' = S_dur * sum omega_s over active slots
    double time_ms = 0.0;
    double objective = kInf; // under the instance weights
    bool fallback_used = false;
    CountsSolution counts;

    bool feasible() const { return status == SolveStatus::Optimal; }
};

namespace detail {

struct CountsSearch {
    int nu = 0, nt = 0;
    const ConfigTables* tb = nullptr;
    const Instance* inst = nullptr;
    double eta1 = 1.0, eta2 = 1.0;
    int s_cap = 0;
    std::vector<double> omega_prefix; // omega_prefix[k] = sum of first k weights
    bool forbid_joint = false;

    std::vector<int> rem_com, rem_sen;
    std::vector<double> cmin_u, dmin_t;
    Eigen::MatrixXi n_joint;
    double best_obj = kInf;
    CountsSolution best;

    double slot_dur() const { return inst->slot_dur_s; }

    double prefix(int n) const { return omega_prefix.at(n); }

    void run() {
        rem_com.resize(nu);
        rem_sen.resize(nt);
        for (int u = 0; u < nu; ++u) rem_com[u] = inst->users[u].slots_com;
        for (int t = 0; t < nt; ++t) rem_sen[t] = inst->targets[t].slots_sen;
        cmin_u.assign(nu, kInf);
        dmin_t.assign(nt, kInf);
        for (int u = 0; u < nu; ++u) {
            if (tb->user_only[u].feasible) cmin_u[u] = tb->user_only[u].min_energy_w;
            if (!forbid_joint)
                for (int t = 0; t < nt; ++t)
                    if (tb->joint[u][t].feasible)
                        cmin_u[u] = std::min(cmin_u[u], tb->joint[u][t].min_energy_w);
            if (rem_com[u] > 0 && cmin_u[u] == kInf) return; // no config can serve u
        }
        for (int t = 0; t < nt; ++t) {
            if (tb->target_only[t].feasible) dmin_t[t] = tb->target_only[t].min_energy_w;
            if (!forbid_joint)
                for (int u = 0; u < nu; ++u)
                    if (tb->joint[u][t].feasible)
                        dmin_t[t] = std::min(dmin_t[t], tb->joint[u][t].min_energy_w);
            if (rem_sen[t] > 0 && dmin_t[t] == kInf) return;
        }
        n_joint = Eigen::MatrixXi::Zero(std::max(nu, 1), std::max(nt, 1));
        dfs(0, 0, 0.0);
    }

    double lower_bound(int joints_so_far, double energy_committed) const {
        int rc = 0, rs = 0;
        double e_com = 0.0, e_sen = 0.0;
        for (int u = 0; u < nu; ++u) {
            rc += rem_com[u];
            if (rem_com[u] > 0) e_com += rem_com[u] * cmin_u[u];
        }
        for (int t = 0; t < nt; ++t) {
            rs += rem_sen[t];
            if (rem_sen[t] > 0) e_sen += rem_sen[t] * dmin_t[t];
        }
        const int j_fut = forbid_joint ? 0 : std::min(rc, rs);
        const int n_lb = inst->s_tilde() - joints_so_far - j_fut;
        if (n_lb > s_cap) return kInf;
        const double e_lb = energy_committed + std::max(e_com, e_sen);
        return eta1 * slot_dur() * e_lb + eta2 * slot_dur() * prefix(n_lb);
    }

    void dfs(int cell, int joints, double energy) {
        if (lower_bound(joints, energy) > best_obj - 1e-12) return;
        if (cell == nu * nt || nt == 0 || nu == 0) {
            finish(joints, energy);
            return;
        }
        const int u = cell / nt, t = cell % nt;
        int vmax = std::min(rem_com[u], rem_sen[t]);
        if (forbid_joint || !tb->joint[u][t].feasible) vmax = 0;
        const bool row_end = (t == nt - 1);
        for (int v = vmax; v >= 0; --v) {
            n_joint(u, t) = v;
            rem_com[u] -= v;
            rem_sen[t] -= v;
            double e2 = energy + (v > 0 ? v * tb->joint[u][t].min_energy_w : 0.0);
            int saved_rem = rem_com[u];
            bool ok = true;
            if (row_end) {
                if (rem_com[u] > 0 && !tb->user_only[u].feasible) ok = false;
                if (ok) {
                    if (rem_com[u] > 0) e2 += rem_com[u] * tb->user_only[u].min_energy_w;
                    rem_com[u] = 0;
                }
            }
            if (ok) dfs(cell + 1, joints + v, e2);
            if (row_end) rem_com[u] = saved_rem;
            rem_com[u] += v;
            rem_sen[t] += v;
            n_joint(u, t) = 0;
        }
    }

    void finish(int joints, double energy) {
        // commit target leftovers
        double e = energy;
        for (int t = 0; t < nt; ++t) {
            if (rem_sen[t] > 0) {
                if (!tb->target_only[t].feasible) return;
                e += rem_sen[t] * tb->target_only[t].min_energy_w;
            }
        }
        for (int u = 0; u < nu; ++u) {
            if (rem_com[u] > 0) { // only possible when nt == 0 (no row pass ran)
                if (!tb->user_only[u].feasible) return;
                e += rem_com[u] * tb->user_only[u].min_energy_w;
            }
        }
        const int n_active = inst->s_tilde() - joints;
        if (n_active > s_cap) return;
        const double obj = eta1 * slot_dur() * e + eta2 * slot_dur() * prefix(n_active);
        if (obj < best_obj - 1e-12) {
            best_obj = obj;
            best.found = true;
            best.objective = obj;
            best.energy_w = e;
            best.time_cost = slot_dur() * prefix(n_active);
            best.active_slots = n_active;
            best.n_joint = n_joint;
            best.n_user.resize(nu);
            best.n_target.resize(nt);
            for (int u = 0; u < nu; ++u) {
                int served = 0;
                for (int t = 0; t < nt; ++t) served += n_joint(u, t);
                best.n_user(u) = inst->users[u].slots_com - served;
            }
            for (int t = 0; t < nt; ++t) {
                int served = 0;
                for (int u = 0; u < nu; ++u) served += n_joint(u, t);
                best.n_target(t) = inst->targets[t].slots_sen - served;
            }
        }
    }
};

// Materializes counts into prefix-packed slots sorted by non-increasing
// energy (K2), then computes totals under the instance weights.
inline Allocation materialize(const Instance& inst, const ConfigTables& tb,
                              const CountsSolution& counts, int horizon) {
    struct Inst {
        double energy;
        const SlotConfigCost* cfg;
    };
    std::vector<Inst> picks;
    for (int u = 0; u < inst.n_users(); ++u)
        for (int t = 0; t < inst.n_targets(); ++t)
            for (int k = 0; k < counts.n_joint(u, t); ++k)
                picks.push_back({tb.joint[u][t].min_energy_w, &tb.joint[u][t]});
    for (int u = 0; u < inst.n_users(); ++u)
        for (int k = 0; k < counts.n_user(u); ++k)
            picks.push_back({tb.user_only[u].min_energy_w, &tb.user_only[u]});
    for (int t = 0; t < inst.n_targets(); ++t)
        for (int k = 0; k < counts.n_target(t); ++k)
            picks.push_back({tb.target_only[t].min_energy_w, &tb.target_only[t]});
    std::stable_sort(picks.begin(), picks.end(),
                     [](const Inst& a, const Inst& b) { return a.energy > b.energy; });

    Allocation alloc;
    alloc.status = SolveStatus::Optimal;
    alloc.counts = counts;
    alloc.active_slots = static_cast<int>(picks.size());
    alloc.slots.resize(std::max<size_t>(horizon, picks.size()));
    double e_sum = 0.0, w_sum = 0.0;
    for (size_t s = 0; s < picks.size(); ++s) {
        const SlotConfigCost& c = *picks[s].cfg;
        SlotDecision& d = alloc.slots[s];
        d.comm = c.user >= 0;
        d.sense = c.target >= 0;
        d.user = c.user;
        d.target = c.target;
        d.tx_flat = c.argmin_tx;
        d.rx_flat = c.argmin_rx;
        d.energy_w = c.min_energy_w;
        e_sum += d.energy_w;
        w_sum += inst.omega.at(s);
    }
    alloc.energy_total_j = inst.slot_dur_s * e_sum;
    alloc.time_cost = inst.slot_dur_s * w_sum;
    alloc.time_ms = alloc.active_slots * inst.slot_dur_s * 1e3;
    alloc.objective =
        inst.weights.eta1 * alloc.energy_total_j + inst.weights.eta2 * alloc.time_cost;
    return alloc;
}

inline std::vector<double> omega_prefix_sums(const Instance& inst, int upto) {
    if (static_cast<int>(inst.omega.size()) < upto)
        throw std::invalid_argument("omega must cover the relaxed horizon (s_tilde)");
    std::vector<double> p(upto + 1, 0.0);
    for (int k = 0; k < upto; ++k) p[k + 1] = p[k] + inst.omega[k];
    return p;
}

inline Allocation solve_with(const Instance& inst, const ConfigTables& tb, double eta1,
                             double eta2, int s_cap, bool forbid_joint) {
    Allocation alloc;
    if (inst.s_bar() > s_cap) {
        alloc.status = SolveStatus::HorizonTooSmall;
        return alloc;
    }
    CountsSearch search;
    search.nu = inst.n_users();
    search.nt = inst.n_targets();
    search.tb = &tb;
    search.inst = &inst;
    search.eta1 = eta1;
    search.eta2 = eta2;
    search.s_cap = s_cap;
    search.forbid_joint = forbid_joint;
    search.omega_prefix = omega_prefix_sums(inst, inst.s_tilde());
    search.run();
    if (!search.best.found) {
        alloc.status = SolveStatus::Infeasible;
        return alloc;
    }
    return materialize(inst, tb, search.best, std::max(inst.horizon_s, search.best.active_slots));
}

} // namespace detail

inline Allocation solve(const Instance& inst, const ConfigTables& tb) {
    return detail::solve_with(inst, tb, inst.weights.eta1, inst.weights.eta2, inst.horizon_s,
                              false);
}

enum class BaselineKind { TLB, ELB, BL1, BL2, BL3 };

inline std::string baseline_name(BaselineKind k) {
    switch (k) {
        case BaselineKind::TLB: return "tlb";
        case BaselineKind::ELB: return "elb";
        case BaselineKind::BL1: return "bl1";
        case BaselineKind::BL2: return "bl2";
        case BaselineKind::BL3: return "bl3";
    }
    return "?";
}

namespace detail {

// Maximum-weight full matching of the smaller side via bitmask DP.
// Returns pairs (u, t); weight = |a_tx(beta_u)^H a_tx(theta_t)|.
inline std::vector<std::pair<int, int>> similarity_matching(const Instance& inst) {
    const int nu = inst.n_users(), nt = inst.n_targets();
    if (nu == 0 || nt == 0) return {};
    RMat w(nu, nt);
    std::vector<CVec> a_u(nu), a_t(nt);
    for (int u = 0; u < nu; ++u) a_u[u] = steering_vector(inst.array, Side::Tx, inst.users[u].beta_deg);
    for (int t = 0; t < nt; ++t)
        a_t[t] = steering_vector(inst.array, Side::Tx, inst.targets[t].aod_bar_deg);
    for (int u = 0; u < nu; ++u)
        for (int t = 0; t < nt; ++t) w(u, t) = std::abs(a_u[u].dot(a_t[t]));

    const bool users_small = nu <= nt;
    const int ns = users_small ? nu : nt; // small side, fully matched
    const int nl = users_small ? nt : nu;
    if (nl > 20) throw std::invalid_argument("matching instance too large");
    const int full = 1 << ns;
    const double neg = -kInf;
    std::vector<double> dp(full, neg);
    std::vector<std::vector<int>> choice(nl + 1, std::vector<int>(full, -2));
    dp[0] = 0.0;
    std::vector<double> ndp(full);
    for (int i = 0; i < nl; ++i) {
        ndp.assign(full, neg);
        for (int mask = 0; mask < full; ++mask) {
            if (dp[mask] == neg) continue;
            if (dp[mask] > ndp[mask]) { // large-side element i left unmatched
                ndp[mask] = dp[mask];
                choice[i + 1][mask] = -1;
            }
            for (int s = 0; s < ns; ++s) {
                if (mask & (1 << s)) continue;
                const double wt = users_small ? w(s, i) : w(i, s);
                const int m2 = mask | (1 << s);
                if (dp[mask] + wt > ndp[m2] + 1e-15) {
                    ndp[m2] = dp[mask] + wt;
                    choice[i + 1][m2] = s;
                }
            }
        }
        dp.swap(ndp);
    }
    std::vector<std::pair<int, int>> pairs;
    int mask = full - 1;
    for (int i = nl; i >= 1; --i) {
        const int s = choice[i][mask];
        if (s >= 0) {
            pairs.emplace_back(users_small ? s : i - 1, users_small ? i - 1 : s);
            mask &= ~(1 << s);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

// Remark-5 fallback: disjoint slots, max power, narrowest beam along the
// LoS/AOD direction; accepted only if every constraint holds.
inline std::optional<Allocation> fallback_allocation(const Instance& inst) {
    if (inst.s_tilde() > inst.horizon_s) return std::nullopt;
    ConfigTables tb;
    const int nu = inst.n_users(), nt = inst.n_targets();
    tb.user_only.resize(nu);
    tb.target_only.resize(nt);
    tb.joint.assign(std::max(nu, 1), std::vector<SlotConfigCost>(std::max(nt, 1)));
    const int pmax_tx = inst.cb_tx.grid.n_pow() - 1;
    const int pmax_rx = inst.cb_rx.grid.n_pow() - 1;
    for (int u = 0; u < nu; ++u) {
        const int b = inst.cb_tx.flat_index(
            inst.cb_tx.nearest_direction_idx(inst.users[u].beta_deg), 0, pmax_tx);
        const double snr = worst_case_snr(inst.h_bar[u], inst.unc.eps_csi, inst.z_tx,
                                          inst.cb_tx[b].vector, inst.sigma2_com_w)
                               .snr;
        if (snr < inst.users[u].snr_min) return std::nullopt;
        tb.user_only[u] = {SlotConfigCost::Kind::UserOnly, u,    -1, true,
                           inst.cb_tx[b].energy_w,          b,   -1};
    }
    for (int t = 0; t < nt; ++t) {
        const LinkGeometryCache cache(inst.array, inst.z_tx, inst.z_rx, inst.cb_tx, inst.cb_rx,
                                      inst.targets[t].aod_bar_deg, inst.rsi);
        const int b = inst.cb_tx.flat_index(
            inst.cb_tx.nearest_direction_idx(inst.targets[t].aod_bar_deg), 0, pmax_tx);
        const int c = inst.cb_rx.flat_index(
            inst.cb_rx.nearest_direction_idx(inst.targets[t].aod_bar_deg), 0, pmax_rx);
        if (!robust_sensing_feasible(cache, b, c, inst.targets[t].sinr_min, inst.targets[t].rc_bar,
                                     inst.unc_for_target(t), inst.sigma2_sen_w)
                 .feasible)
            return std::nullopt;
        tb.target_only[t] = {SlotConfigCost::Kind::TargetOnly,
                             -1,
                             t,
                             true,
                             inst.cb_tx[b].energy_w + inst.cb_rx[c].energy_w,
                             b,
                             c};
    }
    CountsSolution counts;
    counts.found = true;
    counts.n_joint = Eigen::MatrixXi::Zero(std::max(nu, 1), std::max(nt, 1));
    counts.n_user.resize(nu);
    counts.n_target.resize(nt);
    for (int u = 0; u < nu; ++u) counts.n_user(u) = inst.users[u].slots_com;
    for (int t = 0; t < nt; ++t) counts.n_target(t) = inst.targets[t].slots_sen;
    counts.active_slots = inst.s_tilde();
    Allocation alloc = materialize(inst, tb, counts, inst.horizon_s);
    alloc.fallback_used = true;
    return alloc;
}

// BL1: heuristic pairing forced joint for min(S_com, S_sen) slots, singles
// for the rest; no other pairing allowed.
inline Allocation solve_bl1(const Instance& inst, const ConfigTables& tb) {
    const auto pairs = similarity_matching(inst);
    const int nu = inst.n_users(), nt = inst.n_targets();
    CountsSolution counts;
    counts.n_joint = Eigen::MatrixXi::Zero(std::max(nu, 1), std::max(nt, 1));
    counts.n_user.resize(nu);
    counts.n_target.resize(nt);
    bool ok = true;
    for (auto [u, t] : pairs) {
        const int j = std::min(inst.users[u].slots_com, inst.targets[t].slots_sen);
        if (j > 0 && !tb.joint[u][t].feasible) ok = false;
        counts.n_joint(u, t) = j;
    }
    int joints = 0;
    for (int u = 0; u < nu && ok; ++u) {
        int served = 0;
        for (int t = 0; t < nt; ++t) served += counts.n_joint(u, t);
        counts.n_user(u) = inst.users[u].slots_com - served;
        if (counts.n_user(u) > 0 && !tb.user_only[u].feasible) ok = false;
        joints += served;
    }
    for (int t = 0; t < nt && ok; ++t) {
        int served = 0;
        for (int u = 0; u < nu; ++u) served += counts.n_joint(u, t);
        counts.n_target(t) = inst.targets[t].slots_sen - served;
        if (counts.n_target(t) > 0 && !tb.target_only[t].feasible) ok = false;
    }
    if (ok && inst.s_tilde() - joints > inst.horizon_s) ok = false;
    if (ok) {
        counts.found = true;
        counts.active_slots = inst.s_tilde() - joints;
        Allocation alloc = materialize(inst, tb, counts, inst.horizon_s);
        return alloc;
    }
    if (auto fb = fallback_allocation(inst)) return *fb;
    Allocation alloc;
    alloc.status = SolveStatus::Infeasible;
    return alloc;
}

} // namespace detail

inline Allocation solve_baseline(BaselineKind kind, const Instance& inst,
                                 const ConfigTables& tb) {
    switch (kind) {
        case BaselineKind::TLB:
            return detail::solve_with(inst, tb, 0.0, inst.weights.eta2, inst.horizon_s, false);
        case BaselineKind::ELB:
            return detail::solve_with(inst, tb, inst.weights.eta1, 0.0, inst.s_tilde(), false);
        case BaselineKind::BL3:
            return detail::solve_with(inst, tb, inst.weights.eta1, inst.weights.eta2,
                                      inst.horizon_s, true);
        case BaselineKind::BL2: {
            std::vector<char> keep(inst.cb_tx.size(), 0);
            const int pmax = inst.cb_tx.grid.n_pow() - 1;
            for (int b = 0; b < inst.cb_tx.size(); ++b) {
                const CodewordSpec& s = inst.cb_tx[b].spec;
                keep[b] = (s.bw_idx == 0 && s.pow_idx == pmax) ? 1 : 0;
            }
            const ConfigTables tb2 = build_tables(inst, &keep);
            return detail::solve_with(inst, tb2, inst.weights.eta1, inst.weights.eta2,
                                      inst.horizon_s, false);
        }
        case BaselineKind::BL1: return detail::solve_bl1(inst, tb);
    }
    throw std::logic_error("unknown baseline");
}

} // namespace isac

#endif // ISAC_SOLVER_HPP
