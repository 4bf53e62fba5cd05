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
// Independent verification of allocations: constraint-by-constraint checking
// against the transformed problem (constructing all auxiliary certificates),
// a brute-force enumeration oracle that avoids the solver's table/bound
// machinery, exhaustive truth tables for the logic linearizations, and
// Monte-Carlo sampling of the uncertainty sets.

#ifndef ISAC_VERIFY_HPP
#define ISAC_VERIFY_HPP

#include "isac/solver.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace isac {

struct ConstraintRecord {
    enum class Status { Pass, Fail, NotApplicable };
    std::string id;
    Status status = Status::NotApplicable;
    double worst_slack = 0.0; // scaled; pass requires >= -1e-9
};

struct CertValue {
    int i = -1; // user or target index
    int s = -1; // slot index
    double value = 0.0;
};

struct PiSupport { // nonzero pi_{b,c,t,s} / delta_{c,t,s} indicator tuples
    int b = -1, c = -1, t = -1, s = -1;
};

struct VerificationReport {
    std::vector<ConstraintRecord> records;
    std::vector<CertValue> alpha;     // E-family multiplier per (u, s)
    std::vector<CertValue> xi;        // I-family multiplier per (t, s)
    std::vector<CertValue> iota;      // J-family multiplier per (t, s)
    std::vector<CertValue> z;         // decoupling variable per (t, s)
    std::vector<PiSupport> pi_support; // pi = chi*rho*tau, one per sensing slot
    std::vector<PiSupport> delta_support; // delta = rho*tau (b unused)
    long mc_samples = 0;
    long mc_violations = 0;

    bool all_pass() const {
        for (const auto& r : records)
            if (r.status == ConstraintRecord::Status::Fail) return false;
        return true;
    }
    const ConstraintRecord* find(const std::string& id) const {
        for (const auto& r : records)
            if (r.id == id) return &r;
        return nullptr;
    }
};

namespace detail {

inline double scaled_slack(double lhs, double rhs) {
    // slack of lhs >= rhs, normalized by the dominant magnitude
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-12});
    return (lhs - rhs) / scale;
}

struct SlackTracker {
    double worst = kInf;
    bool touched = false;
    void geq(double lhs, double rhs) { // require lhs >= rhs
        worst = std::min(worst, scaled_slack(lhs, rhs));
        touched = true;
    }
    void eq(double lhs, double rhs) { // require lhs == rhs
        const double s = -std::abs(scaled_slack(lhs, rhs));
        worst = std::min(worst, s);
        touched = true;
    }
    ConstraintRecord record(const std::string& id) const {
        ConstraintRecord r;
        r.id = id;
        if (!touched) {
            r.status = ConstraintRecord::Status::NotApplicable;
            r.worst_slack = 0.0;
        } else {
            r.worst_slack = worst;
            r.status = worst >= -1e-9 ? ConstraintRecord::Status::Pass
                                      : ConstraintRecord::Status::Fail;
        }
        return r;
    }
};

} // namespace detail

// Full check of an allocation against the transformed problem. Constructs
// pi = chi*rho*tau and delta = rho*tau, sets z from the worst-case AOD
// numerator, and certifies the E/I/J blocks with the 1-D LMI search.
inline VerificationReport check_allocation(const Instance& inst, const Allocation& alloc) {
    const int nu = inst.n_users(), nt = inst.n_targets();
    const int ns = static_cast<int>(alloc.slots.size());
    const int ltx = inst.cb_tx.size(), lrx = inst.cb_rx.size();

    // structural validation before any constraint arithmetic
    for (const SlotDecision& d : alloc.slots) {
        if (d.comm && (d.user < 0 || d.user >= nu)) throw std::invalid_argument("bad user id");
        if (d.sense && (d.target < 0 || d.target >= nt))
            throw std::invalid_argument("bad target id");
        if ((d.comm || d.sense) && (d.tx_flat < 0 || d.tx_flat >= ltx))
            throw std::invalid_argument("active slot without a valid tx codeword");
        if (d.sense && (d.rx_flat < 0 || d.rx_flat >= lrx))
            throw std::invalid_argument("sensing slot without a valid rx codeword");
        if (!d.sense && d.rx_flat >= 0)
            throw std::invalid_argument("rx codeword on a non-sensing slot");
        if (!d.comm && !d.sense && d.tx_flat >= 0)
            throw std::invalid_argument("tx codeword on an idle slot");
    }

    VerificationReport rep;
    using ST = detail::SlackTracker;
    ST c1, c2, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c17, c22;
    ST fam_d, fam_e, fam_f, fam_h, fam_i, fam_j, fam_k1, fam_k2;

    std::vector<int> kappa(ns, 0), zeta(ns, 0), gamma(ns, 0);
    for (int s = 0; s < ns; ++s) {
        const SlotDecision& d = alloc.slots[s];
        kappa[s] = d.comm ? 1 : 0;
        zeta[s] = d.sense ? 1 : 0;
        gamma[s] = (d.comm || d.sense) ? 1 : 0;
        c1.geq(1.0, kappa[s]); // binary domains hold by construction
        c2.geq(1.0, zeta[s]);
        c5.geq(1.0, 1.0);
        c7.geq(1.0, 1.0);
        c9.geq(1.0, 1.0);
        c12.geq(1.0, 1.0);
        // D1-D4 realize gamma = kappa | zeta
        fam_d.geq(kappa[s] + zeta[s], gamma[s]);
        fam_d.geq(gamma[s], kappa[s]);
        fam_d.geq(gamma[s], zeta[s]);
        fam_d.geq(1.0, gamma[s]);
        // C6/C8: at most one user / target per slot; C10/C13: one codeword per
        // active functionality
        c6.eq(kappa[s], d.comm ? 1 : 0);
        c8.eq(zeta[s], d.sense ? 1 : 0);
        c10.eq(d.tx_flat >= 0 ? 1 : 0, gamma[s]);
        c13.eq(d.rx_flat >= 0 ? 1 : 0, zeta[s]);
        c11.eq(0.0, 0.0); // w_s is the selected codeword by construction
        c14.eq(0.0, 0.0);
    }
    int active = 0;
    for (int s = 0; s < ns; ++s) active += gamma[s];
    c4.geq(inst.horizon_s, active);

    for (int u = 0; u < nu; ++u) {
        int total = 0;
        for (int s = 0; s < ns; ++s)
            if (alloc.slots[s].comm && alloc.slots[s].user == u) ++total;
        c17.eq(total, inst.users[u].slots_com);
    }
    for (int t = 0; t < nt; ++t) {
        int total = 0;
        for (int s = 0; s < ns; ++s)
            if (alloc.slots[s].sense && alloc.slots[s].target == t) ++total;
        c22.eq(total, inst.targets[t].slots_sen);
    }

    // E family: robust SNR per served (u, s); slack from the closed form,
    // certificate from the LMI.
    for (int s = 0; s < ns; ++s) {
        const SlotDecision& d = alloc.slots[s];
        if (!d.comm) continue;
        const CVec& b = inst.cb_tx[d.tx_flat].vector;
        const UserSpec& us = inst.users[d.user];
        const WorstCaseSnr wc =
            worst_case_snr(inst.h_bar[d.user], inst.unc.eps_csi, inst.z_tx, b, inst.sigma2_com_w);
        fam_e.geq(wc.snr, us.snr_min);
        const LmiProblem e1 = build_lmi_e1(inst.h_bar[d.user], inst.unc.eps_csi, inst.z_tx, b,
                                           us.snr_min, inst.sigma2_com_w);
        const LmiDecision dec = lmi_feasible_1d(e1);
        if (!dec.feasible) fam_e.geq(-1.0, 0.0); // certificate must exist
        rep.alpha.push_back({d.user, s, dec.alpha});
        // K1 cutting plane: worst-case received power within the derived bound
        const CVec zw = inst.z_tx * b;
        const double lhs = sq(std::abs(inst.h_bar[d.user].dot(zw)) + inst.unc.eps_csi * zw.norm());
        fam_k1.geq(prefilter_k1(inst, d.user).numerator_ub, lhs);
    }

    // F/J logic families over the full index set (pi and delta are implicit
    // indicator products; only selected combinations are nonzero)
    for (int s = 0; s < ns; ++s) {
        const SlotDecision& d = alloc.slots[s];
        for (int t = 0; t < nt; ++t) {
            const int tau = (d.sense && d.target == t) ? 1 : 0;
            for (int c = 0; c < lrx; ++c) {
                const int rho = (d.rx_flat == c) ? 1 : 0;
                const int delta = rho * tau;
                fam_j.geq(rho, delta);
                fam_j.geq(tau, delta);
                fam_j.geq(delta, rho + tau - 1);
                fam_j.geq(delta, 0.0);
                fam_j.geq(1.0, delta);
                for (int b = 0; b < ltx && tau + rho > 0; ++b) {
                    const int chi = (d.tx_flat == b) ? 1 : 0;
                    const int pi = chi * rho * tau;
                    fam_f.geq(chi, pi);
                    fam_f.geq(rho, pi);
                    fam_f.geq(tau, pi);
                    fam_f.geq(2.0 + pi, chi + rho + tau);
                    fam_f.geq(pi, 0.0);
                    fam_f.geq(1.0, pi);
                }
            }
        }
    }

    // H/I/J sensing chain per sensing slot: z from the worst-case numerator,
    // M_ub scan for H4, LMI certificates for I1 and J5.
    std::map<int, std::pair<CMat, CMat>> lin_by_target;
    std::map<int, double> m_ub_by_target;
    for (int s = 0; s < ns; ++s) {
        const SlotDecision& d = alloc.slots[s];
        if (!d.sense) continue;
        const int t = d.target;
        const TargetSpec& ts = inst.targets[t];
        const UncertaintyConfig unc = inst.unc_for_target(t);
        if (!lin_by_target.count(t))
            lin_by_target[t] = linearized_response(inst.array, ts.aod_bar_deg);
        const auto& [a_mat, at_mat] = lin_by_target[t];
        const CVec a_vec = Eigen::Map<const CVec>(a_mat.data(), a_mat.size());
        const CVec at_vec = Eigen::Map<const CVec>(at_mat.data(), at_mat.size());
        const CVec q = inst.z_tx * inst.cb_tx[d.tx_flat].vector;
        const CVec p = inst.z_rx * inst.cb_rx[d.rx_flat].vector;
        CVec dv(q.size() * p.size());
        for (Eigen::Index j = 0; j < q.size(); ++j)
            dv.segment(j * p.size(), p.size()) = std::conj(q(j)) * p;
        const double noise_gain = p.squaredNorm();

        const RcThreshold rc = worst_case_rc_threshold(ts.sinr_min, ts.rc_bar, unc.eps_rc);
        if (!rc.feasible) {
            fam_h.geq(-1.0, 0.0);
            continue;
        }
        rep.pi_support.push_back({d.tx_flat, d.rx_flat, t, s});
        rep.delta_support.push_back({-1, d.rx_flat, t, s});
        const double zval =
            worst_case_aod_numerator(a_vec, at_vec, unc.eps_aod_rad, dv, inst.sigma2_sen_w).value;
        rep.z.push_back({t, s, zval});
        fam_h.geq(zval, 0.0); // H1
        // H3: worst-case interference side must stay below z
        const double rsi = worst_case_rsi_power(inst.rsi.r_bar_vec, unc.upsilon, unc.eps_rsi, dv).power;
        fam_h.geq(zval, rc.lambda_bar * (rsi / inst.sigma2_sen_w + noise_gain));
        // H4: z <= tau * M_ub with M_ub the max clean numerator over the menu
        if (!m_ub_by_target.count(t)) {
            double m_ub = 0.0;
            for (int b = 0; b < ltx; ++b) {
                const CVec qb = inst.z_tx * inst.cb_tx[b].vector;
                for (int c = 0; c < lrx; ++c) {
                    const CVec pc = inst.z_rx * inst.cb_rx[c].vector;
                    const cplx v = pc.dot(a_mat * qb);
                    m_ub = std::max(m_ub, abs2(v) / inst.sigma2_sen_w);
                }
            }
            m_ub_by_target[t] = m_ub;
        }
        fam_h.geq(m_ub_by_target[t], zval);
        // I1 certificate
        const LmiDecision di = lmi_feasible_1d(
            build_lmi_i1(a_vec, at_vec, unc.eps_aod_rad, dv, zval, inst.sigma2_sen_w));
        if (!di.feasible) fam_i.geq(-1.0, 0.0);
        else fam_i.geq(1.0, 0.0);
        rep.xi.push_back({t, s, di.alpha});
        // J5 certificate
        const LmiDecision dj = lmi_feasible_1d(
            build_lmi_j5(inst.rsi.r_bar_vec, unc.upsilon, unc.eps_rsi, dv, rc.lambda_bar,
                         noise_gain, zval, inst.sigma2_sen_w));
        if (!dj.feasible) fam_j.geq(-1.0, 0.0);
        rep.iota.push_back({t, s, dj.alpha});
    }

    // K2: per-slot allocated power non-increasing over the horizon
    for (int s = 0; s + 1 < ns; ++s)
        fam_k2.geq(alloc.slots[s].energy_w, alloc.slots[s + 1].energy_w);
    // Lemma-1 compactness: active slots form a prefix
    for (int s = 0; s + 1 < ns; ++s) fam_k2.geq(gamma[s], gamma[s + 1]);

    rep.records.push_back(c1.record("C1"));
    rep.records.push_back(c2.record("C2"));
    rep.records.push_back(fam_d.record("C3/D"));
    rep.records.push_back(c4.record("C4"));
    rep.records.push_back(c5.record("C5"));
    rep.records.push_back(c6.record("C6"));
    rep.records.push_back(c7.record("C7"));
    rep.records.push_back(c8.record("C8"));
    rep.records.push_back(c9.record("C9"));
    rep.records.push_back(c10.record("C10"));
    rep.records.push_back(c11.record("C11"));
    rep.records.push_back(c12.record("C12"));
    rep.records.push_back(c13.record("C13"));
    rep.records.push_back(c14.record("C14"));
    rep.records.push_back(c17.record("C17"));
    rep.records.push_back(c22.record("C22"));
    rep.records.push_back(fam_e.record("E"));
    rep.records.push_back(fam_f.record("F"));
    rep.records.push_back(fam_h.record("H"));
    rep.records.push_back(fam_i.record("I"));
    rep.records.push_back(fam_j.record("J"));
    rep.records.push_back(fam_k1.record("K1"));
    rep.records.push_back(fam_k2.record("K2"));
    return rep;
}

// ----------------------------------------------------------------------------
// Brute-force optimum. Enumerates service-pattern counts exhaustively (the
// sorted-multiset reduction over slots) and prices every pattern by a fresh
// codeword scan built from raw response matrices and Kronecker vectors --
// no LinkGeometryCache, no tables, no bounds.

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

struct EnumerationResult {
    SolveStatus status = SolveStatus::Infeasible;
    double objective = kInf;
    int active_slots = 0;
};

namespace oracle {

struct PatternCost {
    bool feasible = false;
    double energy_w = kInf;
};

inline CVec kron_pair(const CVec& q, const CVec& p) {
    CVec d(q.size() * p.size());
    for (Eigen::Index j = 0; j < q.size(); ++j)
        d.segment(j * p.size(), p.size()) = std::conj(q(j)) * p;
    return d;
}

inline bool sensing_ok(const Instance& inst, const CMat& a_mat, const CMat& at_mat, int t, int b,
                       int c) {
    const TargetSpec& ts = inst.targets[t];
    const UncertaintyConfig unc = inst.unc_for_target(t);
    const RcThreshold rc = worst_case_rc_threshold(ts.sinr_min, ts.rc_bar, unc.eps_rc);
    if (!rc.feasible) return false;
    const CVec q = inst.z_tx * inst.cb_tx[b].vector;
    const CVec p = inst.z_rx * inst.cb_rx[c].vector;
    const CVec dv = kron_pair(q, p);
    const CVec a_vec = Eigen::Map<const CVec>(a_mat.data(), a_mat.size());
    const CVec at_vec = Eigen::Map<const CVec>(at_mat.data(), at_mat.size());
    const double num =
        worst_case_aod_numerator(a_vec, at_vec, unc.eps_aod_rad, dv, inst.sigma2_sen_w).value;
    const double rsi =
        worst_case_rsi_power(inst.rsi.r_bar_vec, unc.upsilon, unc.eps_rsi, dv).power;
    return num >= rc.lambda_bar * (rsi / inst.sigma2_sen_w + p.squaredNorm());
}

inline bool snr_ok(const Instance& inst, int u, int b) {
    return worst_case_snr(inst.h_bar[u], inst.unc.eps_csi, inst.z_tx, inst.cb_tx[b].vector,
                          inst.sigma2_com_w)
               .snr >= inst.users[u].snr_min;
}

inline PatternCost price_user(const Instance& inst, int u) {
    PatternCost out;
    for (int b = 0; b < inst.cb_tx.size(); ++b)
        if (inst.cb_tx[b].energy_w < out.energy_w && snr_ok(inst, u, b)) {
            out.energy_w = inst.cb_tx[b].energy_w;
            out.feasible = true;
        }
    return out;
}

inline PatternCost price_target(const Instance& inst, const CMat& a_mat, const CMat& at_mat,
                                int t) {
    PatternCost out;
    for (int b = 0; b < inst.cb_tx.size(); ++b)
        for (int c = 0; c < inst.cb_rx.size(); ++c) {
            const double e = inst.cb_tx[b].energy_w + inst.cb_rx[c].energy_w;
            if (e < out.energy_w && sensing_ok(inst, a_mat, at_mat, t, b, c)) {
                out.energy_w = e;
                out.feasible = true;
            }
        }
    return out;
}

inline PatternCost price_joint(const Instance& inst, const CMat& a_mat, const CMat& at_mat, int u,
                               int t) {
    PatternCost out;
    for (int b = 0; b < inst.cb_tx.size(); ++b) {
        if (!snr_ok(inst, u, b)) continue;
        for (int c = 0; c < inst.cb_rx.size(); ++c) {
            const double e = inst.cb_tx[b].energy_w + inst.cb_rx[c].energy_w;
            if (e < out.energy_w && sensing_ok(inst, a_mat, at_mat, t, b, c)) {
                out.energy_w = e;
                out.feasible = true;
            }
        }
    }
    return out;
}

} // namespace oracle

inline EnumerationResult enumerate_optimum(const Instance& inst,
                                           std::uint64_t node_budget = 100000000ull) {
    const int nu = inst.n_users(), nt = inst.n_targets();
    // fresh per-pattern pricing
    std::vector<oracle::PatternCost> user_cost(nu), target_cost(nt);
    std::vector<std::vector<oracle::PatternCost>> joint_cost(nu,
                                                             std::vector<oracle::PatternCost>(nt));
    const std::uint64_t scan_cost =
        static_cast<std::uint64_t>(nu * nt + nu + nt) *
        static_cast<std::uint64_t>(inst.cb_tx.size()) * inst.cb_rx.size();
    if (scan_cost > node_budget) throw BudgetExceeded();
    for (int u = 0; u < nu; ++u) user_cost[u] = oracle::price_user(inst, u);
    for (int t = 0; t < nt; ++t) {
        const auto [a_mat, at_mat] = linearized_response(inst.array, inst.targets[t].aod_bar_deg);
        target_cost[t] = oracle::price_target(inst, a_mat, at_mat, t);
        for (int u = 0; u < nu; ++u)
            joint_cost[u][t] = oracle::price_joint(inst, a_mat, at_mat, u, t);
    }

    std::vector<double> omega_prefix(inst.s_tilde() + 1, 0.0);
    for (int k = 0; k < inst.s_tilde(); ++k)
        omega_prefix[k + 1] = omega_prefix[k] + inst.omega.at(k);

    std::vector<int> rem_com(nu), rem_sen(nt);
    for (int u = 0; u < nu; ++u) rem_com[u] = inst.users[u].slots_com;
    for (int t = 0; t < nt; ++t) rem_sen[t] = inst.targets[t].slots_sen;

    EnumerationResult best;
    std::uint64_t nodes = 0;

    // exhaustive over joint counts; singles are forced by the exact demands
    auto finish = [&](int joints, double energy) {
        double e = energy;
        for (int u = 0; u < nu; ++u) {
            if (rem_com[u] == 0) continue;
            if (!user_cost[u].feasible) return;
            e += rem_com[u] * user_cost[u].energy_w;
        }
        for (int t = 0; t < nt; ++t) {
            if (rem_sen[t] == 0) continue;
            if (!target_cost[t].feasible) return;
            e += rem_sen[t] * target_cost[t].energy_w;
        }
        const int n_active = inst.s_tilde() - joints;
        if (n_active > inst.horizon_s) return;
        const double obj = inst.weights.eta1 * inst.slot_dur_s * e +
                           inst.weights.eta2 * inst.slot_dur_s * omega_prefix[n_active];
        if (obj < best.objective - 1e-12) {
            best.status = SolveStatus::Optimal;
            best.objective = obj;
            best.active_slots = n_active;
        }
    };

    std::function<void(int, int, double)> rec = [&](int cell, int joints, double energy) {
        if (++nodes > node_budget) throw BudgetExceeded();
        if (cell == nu * nt || nu == 0 || nt == 0) {
            finish(joints, energy);
            return;
        }
        const int u = cell / nt, t = cell % nt;
        int vmax = std::min(rem_com[u], rem_sen[t]);
        if (!joint_cost[u][t].feasible) vmax = 0;
        for (int v = 0; v <= vmax; ++v) {
            rem_com[u] -= v;
            rem_sen[t] -= v;
            rec(cell + 1, joints + v, energy + (v > 0 ? v * joint_cost[u][t].energy_w : 0.0));
            rem_com[u] += v;
            rem_sen[t] += v;
        }
    };
    rec(0, 0, 0.0);
    return best;
}

// Independent minimum-active-slot search: maximizes the number of shared
// slots subject to feasibility, using the oracle scans only.
inline std::optional<int> min_active_slots(const Instance& inst) {
    const int nu = inst.n_users(), nt = inst.n_targets();
    std::vector<oracle::PatternCost> user_cost(nu), target_cost(nt);
    std::vector<std::vector<oracle::PatternCost>> joint_cost(nu,
                                                             std::vector<oracle::PatternCost>(nt));
    for (int u = 0; u < nu; ++u) user_cost[u] = oracle::price_user(inst, u);
    for (int t = 0; t < nt; ++t) {
        const auto [a_mat, at_mat] = linearized_response(inst.array, inst.targets[t].aod_bar_deg);
        target_cost[t] = oracle::price_target(inst, a_mat, at_mat, t);
        for (int u = 0; u < nu; ++u)
            joint_cost[u][t] = oracle::price_joint(inst, a_mat, at_mat, u, t);
    }
    std::vector<int> rem_com(nu), rem_sen(nt);
    for (int u = 0; u < nu; ++u) rem_com[u] = inst.users[u].slots_com;
    for (int t = 0; t < nt; ++t) rem_sen[t] = inst.targets[t].slots_sen;
    int best_j = -1;
    std::function<void(int, int)> rec = [&](int cell, int joints) {
        if (cell == nu * nt || nu == 0 || nt == 0) {
            for (int u = 0; u < nu; ++u)
                if (rem_com[u] > 0 && !user_cost[u].feasible) return;
            for (int t = 0; t < nt; ++t)
                if (rem_sen[t] > 0 && !target_cost[t].feasible) return;
            if (inst.s_tilde() - joints > inst.horizon_s) return;
            best_j = std::max(best_j, joints);
            return;
        }
        const int u = cell / nt, t = cell % nt;
        int vmax = std::min(rem_com[u], rem_sen[t]);
        if (!joint_cost[u][t].feasible) vmax = 0;
        for (int v = vmax; v >= 0; --v) {
            rem_com[u] -= v;
            rem_sen[t] -= v;
            rec(cell + 1, joints + v);
            rem_com[u] += v;
            rem_sen[t] += v;
        }
    };
    rec(0, 0);
    if (best_j < 0) return std::nullopt;
    return inst.s_tilde() - best_j;
}

// ----------------------------------------------------------------------------
// Logic-reformulation truth tables: the linear systems force the products on
// every binary assignment.

struct LogicCheck {
    bool d_family = false; // 8 cases:  D1-D4 + gamma in [0,1]  <=>  gamma = kappa | zeta
    bool f_family = false; // 16 cases: F1-F5                   <=>  pi = chi*rho*tau
    bool j_family = false; // 8 cases:  J1-J4                   <=>  delta = rho*tau
    bool all() const { return d_family && f_family && j_family; }
};

inline LogicCheck check_logic_reformulations() {
    LogicCheck out;
    out.d_family = true;
    for (int k = 0; k <= 1; ++k)
        for (int z = 0; z <= 1; ++z)
            for (int g = 0; g <= 1; ++g) {
                const bool sys = (g <= k + z) && (g >= k) && (g >= z) && (g <= 1);
                const bool truth = (g == (k | z));
                if (sys != truth) out.d_family = false;
            }
    out.f_family = true;
    for (int x = 0; x <= 1; ++x)
        for (int r = 0; r <= 1; ++r)
            for (int t = 0; t <= 1; ++t)
                for (int p = 0; p <= 1; ++p) {
                    const bool sys =
                        (p <= x) && (p <= r) && (p <= t) && (2 + p >= x + r + t) && p >= 0 && p <= 1;
                    const bool truth = (p == x * r * t);
                    if (sys != truth) out.f_family = false;
                }
    out.j_family = true;
    for (int r = 0; r <= 1; ++r)
        for (int t = 0; t <= 1; ++t)
            for (int dl = 0; dl <= 1; ++dl) {
                const bool sys = (dl <= r) && (dl <= t) && (dl >= r + t - 1) && dl >= 0 && dl <= 1;
                const bool truth = (dl == r * t);
                if (sys != truth) out.j_family = false;
            }
    return out;
}

// ----------------------------------------------------------------------------
// Monte-Carlo robustness: joint uniform-in-ball realizations of all four
// uncertainty sets. The linearized-model count is the soundness check for the
// certificates; the nonlinear count measures the first-order model error.

struct McResult {
    long samples = 0;
    long violations_linear = 0;
    long violations_nonlinear = 0;
};

inline McResult monte_carlo_robustness(const Instance& inst, const Allocation& alloc,
                                       long n_samples, RngStream& rng) {
    McResult out;
    const int nu = inst.n_users(), nt = inst.n_targets();
    std::vector<std::pair<CMat, CMat>> lin(nt);
    for (int t = 0; t < nt; ++t) lin[t] = linearized_response(inst.array, inst.targets[t].aod_bar_deg);

    const double rel_tol = 1e-9;
    for (long it = 0; it < n_samples; ++it) {
        std::vector<CVec> dh(nu);
        for (int u = 0; u < nu; ++u) dh[u] = rng.uniform_ball_complex(inst.array.n_tx, inst.unc.eps_csi);
        std::vector<double> dtheta(nt);
        std::vector<cplx> dpsi(nt);
        for (int t = 0; t < nt; ++t) {
            dtheta[t] = rng.uniform(-inst.unc.eps_aod_rad, inst.unc.eps_aod_rad);
            dpsi[t] = rng.uniform_disk(inst.targets[t].eps_rc);
        }
        const CVec dr = rng.uniform_ball_complex(inst.array.n_rx * inst.array.n_tx, inst.unc.eps_rsi);

        bool viol_lin = false, viol_nonlin = false;
        for (const SlotDecision& d : alloc.slots) {
            if (d.comm) {
                const CVec h = inst.h_bar[d.user] + dh[d.user];
                const double snr =
                    abs2(h.dot(inst.z_tx * inst.cb_tx[d.tx_flat].vector)) / inst.sigma2_com_w;
                if (snr < inst.users[d.user].snr_min * (1.0 - rel_tol)) {
                    viol_lin = true;
                    viol_nonlin = true;
                }
            }
            if (d.sense) {
                const int t = d.target;
                const CVec q = inst.z_tx * inst.cb_tx[d.tx_flat].vector;
                const CVec p = inst.z_rx * inst.cb_rx[d.rx_flat].vector;
                const cplx psi = inst.targets[t].rc_bar + dpsi[t];
                // realized RSI channel: upsilon * (Rbar + dR)
                const CVec dv = oracle::kron_pair(q, p);
                const cplx ir = dv.dot(inst.rsi.r_bar_vec + dr);
                const double den =
                    sq(inst.unc.upsilon) * abs2(ir) + inst.sigma2_sen_w * p.squaredNorm();
                const double lam = inst.targets[t].sinr_min * (1.0 - rel_tol);
                // linearized steering model
                const CMat a_lin = lin[t].first + lin[t].second * dtheta[t];
                const double num_lin = abs2(psi) * abs2(p.dot(a_lin * q));
                if (num_lin < lam * den) viol_lin = true;
                // true nonlinear model
                const CMat a_non =
                    response_matrix(inst.array, inst.targets[t].aod_bar_deg + rad2deg(dtheta[t]));
                const double num_non = abs2(psi) * abs2(p.dot(a_non * q));
                if (num_non < lam * den) viol_nonlin = true;
            }
        }
        ++out.samples;
        if (viol_lin) ++out.violations_linear;
        if (viol_nonlin) ++out.violations_nonlinear;
    }
    return out;
}

} // namespace isac

#endif // ISAC_VERIFY_HPP
