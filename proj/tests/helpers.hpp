// SPDX-License-Identifier: Apache-2.0
//
// Test-only instance builders.

#ifndef ISAC_TESTS_HELPERS_HPP
#define ISAC_TESTS_HELPERS_HPP

#include "isac/verify.hpp"

namespace isac::testutil {

struct TinyParams {
    int n_users = 1, n_targets = 1;
    std::vector<double> beta_deg{90.0};
    std::vector<double> r_m{50.0};
    std::vector<double> snr_min{50.0};
    std::vector<int> slots_com{1};
    std::vector<double> aod_deg{90.0};
    std::vector<double> rc_mag{1e-3};
    std::vector<double> sinr_min{2.0};
    std::vector<int> slots_sen{1};
    int horizon = 1;
    double eta1 = 1.0, eta2 = 1.0, delta0 = 1.0, delta_omega = 1.0;
    UncertaintyConfig unc;
    double eps_rc_rel = 0.0;
    std::vector<double> tx_dirs{70, 90, 110};
    std::vector<double> tx_bws{25, 51};
    std::vector<double> tx_pows{0.2, 1.0};
    std::vector<double> rx_dirs{70, 90, 110};
    std::vector<double> rx_bws{25};
    std::vector<double> rx_pows{0.1};
    int n_tx = 4, n_rx = 4;
    std::uint64_t channel_seed = 7;
    double rician_k = 100.0;
};

inline Instance make_instance(const TinyParams& p) {
    Instance inst;
    inst.array = ArrayConfig::from_carrier_ghz(41.0);
    inst.array.n_tx = p.n_tx;
    inst.array.n_rx = p.n_rx;
    inst.prepare();
    BeamGrid gtx;
    gtx.directions_deg = p.tx_dirs;
    gtx.beamwidth_classes_deg = p.tx_bws;
    gtx.power_levels_w = p.tx_pows;
    BeamGrid grx;
    grx.directions_deg = p.rx_dirs;
    grx.beamwidth_classes_deg = p.rx_bws;
    grx.power_levels_w = p.rx_pows;
    inst.cb_tx = build_codebook(inst.array, Side::Tx, gtx);
    inst.cb_rx = build_codebook(inst.array, Side::Rx, grx);
    RngStream rng(p.channel_seed);
    inst.users.resize(p.n_users);
    inst.h_bar.resize(p.n_users);
    for (int u = 0; u < p.n_users; ++u) {
        inst.users[u] = {p.beta_deg[u], p.r_m[u], p.snr_min[u], p.slots_com[u]};
        inst.h_bar[u] =
            generate_user_channel(rng, inst.array, p.beta_deg[u], p.r_m[u], p.rician_k).h;
    }
    inst.targets.resize(p.n_targets);
    for (int t = 0; t < p.n_targets; ++t) {
        inst.targets[t] = {p.aod_deg[t], cplx(p.rc_mag[t], 0.0), p.sinr_min[t], p.slots_sen[t],
                           p.eps_rc_rel * p.rc_mag[t]};
    }
    inst.unc = p.unc;
    inst.weights = {p.eta1, p.eta2, p.delta0, p.delta_omega};
    inst.horizon_s = p.horizon;
    inst.omega = design_weights(std::max(inst.s_tilde(), 1), p.delta0, p.delta_omega);
    return inst;
}

// Random tiny instance within the enumeration oracle's comfort zone
// (U <= 2, T <= 2, S <= 4, L_tx <= 12, L_rx <= 6), mixing feasible and
// infeasible draws.
inline Instance random_tiny_instance(RngStream& rng, bool time_priority = true) {
    TinyParams p;
    p.channel_seed = static_cast<std::uint64_t>(rng.uniform(0, 1e9));
    p.n_users = 1 + static_cast<int>(rng.uniform(0, 2));
    p.n_targets = 1 + static_cast<int>(rng.uniform(0, 2));
    p.beta_deg.clear();
    p.r_m.clear();
    p.snr_min.clear();
    p.slots_com.clear();
    for (int u = 0; u < p.n_users; ++u) {
        p.beta_deg.push_back(rng.uniform(60, 120));
        p.r_m.push_back(rng.uniform(30, 70));
        p.snr_min.push_back(std::pow(10.0, rng.uniform(1.0, 3.5)));
        p.slots_com.push_back(1 + static_cast<int>(rng.uniform(0, 2)));
    }
    p.aod_deg.clear();
    p.rc_mag.clear();
    p.sinr_min.clear();
    p.slots_sen.clear();
    for (int t = 0; t < p.n_targets; ++t) {
        p.aod_deg.push_back(rng.uniform(60, 120));
        p.rc_mag.push_back(rng.uniform(4e-4, 12e-4));
        p.sinr_min.push_back(std::pow(10.0, rng.uniform(0.0, 3.2)));
        p.slots_sen.push_back(1 + static_cast<int>(rng.uniform(0, 2)));
    }
    int s_bar = std::max(p.slots_com[0] + (p.n_users > 1 ? p.slots_com[1] : 0),
                         p.slots_sen[0] + (p.n_targets > 1 ? p.slots_sen[1] : 0));
    int s_tilde = p.slots_com[0] + (p.n_users > 1 ? p.slots_com[1] : 0) + p.slots_sen[0] +
                  (p.n_targets > 1 ? p.slots_sen[1] : 0);
    p.horizon = std::min(4, s_bar + static_cast<int>(rng.uniform(0, s_tilde - s_bar + 1)));
    if (p.horizon < s_bar) p.horizon = s_bar; // keep within the oracle's S <= 4 envelope
    p.eta1 = 1.0;
    p.delta0 = p.delta_omega = (rng.uniform() < 0.5) ? 1.0 : 2.0;
    p.eta2 = time_priority && rng.uniform() < 0.7
                 ? 1.01 * priority_eta2_threshold(1.0, p.horizon, 1.0, 0.1, p.delta0)
                 : rng.uniform(0.1, 2.0);
    if (rng.uniform() < 0.5) {
        p.unc.eps_csi = rng.uniform(0.0, 4.0) * 1e-7;
        p.unc.eps_aod_rad = deg2rad(rng.uniform(0.0, 3.0));
        p.eps_rc_rel = rng.uniform(0.0, 0.6);
        p.unc.upsilon = rng.uniform(0.0, 0.3);
    }
    Instance inst = make_instance(p);
    if (p.unc.upsilon > 0.0) inst.unc.eps_rsi = rng.uniform(0.0, 0.5) * inst.rsi.r_bar.norm();
    return inst;
}

} // namespace isac::testutil

#endif // ISAC_TESTS_HELPERS_HPP
