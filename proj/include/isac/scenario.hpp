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

#ifndef ISAC_SCENARIO_HPP
#define ISAC_SCENARIO_HPP

#include "isac/lmi.hpp"

#include <numeric>
#include <vector>

namespace isac {

struct UserSpec {
    double beta_deg = 90.0; // LoS angle
    double r_m = 50.0;      // BS distance
    double snr_min = 1.0;   // linear SNR requirement
    int slots_com = 1;      // exact timeslot demand
};

struct TargetSpec {
    double aod_bar_deg = 90.0; // estimated departure angle
    cplx rc_bar = 1e-3;        // estimated reflection coefficient
    double sinr_min = 1.0;     // linear SINR requirement
    int slots_sen = 1;         // dwell-time demand
    double eps_rc = 0.0;       // RC disk radius, absolute
};

struct ObjectiveWeights {
    double eta1 = 1.0;
    double eta2 = 1.0;
    double delta0 = 1.0;  // omega_1
    double delta_omega = 1.0;
};

// Fully-resolved optimization input: geometry, menus, drawn channels and
// demands. Everything downstream (tables, solver, verifier) is a pure
// function of an Instance.
struct Instance {
    ArrayConfig array;
    RMat z_tx, z_rx;
    Codebook cb_tx, cb_rx;
    NominalRsi rsi;
    std::vector<UserSpec> users;
    std::vector<CVec> h_bar; // estimated channel per user
    std::vector<TargetSpec> targets;
    UncertaintyConfig unc; // eps_rc lives on each target
    ObjectiveWeights weights;
    int horizon_s = 1;
    double slot_dur_s = 1e-3;
    double sigma2_com_w = dbm_to_watt(-110.0);
    double sigma2_sen_w = dbm_to_watt(-70.0);
    std::vector<double> omega; // slot weights, length >= s_tilde()

    int n_users() const { return static_cast<int>(users.size()); }
    int n_targets() const { return static_cast<int>(targets.size()); }

    int s_hat() const { // total communication demand
        return std::accumulate(users.begin(), users.end(), 0,
                               [](int a, const UserSpec& u) { return a + u.slots_com; });
    }
    int s_check() const { // total sensing demand
        return std::accumulate(targets.begin(), targets.end(), 0,
                               [](int a, const TargetSpec& t) { return a + t.slots_sen; });
    }
    int s_tilde() const { return s_hat() + s_check(); } // no pairing at all
    int s_bar() const { return std::max(s_hat(), s_check()); } // maximal pairing

    double p_tx_max() const { return cb_tx.grid.power_levels_w.back(); }
    double p_rx_max() const { return cb_rx.grid.power_levels_w.back(); }

    UncertaintyConfig unc_for_target(int t) const {
        UncertaintyConfig u = unc;
        u.eps_rc = targets.at(t).eps_rc;
        return u;
    }

    // Derives coupling matrices and the nominal RSI from the array config.
    void prepare() {
        array.validate();
        unc.validate();
        z_tx = coupling_matrix(array.n_tx, array.coupling_tx);
        z_rx = coupling_matrix(array.n_rx, array.coupling_rx);
        rsi = nominal_rsi(array);
    }
};

} // namespace isac

#endif // ISAC_SCENARIO_HPP
