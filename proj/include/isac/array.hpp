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
// Deterministic array/channel mathematics: ULA steering vectors, target
// response matrices and their first-order model in the departure angle,
// mutual-coupling matrices, nominal residual self-interference geometry,
// UMa pathloss and Rician user channels.

#ifndef ISAC_ARRAY_HPP
#define ISAC_ARRAY_HPP

#include "isac/common.hpp"

#include <utility>

namespace isac {

enum class Side { Tx, Rx };

// Antenna geometry of the full-duplex BS: two collinear ULAs whose centers
// sit array_center_sep_m apart along the array axis.
struct ArrayConfig {
    int n_tx = 8;
    int n_rx = 16;
    double spacing_tx_wl = 0.5; // element spacing in wavelengths
    double spacing_rx_wl = 0.5;
    double wavelength_m = kSpeedOfLight / 41e9;
    double coupling_tx = 0.0; // |delta| << 1
    double coupling_rx = 0.0;
    double array_center_sep_m = 0.2;

    static ArrayConfig from_carrier_ghz(double fc_ghz) {
        if (fc_ghz <= 0.0) throw std::invalid_argument("carrier frequency must be positive");
        ArrayConfig c;
        c.wavelength_m = kSpeedOfLight / (fc_ghz * 1e9);
        return c;
    }

    int n(Side s) const { return s == Side::Tx ? n_tx : n_rx; }
    double spacing_wl(Side s) const { return s == Side::Tx ? spacing_tx_wl : spacing_rx_wl; }
    double coupling(Side s) const { return s == Side::Tx ? coupling_tx : coupling_rx; }

    void validate() const {
        if (n_tx < 1 || n_rx < 1) throw std::invalid_argument("array sizes must be >= 1");
        if (spacing_tx_wl <= 0.0 || spacing_rx_wl <= 0.0)
            throw std::invalid_argument("antenna spacings must be positive");
        if (std::abs(coupling_tx) >= 1.0 || std::abs(coupling_rx) >= 1.0)
            throw std::invalid_argument("|coupling| must be < 1");
        if (wavelength_m <= 0.0) throw std::invalid_argument("wavelength must be positive");
        if (array_center_sep_m < 0.0) throw std::invalid_argument("array center separation must be >= 0");
    }
};

// Element phase progression: phi_l = 2*pi*(d_l/lambda) * [(-N+1)/2, ..., (N-1)/2]^T.
inline RVec steering_phases(const ArrayConfig& cfg, Side side) {
    const int n = cfg.n(side);
    const double step = 2.0 * kPi * cfg.spacing_wl(side);
    RVec phi(n);
    for (int k = 0; k < n; ++k) phi(k) = step * (k - 0.5 * (n - 1));
    return phi;
}

// Phase-difference matrix Phi with [Phi]_{m,n} = [phi_rx]_m - [phi_tx]_n.
struct SteeringContext {
    RVec phi_tx;
    RVec phi_rx;
    RMat phi_matrix; // n_rx x n_tx

    explicit SteeringContext(const ArrayConfig& cfg)
        : phi_tx(steering_phases(cfg, Side::Tx)), phi_rx(steering_phases(cfg, Side::Rx)) {
        phi_matrix = phi_rx.replicate(1, cfg.n_tx) - phi_tx.transpose().replicate(cfg.n_rx, 1);
    }
};

// a_l(theta) = (1/sqrt(N_l)) exp(j phi_l cos(theta)); unit l2 norm for all theta.
inline CVec steering_vector(const ArrayConfig& cfg, Side side, double theta_deg) {
    const RVec phi = steering_phases(cfg, side);
    const double c = std::cos(deg2rad(theta_deg));
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n(side)));
    CVec a(phi.size());
    for (Eigen::Index k = 0; k < phi.size(); ++k) a(k) = std::polar(scale, phi(k) * c);
    return a;
}

// A(theta) = a_rx(theta) a_tx(theta)^H; rank one, unit Frobenius norm.
inline CMat response_matrix(const ArrayConfig& cfg, double theta_deg) {
    return steering_vector(cfg, Side::Rx, theta_deg) *
           steering_vector(cfg, Side::Tx, theta_deg).adjoint();
}

// First-order model around theta_bar: A(theta_bar + D) ~ A + Atilde * D, with
// Atilde = A o E and E = -j * Phi * sin(theta_bar). Returns (A, Atilde).
inline std::pair<CMat, CMat> linearized_response(const ArrayConfig& cfg, double theta_bar_deg) {
    const SteeringContext ctx(cfg);
    const CMat a = response_matrix(cfg, theta_bar_deg);
    const double s = std::sin(deg2rad(theta_bar_deg));
    CMat at(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            at(i, j) = a(i, j) * cplx(0.0, -ctx.phi_matrix(i, j) * s);
    return {a, at};
}

// Tridiagonal Toeplitz mutual-coupling matrix: unit diagonal, delta on the
// first off-diagonals.
inline RMat coupling_matrix(int n, double delta) {
    if (n < 1) throw std::invalid_argument("coupling matrix size must be >= 1");
    RMat z = RMat::Identity(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        z(i, i + 1) = delta;
        z(i + 1, i) = delta;
    }
    return z;
}

// UMa large-scale fading: 28 + 22 log10(r[m]) + 20 log10(fc[GHz]) dB.
inline double pathloss_db(double r_m, double fc_ghz) {
    if (r_m <= 0.0 || fc_ghz <= 0.0) throw std::domain_error("pathloss needs positive distance and frequency");
    return 28.0 + 22.0 * std::log10(r_m) + 20.0 * std::log10(fc_ghz);
}

// Nominal (deterministic) residual self-interference channel. Element (m, n)
// couples rx antenna m to tx antenna n over the axial distance d_{m,n}:
//   [Rbar]_{m,n} = lambda / (4 pi d_{m,n}) * 1/sqrt(N_rx N_tx) * exp(-j 2 pi d_{m,n} / lambda).
struct NominalRsi {
    CMat r_bar;    // n_rx x n_tx
    CVec r_bar_vec; // vec(Rbar), column-major
};

inline NominalRsi nominal_rsi(const ArrayConfig& cfg) {
    cfg.validate();
    const double lam = cfg.wavelength_m;
    const double d_tx = cfg.spacing_tx_wl * lam;
    const double d_rx = cfg.spacing_rx_wl * lam;
    // Both ULAs on a common axis, centers array_center_sep_m apart.
    auto pos = [](int k, int n, double d, double center) {
        return center + (k - 0.5 * (n - 1)) * d;
    };
    const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.n_rx) * cfg.n_tx);
    NominalRsi out;
    out.r_bar.resize(cfg.n_rx, cfg.n_tx);
    for (int m = 0; m < cfg.n_rx; ++m) {
        for (int n = 0; n < cfg.n_tx; ++n) {
            const double xm = pos(m, cfg.n_rx, d_rx, +0.5 * cfg.array_center_sep_m);
            const double xn = pos(n, cfg.n_tx, d_tx, -0.5 * cfg.array_center_sep_m);
            const double d = std::abs(xm - xn);
            if (d <= 0.0)
                throw std::invalid_argument("overlapping tx/rx elements: increase array center separation");
            out.r_bar(m, n) = std::polar(lam / (4.0 * kPi * d) * scale, -2.0 * kPi * d / lam);
        }
    }
    out.r_bar_vec = Eigen::Map<const CVec>(out.r_bar.data(), out.r_bar.size());
    return out;
}

// Rician user channel: h = gamma * (sqrt(K/(K+1)) vLoS + sqrt(1/(K+1)) vNLoS)
// with vLoS the tx steering vector at the LoS angle, vNLoS entrywise CN(0,1),
// and gamma the amplitude pathloss 10^(-PL_dB/20).
struct ChannelRealization {
    CVec h;
    double pathloss_db = 0.0;
    double los_angle_deg = 0.0;
    double rician_k = 0.0;
};

inline ChannelRealization generate_user_channel(RngStream& rng, const ArrayConfig& cfg,
                                                double beta_deg, double r_m, double k_factor) {
    if (k_factor < 0.0) throw std::invalid_argument("Rician K factor must be >= 0");
    const double fc_ghz = kSpeedOfLight / cfg.wavelength_m / 1e9;
    ChannelRealization out;
    out.pathloss_db = pathloss_db(r_m, fc_ghz);
    out.los_angle_deg = beta_deg;
    out.rician_k = k_factor;
    const double gamma = std::pow(10.0, -out.pathloss_db / 20.0);
    const CVec v_los = steering_vector(cfg, Side::Tx, beta_deg);
    const CVec v_nlos = rng.cnormal_vec(cfg.n_tx);
    const double w_los = std::sqrt(k_factor / (k_factor + 1.0));
    const double w_nlos = std::sqrt(1.0 / (k_factor + 1.0));
    out.h = gamma * (w_los * v_los + w_nlos * v_nlos);
    return out;
}

} // namespace isac

#endif // ISAC_ARRAY_HPP
