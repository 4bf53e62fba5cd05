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
// Analog beam menus over direction x beamwidth x power grids. Beam widening
// uses center-aligned contiguous active subarrays: the half-power width of a
// ULA is ~0.886*lambda/(N_act*d), so each nominal width class maps to the
// subarray size that realizes it.

#ifndef ISAC_CODEBOOK_HPP
#define ISAC_CODEBOOK_HPP

#include "isac/array.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <vector>

namespace isac {

struct BeamGrid {
    std::vector<double> directions_deg;      // strictly increasing
    std::vector<double> beamwidth_classes_deg; // nominal half-power widths
    std::vector<double> power_levels_w;      // strictly increasing, positive

    static BeamGrid from_direction_range(double start_deg, double stop_deg, double step_deg,
                                         std::vector<double> beamwidths_deg,
                                         std::vector<double> powers_w) {
        BeamGrid g;
        for (double d = start_deg; d <= stop_deg + 1e-9; d += step_deg) g.directions_deg.push_back(d);
        g.beamwidth_classes_deg = std::move(beamwidths_deg);
        g.power_levels_w = std::move(powers_w);
        g.validate();
        return g;
    }

    int n_dir() const { return static_cast<int>(directions_deg.size()); }
    int n_bw() const { return static_cast<int>(beamwidth_classes_deg.size()); }
    int n_pow() const { return static_cast<int>(power_levels_w.size()); }
    int size() const { return n_dir() * n_bw() * n_pow(); }

    void validate() const {
        if (directions_deg.empty() || beamwidth_classes_deg.empty() || power_levels_w.empty())
            throw std::invalid_argument("beam grid lists must be non-empty");
        for (size_t i = 1; i < directions_deg.size(); ++i)
            if (directions_deg[i] <= directions_deg[i - 1])
                throw std::invalid_argument("directions must be strictly increasing");
        for (size_t i = 1; i < power_levels_w.size(); ++i)
            if (power_levels_w[i] <= power_levels_w[i - 1])
                throw std::invalid_argument("power levels must be strictly increasing");
        for (double p : power_levels_w)
            if (p <= 0.0) throw std::invalid_argument("power levels must be positive");
    }
};

struct CodewordSpec {
    Side side = Side::Tx;
    int dir_idx = 0;
    int bw_idx = 0;
    int pow_idx = 0;
};

struct Codeword {
    CVec vector;
    double energy_w = 0.0; // ||vector||^2, equals the grid power level
    CodewordSpec spec;
    int flat_index = 0;
};

// Subarray size realizing a nominal half-power width on this array side.
inline int active_subarray_size(const ArrayConfig& cfg, Side side, double beamwidth_deg) {
    if (beamwidth_deg <= 0.0) throw std::invalid_argument("beamwidth must be positive");
    const double w_rad = deg2rad(beamwidth_deg);
    const int n = cfg.n(side);
    int n_act = static_cast<int>(std::lround(0.886 / (cfg.spacing_wl(side) * w_rad)));
    return std::clamp(n_act, 1, n);
}

// One codeword: the center-aligned N_act-element subarray carries the full
// array's steering phases, everything else is zero; unit-normalized then
// scaled to sqrt(power) so the energy grid is exact.
inline Codeword synthesize_beam(const ArrayConfig& cfg, Side side, const BeamGrid& grid,
                                int dir_idx, int bw_idx, int pow_idx) {
    if (dir_idx < 0 || dir_idx >= grid.n_dir()) throw std::out_of_range("direction index");
    if (bw_idx < 0 || bw_idx >= grid.n_bw()) throw std::out_of_range("beamwidth class index");
    if (pow_idx < 0 || pow_idx >= grid.n_pow()) throw std::out_of_range("power index");
    const double power = grid.power_levels_w[pow_idx];
    if (power <= 0.0) throw std::invalid_argument("power must be positive");

    const int n = cfg.n(side);
    const int n_act = active_subarray_size(cfg, side, grid.beamwidth_classes_deg[bw_idx]);
    const int offset = (n - n_act) / 2;
    const RVec phi = steering_phases(cfg, side);
    const double c = std::cos(deg2rad(grid.directions_deg[dir_idx]));

    Codeword cw;
    cw.vector = CVec::Zero(n);
    for (int k = 0; k < n_act; ++k) cw.vector(offset + k) = std::polar(1.0, phi(offset + k) * c);
    cw.vector *= std::sqrt(power) / cw.vector.norm();
    cw.energy_w = power; // exact grid value; the vector norm matches to rounding
    cw.spec = {side, dir_idx, bw_idx, pow_idx};
    cw.flat_index = (dir_idx * grid.n_bw() + bw_idx) * grid.n_pow() + pow_idx;
    return cw;
}

struct Codebook {
    Side side = Side::Tx;
    BeamGrid grid;
    std::vector<Codeword> codewords; // flat order: direction slowest, power fastest

    int size() const { return static_cast<int>(codewords.size()); }
    const Codeword& operator[](int flat) const { return codewords.at(flat); }

    int flat_index(int dir_idx, int bw_idx, int pow_idx) const {
        return (dir_idx * grid.n_bw() + bw_idx) * grid.n_pow() + pow_idx;
    }

    double max_power_w() const { return grid.power_levels_w.back(); }

    // lowest flat index whose direction is nearest to the given angle (used by
    // the fallback policy)
    int nearest_direction_idx(double theta_deg) const {
        int best = 0;
        double err = kInf;
        for (int i = 0; i < grid.n_dir(); ++i) {
            double e = std::abs(grid.directions_deg[i] - theta_deg);
            if (e < err - 1e-12) {
                err = e;
                best = i;
            }
        }
        return best;
    }
};

inline Codebook build_codebook(const ArrayConfig& cfg, Side side, const BeamGrid& grid) {
    grid.validate();
    Codebook cb;
    cb.side = side;
    cb.grid = grid;
    cb.codewords.reserve(grid.size());
    for (int i = 0; i < grid.n_dir(); ++i)
        for (int j = 0; j < grid.n_bw(); ++j)
            for (int k = 0; k < grid.n_pow(); ++k)
                cb.codewords.push_back(synthesize_beam(cfg, side, grid, i, j, k));
    return cb;
}

// Measured half-power beamwidth: scans |a(theta)^H v|^2 over (0, 180) deg at
// 0.05 deg resolution and returns the contiguous width around the main lobe
// where power stays >= half of peak. Empty result flags an undefined main
// lobe (flat pattern).
inline std::optional<double> beamwidth_of(const Codeword& cw, const ArrayConfig& cfg) {
    if (cw.vector.norm() == 0.0) throw std::invalid_argument("zero codeword");
    const double step = 0.05;
    const int n_samples = static_cast<int>(std::floor(180.0 / step)) - 1;
    std::vector<double> pat(n_samples);
    int peak_i = 0;
    double peak = -1.0, low = kInf;
    for (int i = 0; i < n_samples; ++i) {
        const double th = step * (i + 1);
        pat[i] = abs2(steering_vector(cfg, cw.spec.side, th).dot(cw.vector));
        if (pat[i] > peak) {
            peak = pat[i];
            peak_i = i;
        }
        low = std::min(low, pat[i]);
    }
    if (peak <= 0.0 || low > 0.5 * peak) return std::nullopt; // pattern never drops below half power
    const double half = 0.5 * peak;
    auto theta_at = [&](int i) { return step * (i + 1); };
    // walk outward from the peak, interpolate the half-power crossings
    double lo_deg = 0.0, hi_deg = 180.0;
    for (int i = peak_i; i >= 0; --i) {
        if (pat[i] < half) {
            double f = (half - pat[i]) / (pat[i + 1] - pat[i]);
            lo_deg = theta_at(i) + f * step;
            break;
        }
        if (i == 0) lo_deg = 0.0;
    }
    for (int i = peak_i; i < n_samples; ++i) {
        if (pat[i] < half) {
            double f = (half - pat[i]) / (pat[i - 1] - pat[i]);
            hi_deg = theta_at(i) - f * step;
            break;
        }
        if (i == n_samples - 1) hi_deg = 180.0;
    }
    return hi_deg - lo_deg;
}

// Plain-text dump: one line per codeword with spec, energy and re/im entries.
inline void dump_codebook(const Codebook& cb, std::ostream& os) {
    os << "# flat side dir_deg bw_deg power_w energy_w entries(re,im)...\n";
    for (const Codeword& cw : cb.codewords) {
        os << cw.flat_index << ' ' << (cw.spec.side == Side::Tx ? "tx" : "rx") << ' '
           << cb.grid.directions_deg[cw.spec.dir_idx] << ' '
           << cb.grid.beamwidth_classes_deg[cw.spec.bw_idx] << ' '
           << cb.grid.power_levels_w[cw.spec.pow_idx] << ' ' << cw.energy_w;
        for (Eigen::Index k = 0; k < cw.vector.size(); ++k)
            os << ' ' << cw.vector(k).real() << ',' << cw.vector(k).imag();
        os << '\n';
    }
}

} // namespace isac

#endif // ISAC_CODEBOOK_HPP
