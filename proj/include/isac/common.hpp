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

#ifndef ISAC_COMMON_HPP
#define ISAC_COMMON_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace isac {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// dBm -> watts (e.g. -110 dBm -> 1e-14 W)
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double sq(double x) { return x * x; }
inline double abs2(cplx z) { return std::norm(z); }

// Deterministic random stream. All samplers are built on the raw 64-bit
// output of mt19937_64 so results are identical across standard libraries;
// std::*_distribution is deliberately avoided.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(mix(seed)) {}

    // Independent child stream, stable under (seed, id).
    static RngStream substream(std::uint64_t seed, std::uint64_t id) {
        return RngStream(mix(seed) ^ mix(id * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
    }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (uncached)
    double normal() {
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // CN(0, 1)
    cplx cnormal() {
        const double s = 1.0 / std::sqrt(2.0);
        return {normal() * s, normal() * s};
    }

    CVec cnormal_vec(int n) {
        CVec v(n);
        for (int i = 0; i < n; ++i) v(i) = cnormal();
        return v;
    }

    // uniform over the complex n-dim ball { x : ||x||_2 <= radius }
    CVec uniform_ball_complex(int n, double radius) {
        CVec dir = cnormal_vec(n);
        double nrm = dir.norm();
        if (nrm == 0.0) return CVec::Zero(n);
        double r = radius * std::pow(uniform(), 1.0 / (2.0 * n));
        return dir * (r / nrm);
    }

    // uniform over the complex disk |z| <= radius
    cplx uniform_disk(double radius) {
        double r = radius * std::sqrt(uniform());
        double ph = 2.0 * kPi * uniform();
        return std::polar(r, ph);
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
    std::mt19937_64 gen_;
};

} // namespace isac

#endif // ISAC_COMMON_HPP
