// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "isac/robust.hpp"

using namespace isac;

namespace {

ArrayConfig small_array() {
    ArrayConfig c = ArrayConfig::from_carrier_ghz(41.0);
    c.n_tx = 6;
    c.n_rx = 8;
    return c;
}

struct PairFixture {
    ArrayConfig cfg = small_array();
    RMat z_tx = coupling_matrix(6, 0.05);
    RMat z_rx = coupling_matrix(8, 0.02);
    Codebook cb_tx, cb_rx;
    NominalRsi rsi;

    PairFixture() {
        BeamGrid g_tx = BeamGrid::from_direction_range(60, 120, 15, {17, 34}, {0.2, 0.6});
        BeamGrid g_rx = BeamGrid::from_direction_range(60, 120, 15, {13, 26}, {0.1});
        cb_tx = build_codebook(cfg, Side::Tx, g_tx);
        cb_rx = build_codebook(cfg, Side::Rx, g_rx);
        rsi = nominal_rsi(cfg);
    }
};

} // namespace

TEST_SUITE_BEGIN("robust");

TEST_CASE("worst-case SNR: zero radius, covering radius, sampling and attainment") {
    RngStream rng(17);
    const RMat z = coupling_matrix(6, 0.04);
    const double sigma2 = 1e-3;
    for (int it = 0; it < 20; ++it) {
        const CVec h = rng.cnormal_vec(6);
        const CVec b = rng.cnormal_vec(6);
        const CVec g = z * b;

        const double snr0 = worst_case_snr(h, 0.0, z, b, sigma2).snr;
        CHECK(snr0 == doctest::Approx(abs2(h.dot(g)) / sigma2).epsilon(1e-12));

        const double eps_cover = std::abs(h.dot(g)) / g.norm();
        CHECK(worst_case_snr(h, eps_cover * 1.0000001, z, b, sigma2).snr == 0.0);

        const double eps = 0.3 * eps_cover;
        const WorstCaseSnr wc = worst_case_snr(h, eps, z, b, sigma2);
        // no sampled point inside the ball does better
        for (int s = 0; s < 50; ++s) {
            const CVec dh = rng.uniform_ball_complex(6, eps);
            const double realized = abs2((h + dh).dot(g)) / sigma2;
            CHECK(realized >= wc.snr - 1e-9 * std::max(1.0, wc.snr));
        }
        // the constructed minimizer attains the bound
        CHECK(wc.minimizer_dh.norm() <= eps * (1 + 1e-12));
        const double attained = abs2((h + wc.minimizer_dh).dot(g)) / sigma2;
        CHECK(std::abs(attained - wc.snr) <= 1e-9 * std::max(1.0, wc.snr));
    }
}

TEST_CASE("worst-case SNR is monotone non-increasing in the CSI radius") {
    RngStream rng(18);
    const RMat z = coupling_matrix(5, 0.0);
    const CVec h = rng.cnormal_vec(5);
    const CVec b = rng.cnormal_vec(5);
    double prev = kInf;
    for (double eps = 0.0; eps < 2.0; eps += 0.05) {
        const double snr = worst_case_snr(h, eps, z, b, 1.0).snr;
        CHECK(snr <= prev + 1e-12);
        prev = snr;
    }
}

TEST_CASE("RC threshold: exact values and the infeasibility flag") {
    // eps = 0
    const RcThreshold r0 = worst_case_rc_threshold(2.0, cplx(1e-3, 0.0), 0.0);
    CHECK(r0.feasible);
    CHECK(r0.lambda_bar == doctest::Approx(2e6).epsilon(1e-12));
    // eps = |psi|/2
    const RcThreshold r1 = worst_case_rc_threshold(2.0, cplx(1e-3, 0.0), 0.5e-3);
    CHECK(r1.feasible);
    CHECK(r1.lambda_bar == doctest::Approx(8e6).epsilon(1e-12));
    // cross-check by grid-minimizing |psi + dpsi|^2 over the disk boundary
    double min_mag2 = kInf;
    for (int k = 0; k < 5000; ++k) {
        const double ph = 2 * kPi * k / 5000.0;
        min_mag2 = std::min(min_mag2, abs2(cplx(1e-3, 0.0) + std::polar(0.5e-3, ph)));
    }
    CHECK(2.0 / min_mag2 == doctest::Approx(r1.lambda_bar).epsilon(1e-6));
    // ball reaches zero
    CHECK_FALSE(worst_case_rc_threshold(2.0, cplx(1e-3, 0.0), 1e-3).feasible);
}

TEST_CASE("worst-case AOD numerator: degenerate cases and grid oracle") {
    RngStream rng(19);
    const double sigma2 = 0.5;
    for (int it = 0; it < 100; ++it) {
        const cplx c0 = rng.cnormal();
        const cplx c1 = rng.cnormal();
        const double eps = rng.uniform(0.0, 0.2);

        CHECK(worst_case_aod_core(c0, c1, 0.0, sigma2).value ==
              doctest::Approx(abs2(c0) / sigma2).epsilon(1e-12));
        CHECK(worst_case_aod_core(c0, cplx(0, 0), eps, sigma2).value ==
              doctest::Approx(abs2(c0) / sigma2).epsilon(1e-12));

        const WorstCaseAod wc = worst_case_aod_core(c0, c1, eps, sigma2);
        double grid_min = kInf;
        for (int k = 0; k < 10000; ++k) {
            const double dt = -eps + 2 * eps * k / 9999.0;
            grid_min = std::min(grid_min, abs2(c0 + c1 * dt) / sigma2);
        }
        CHECK(wc.value <= grid_min + 1e-9 * std::max(1.0, grid_min));
        CHECK(grid_min <= wc.value + 1e-6 * std::max(1.0, wc.value) + 1e-12);
        CHECK(std::abs(wc.minimizer_dtheta) <= eps);
        CHECK(abs2(c0 + c1 * wc.minimizer_dtheta) / sigma2 ==
              doctest::Approx(wc.value).epsilon(1e-12));
    }
}

TEST_CASE("worst-case RSI power: degenerate cases, sampling, attainment, monotonicity") {
    RngStream rng(20);
    for (int it = 0; it < 20; ++it) {
        const int n = 12;
        const CVec rbar = rng.cnormal_vec(n);
        const CVec d = rng.cnormal_vec(n);
        const double eps = rng.uniform(0.0, 1.0);
        const double ups = rng.uniform(0.1, 1.0);

        CHECK(worst_case_rsi_power(rbar, 0.0, eps, d).power == 0.0);
        CHECK(worst_case_rsi_power(rbar, ups, 0.0, d).power ==
              doctest::Approx(sq(ups) * abs2(d.dot(rbar))).epsilon(1e-12));

        const WorstCaseRsi wc = worst_case_rsi_power(rbar, ups, eps, d);
        for (int s = 0; s < 50; ++s) {
            const CVec dr = rng.uniform_ball_complex(n, eps);
            const double realized = sq(ups) * abs2(d.dot(rbar + dr));
            CHECK(realized <= wc.power + 1e-9 * std::max(1.0, wc.power));
        }
        CHECK(wc.maximizer_dr.norm() <= eps * (1 + 1e-12));
        const double attained = sq(ups) * abs2(d.dot(rbar + wc.maximizer_dr));
        CHECK(std::abs(attained - wc.power) <= 1e-9 * std::max(1.0, wc.power));

        // monotone in eps and upsilon
        CHECK(worst_case_rsi_power(rbar, ups, eps + 0.1, d).power >= wc.power);
        CHECK(worst_case_rsi_power(rbar, std::min(1.0, ups + 0.1), eps, d).power >= wc.power);
    }
}

TEST_CASE("link cache scalars match explicit Kronecker computation") {
    const PairFixture f;
    const double theta = 97.0;
    const LinkGeometryCache cache(f.cfg, f.z_tx, f.z_rx, f.cb_tx, f.cb_rx, theta, f.rsi);
    const auto [a_mat, at_mat] = linearized_response(f.cfg, theta);
    const CVec a_vec = Eigen::Map<const CVec>(a_mat.data(), a_mat.size());
    const CVec at_vec = Eigen::Map<const CVec>(at_mat.data(), at_mat.size());
    for (int b = 0; b < f.cb_tx.size(); b += 3) {
        for (int c = 0; c < f.cb_rx.size(); c += 2) {
            const CVec d = cache.d_vec(b, c);
            CHECK(std::abs(cache.pair_c0(b, c) - d.dot(a_vec)) < 1e-12);
            CHECK(std::abs(cache.pair_c1(b, c) - d.dot(at_vec)) < 1e-12);
            CHECK(std::abs(cache.pair_rbar(b, c) - d.dot(f.rsi.r_bar_vec)) < 1e-14);
            CHECK(cache.pair_d_norm(b, c) == doctest::Approx(d.norm()).epsilon(1e-12));
            CHECK(cache.noise_gain(c) ==
                  doctest::Approx((f.z_rx * f.cb_rx[c].vector).squaredNorm()).epsilon(1e-12));
        }
    }
}

TEST_CASE("Jensen tightness: one active pair makes the summed form exact") {
    const PairFixture f;
    const double theta = 83.0;
    const LinkGeometryCache cache(f.cfg, f.z_tx, f.z_rx, f.cb_tx, f.cb_rx, theta, f.rsi);
    const CMat a = response_matrix(f.cfg, theta);
    for (int b = 0; b < f.cb_tx.size(); b += 5) {
        for (int c = 0; c < f.cb_rx.size(); c += 3) {
            // coupled quadratic with a single nonzero pi equals the per-pair term
            const cplx coupled =
                (f.cb_rx[c].vector.adjoint() * f.z_rx.transpose() * a * f.z_tx *
                 f.cb_tx[b].vector)
                    .value();
            CHECK(std::abs(abs2(coupled) - abs2(cache.pair_c0(b, c))) <=
                  1e-12 * std::max(1.0, abs2(coupled)));
        }
    }
}

TEST_CASE("robust sensing feasibility: collapse, easy instance, monotone margins") {
    const PairFixture f;
    const double theta = 90.0;
    const LinkGeometryCache cache(f.cfg, f.z_tx, f.z_rx, f.cb_tx, f.cb_rx, theta, f.rsi);
    const double sigma2 = dbm_to_watt(-70.0);
    const cplx psi(1e-3, 0.0);

    // all-perfect collapse: margin equals the direct Eq.-based slack
    UncertaintyConfig none;
    const int b = f.cb_tx.flat_index(2, 0, 1); // 90 deg, narrow, 0.6 W
    const int c = f.cb_rx.flat_index(2, 0, 0);
    const SensingFeasibility sf = robust_sensing_feasible(cache, b, c, 2.0, psi, none, sigma2);
    const double num = abs2(cache.pair_c0(b, c)) / sigma2;
    const double rhs =
        2.0 / abs2(psi) * (sq(0.0) + cache.noise_gain(c)); // lambda_bar * noise only
    CHECK(sf.margin == doctest::Approx(num - rhs).epsilon(1e-12));
    CHECK(sf.feasible); // broadside aligned pair with a modest threshold

    // margins shrink when any radius grows
    RngStream rng(77);
    for (int it = 0; it < 100; ++it) {
        UncertaintyConfig u1;
        u1.eps_aod_rad = rng.uniform(0.0, 0.05);
        u1.eps_rc = rng.uniform(0.0, 0.4e-3);
        u1.eps_rsi = rng.uniform(0.0, 0.5) * f.rsi.r_bar.norm();
        u1.upsilon = rng.uniform(0.0, 0.5);
        UncertaintyConfig u2 = u1;
        switch (it % 4) {
            case 0: u2.eps_aod_rad += 0.02; break;
            case 1: u2.eps_rc += 0.2e-3; break;
            case 2: u2.eps_rsi += 0.2 * f.rsi.r_bar.norm(); break;
            case 3: u2.upsilon = std::min(1.0, u2.upsilon + 0.2); break;
        }
        const double m1 = robust_sensing_feasible(cache, b, c, 2.0, psi, u1, sigma2).margin;
        const double m2 = robust_sensing_feasible(cache, b, c, 2.0, psi, u2, sigma2).margin;
        CHECK(m2 <= m1 + 1e-9);
    }

    // RC flag propagates as -inf margin
    UncertaintyConfig dead;
    dead.eps_rc = 2e-3;
    const SensingFeasibility sd = robust_sensing_feasible(cache, b, c, 2.0, psi, dead, sigma2);
    CHECK_FALSE(sd.feasible);
    CHECK(sd.margin == -kInf);
}

TEST_CASE("nonlinear AOD sweep lower-bounds at most the linearized worst case") {
    const PairFixture f;
    const double theta = 105.0;
    const LinkGeometryCache cache(f.cfg, f.z_tx, f.z_rx, f.cb_tx, f.cb_rx, theta, f.rsi);
    const double sigma2 = 1.0;
    const int b = f.cb_tx.flat_index(3, 0, 1);
    const int c = f.cb_rx.flat_index(3, 0, 0);
    const double eps = deg2rad(2.0);
    const double lin =
        worst_case_aod_core(cache.pair_c0(b, c), cache.pair_c1(b, c), eps, sigma2).value;
    const double nonlin = nonlinear_aod_numerator_min(
        f.cfg, f.z_tx, f.z_rx, f.cb_tx[b].vector, f.cb_rx[c].vector, theta, eps, sigma2, 501);
    // the two models stay close for a small angular radius
    CHECK(std::abs(lin - nonlin) / std::max(lin, nonlin) < 0.2);
}

TEST_SUITE_END();
