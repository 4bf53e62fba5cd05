// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "isac/lmi.hpp"

using namespace isac;

namespace {

CMat random_hermitian(RngStream& rng, int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.cnormal();
    return 0.5 * (m + m.adjoint().eval());
}

} // namespace

TEST_SUITE_BEGIN("lmi");

TEST_CASE("trivial feasibility cases") {
    LmiProblem p;
    p.m0 = CMat::Identity(4, 4);
    p.m1 = CMat::Zero(4, 4);
    CHECK(lmi_feasible_1d(p).feasible); // already PSD at alpha = 0

    p.m0 = -CMat::Identity(4, 4);
    CHECK_FALSE(lmi_feasible_1d(p).feasible); // nothing can fix -I with m1 = 0
}

TEST_CASE("non-Hermitian input is rejected") {
    LmiProblem p;
    p.m0 = CMat::Zero(3, 3);
    p.m0(0, 1) = cplx(1.0, 0.5); // no conjugate counterpart
    p.m1 = CMat::Identity(3, 3);
    CHECK_THROWS_AS(lmi_feasible_1d(p), std::invalid_argument);
}

TEST_CASE("concave search matches a brute scan over the multiplier") {
    RngStream rng(5);
    for (int it = 0; it < 20; ++it) {
        const int n = 3 + (it % 4);
        LmiProblem p;
        p.m1 = CMat::Identity(n, n);
        p.m1(n - 1, n - 1) = -0.3; // lambda_min grows then shrinks
        p.m0 = random_hermitian(rng, n);
        const LmiDecision d = lmi_feasible_1d(p);
        bool any = false;
        for (double a = 0.0; a <= 64.0 && !any; a += 0.01)
            if (lambda_min_hermitian(p.m0 + a * p.m1) >= -1e-8 * p.m0.norm()) any = true;
        CHECK(d.feasible == any);
    }
}

TEST_CASE("E-block certification agrees with the worst-case SNR closed form") {
    RngStream rng(31);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        const int n = 2 + (it % 5);
        const RMat z = coupling_matrix(n, rng.uniform(-0.1, 0.1));
        const CVec h = rng.cnormal_vec(n);
        const CVec b = rng.cnormal_vec(n) * rng.uniform(0.3, 1.5);
        const double eps = rng.uniform(0.0, 1.2);
        const double sigma2 = 1.0;
        const double wc = worst_case_snr(h, eps, z, b, sigma2).snr;
        const double snr_min = std::max(wc, 1e-3) * rng.uniform(0.5, 1.5);
        const double margin = wc - snr_min;
        if (std::abs(margin) < 1e-7 * std::max(1.0, wc)) continue; // marginal excluded
        const LmiDecision d = lmi_feasible_1d(build_lmi_e1(h, eps, z, b, snr_min, sigma2));
        CHECK(d.feasible == (margin > 0));
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_CASE("E-block with zero radius reduces to the deterministic SNR test") {
    RngStream rng(32);
    for (int it = 0; it < 50; ++it) {
        const int n = 3;
        const RMat z = coupling_matrix(n, 0.05);
        const CVec h = rng.cnormal_vec(n);
        const CVec b = rng.cnormal_vec(n);
        const double snr = abs2(h.dot(z * b));
        const double want = snr * (it % 2 ? 0.9 : 1.1);
        const LmiDecision d = lmi_feasible_1d(build_lmi_e1(h, 0.0, z, b, want, 1.0));
        CHECK(d.feasible == (snr >= want));
    }
}

TEST_CASE("I-block certification agrees with the AOD closed form") {
    RngStream rng(33);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        const int n = 4 + (it % 5);
        const CVec a_vec = rng.cnormal_vec(n);
        const CVec at_vec = rng.cnormal_vec(n);
        const CVec d_vec = rng.cnormal_vec(n);
        const double eps = rng.uniform(0.0, 0.3);
        const double sigma2 = 1.0;
        const double num = worst_case_aod_numerator(a_vec, at_vec, eps, d_vec, sigma2).value;
        const double z = std::max(num, 1e-6) * rng.uniform(0.5, 1.5);
        const double margin = num - z;
        if (std::abs(margin) < 1e-7 * std::max(1.0, num)) continue;
        const LmiDecision d = lmi_feasible_1d(build_lmi_i1(a_vec, at_vec, eps, d_vec, z, sigma2));
        CHECK(d.feasible == (margin > 0));
        ++checked;

        if (it % 10 == 0) { // zero radius: identical to |c0|^2/sigma2 >= z
            const double num0 = abs2(d_vec.dot(a_vec)) / sigma2;
            const double z0 = num0 * (it % 20 ? 0.9 : 1.1);
            const LmiDecision d0 =
                lmi_feasible_1d(build_lmi_i1(a_vec, at_vec, 0.0, d_vec, z0, sigma2));
            CHECK(d0.feasible == (num0 >= z0));
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("J-block certification agrees with the RSI closed form") {
    RngStream rng(34);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        const int n = 4 + (it % 6);
        const CVec rbar = rng.cnormal_vec(n);
        const CVec d_vec = rng.cnormal_vec(n);
        const double ups = rng.uniform(0.0, 1.0);
        const double eps = rng.uniform(0.0, 1.0);
        const double lambda_bar = rng.uniform(0.5, 4.0);
        const double noise = rng.uniform(0.1, 2.0);
        const double sigma2 = rng.uniform(0.5, 2.0);
        const double rsi = worst_case_rsi_power(rbar, ups, eps, d_vec).power;
        const double z_crit = lambda_bar * (rsi / sigma2 + noise);
        const double z = z_crit * rng.uniform(0.5, 1.5);
        const double margin = z - z_crit; // feasible iff z covers the worst case
        if (std::abs(margin) < 1e-7 * std::max(1.0, z_crit)) continue;
        const LmiDecision d =
            lmi_feasible_1d(build_lmi_j5(rbar, ups, eps, d_vec, lambda_bar, noise, z, sigma2));
        CHECK(d.feasible == (margin > 0));
        ++checked;
    }
    CHECK(checked > 400);
}

TEST_SUITE_END();
