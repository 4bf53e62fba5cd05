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
// S-procedure certification. Every robust constraint in this problem reduces
// to the one-multiplier question
//     exists alpha >= 0 :  m0 + alpha*m1 >= 0        (PSD)
// and lambda_min(m0 + alpha*m1) is concave in alpha, so the question is
// decided exactly by a bracketed golden-section search on the minimum
// eigenvalue. This path is kept independent of the closed-form oracles so the
// two can cross-validate each other.

#ifndef ISAC_LMI_HPP
#define ISAC_LMI_HPP

#include "isac/robust.hpp"

namespace isac {

enum class LmiKind { E1, I1, J5 };

struct LmiProblem {
    CMat m0;
    CMat m1;
    LmiKind kind = LmiKind::E1;
};

inline double lambda_min_hermitian(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

inline bool is_hermitian(const CMat& m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

struct LmiDecision {
    bool feasible = false;
    double alpha = 0.0;        // multiplier at the best point probed
    double lambda_min = -kInf; // lambda_min(m0 + alpha*m1) there, in units of ||m0||_F
};

inline LmiDecision lmi_feasible_1d(const LmiProblem& prob) {
    const double scale = std::max(prob.m0.norm(), 1e-300);
    const double herm_tol = 1e-12 * std::max(scale, prob.m1.norm());
    if (!is_hermitian(prob.m0, herm_tol) || !is_hermitian(prob.m1, herm_tol))
        throw std::invalid_argument("LMI blocks must be Hermitian");
    // the pencil is scale-free in alpha; normalize for conditioning
    const CMat m0 = prob.m0 / scale;
    const CMat m1 = prob.m1 / scale;
    const double tol = 1e-8; // 1e-8 * ||m0||_F in original units

    auto g = [&](double alpha) { return lambda_min_hermitian(m0 + alpha * m1); };

    LmiDecision best;
    auto probe = [&](double alpha, double val) {
        if (val > best.lambda_min) {
            best.lambda_min = val;
            best.alpha = alpha;
        }
        return val >= -tol;
    };

    double g0 = g(0.0);
    if (probe(0.0, g0)) return {true, 0.0, g0};

    // expand while g still strictly grows; the concave peak then lies inside
    // [lo/2, hi]. The cap bounds the eps = 0 plateau, where g saturates.
    double lo = 0.0, hi = 1.0;
    double g_lo = g0, g_hi = g(hi);
    if (probe(hi, g_hi)) return {true, hi, g_hi};
    int doublings = 0;
    while (g_hi > g_lo && doublings < 80) {
        lo = hi;
        g_lo = g_hi;
        hi *= 2.0;
        g_hi = g(hi);
        if (probe(hi, g_hi)) return {true, hi, g_hi};
        ++doublings;
    }

    // peak is inside [max(0, lo/2), hi]; golden-section it
    double a = (lo > 0.0) ? lo * 0.5 : 0.0;
    double b = hi;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    if (probe(x1, f1)) return best.feasible = true, best;
    if (probe(x2, f2)) return best.feasible = true, best;
    const double width_tol = std::max(1e-10, 1e-12 * (b - a));
    int iters = 0;
    while (b - a > width_tol && iters < 300) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = g(x2);
            if (probe(x2, f2)) return best.feasible = true, best;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = g(x1);
            if (probe(x1, f1)) return best.feasible = true, best;
        }
        ++iters;
    }
    best.feasible = best.lambda_min >= -tol;
    return best;
}

// E-block (imperfect CSI / SNR): with L = -(1/sigma2) Z b b^H Z^H for the
// selected codeword,
//   m(alpha) = [ alpha*I - L        -L hbar                          ]
//              [ -hbar^H L          -alpha*eps^2 - hbar^H L hbar - Y ]
inline LmiProblem build_lmi_e1(const CVec& h_bar, double eps_csi, const RMat& z_tx, const CVec& b,
                               double snr_min, double sigma2_com) {
    const int n = static_cast<int>(h_bar.size());
    const CVec g = (z_tx * b) / std::sqrt(sigma2_com);
    const CMat neg_l = g * g.adjoint(); // -L, PSD rank one
    LmiProblem p;
    p.kind = LmiKind::E1;
    p.m0 = CMat::Zero(n + 1, n + 1);
    p.m0.topLeftCorner(n, n) = neg_l;
    p.m0.block(0, n, n, 1) = neg_l * h_bar;
    p.m0.block(n, 0, 1, n) = (neg_l * h_bar).adjoint();
    p.m0(n, n) = (h_bar.adjoint() * neg_l * h_bar).value().real() - snr_min;
    p.m1 = CMat::Zero(n + 1, n + 1);
    p.m1.topLeftCorner(n, n) = CMat::Identity(n, n);
    p.m1(n, n) = -sq(eps_csi);
    p.m0 = 0.5 * (p.m0 + p.m0.adjoint().eval());
    return p;
}

// I-block (imperfect AOD on the linearized model): 2x2 with F = -(1/sigma2) d d^H,
//   m(xi) = [ xi - at^H F at      -at^H F a          ]
//           [ -a^H F at           -xi*eps^2 - a^H F a - z ]
// The angle error is a real scalar, so the block is assembled in its real
// S-lemma form (off-diagonal Re(at^H F a)); the complex-disk variant would
// certify a strictly smaller set than the interval worst case.
inline LmiProblem build_lmi_i1(const CVec& a_vec, const CVec& a_tilde_vec, double eps_aod_rad,
                               const CVec& d_vec, double z, double sigma2_sen) {
    const cplx c0 = d_vec.dot(a_vec) / std::sqrt(sigma2_sen);       // d^H a / sigma
    const cplx c1 = d_vec.dot(a_tilde_vec) / std::sqrt(sigma2_sen); // d^H at / sigma
    LmiProblem p;
    p.kind = LmiKind::I1;
    p.m0 = CMat::Zero(2, 2);
    p.m0(0, 0) = abs2(c1);
    p.m0(0, 1) = std::real(std::conj(c1) * c0);
    p.m0(1, 0) = p.m0(0, 1);
    p.m0(1, 1) = abs2(c0) - z;
    p.m1 = CMat::Zero(2, 2);
    p.m1(0, 0) = 1.0;
    p.m1(1, 1) = -sq(eps_aod_rad);
    return p;
}

// J-block (imperfect RSI): with F = -(1/sigma2) d d^H, u2L = upsilon^2 * lambda_bar,
//   m(iota) = [ iota*I + u2L*F       u2L*F rbar                                  ]
//             [ u2L*rbar^H F         -iota*eps^2 + u2L*rbar^H F rbar - noise + z ]
// where noise = lambda_bar * ||Zrx c||^2.
inline LmiProblem build_lmi_j5(const CVec& r_bar_vec, double upsilon, double eps_rsi,
                               const CVec& d_vec, double lambda_bar, double noise_gain, double z,
                               double sigma2_sen) {
    const int n = static_cast<int>(d_vec.size());
    const CVec f = d_vec * (upsilon * std::sqrt(lambda_bar / sigma2_sen));
    const CMat neg_u2l_f = f * f.adjoint(); // -upsilon^2*lambda_bar*F, PSD
    LmiProblem p;
    p.kind = LmiKind::J5;
    p.m0 = CMat::Zero(n + 1, n + 1);
    p.m0.topLeftCorner(n, n) = -neg_u2l_f;
    p.m0.block(0, n, n, 1) = -neg_u2l_f * r_bar_vec;
    p.m0.block(n, 0, 1, n) = (-neg_u2l_f * r_bar_vec).adjoint();
    p.m0(n, n) = -(r_bar_vec.adjoint() * neg_u2l_f * r_bar_vec).value().real() -
                 lambda_bar * noise_gain + z;
    p.m1 = CMat::Zero(n + 1, n + 1);
    p.m1.topLeftCorner(n, n) = CMat::Identity(n, n);
    p.m1(n, n) = -sq(eps_rsi);
    p.m0 = 0.5 * (p.m0 + p.m0.adjoint().eval());
    return p;
}

} // namespace isac

#endif // ISAC_LMI_HPP
