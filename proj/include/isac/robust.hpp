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
// Worst-case feasibility oracles over the four uncertainty balls (CSI, AOD,
// RC, RSI). Each oracle returns the exact extremum together with an attaining
// perturbation so tests can probe tightness. AOD robustness is evaluated on
// the first-order steering model; the true nonlinear worst case is available
// as a diagnostic grid sweep.

#ifndef ISAC_ROBUST_HPP
#define ISAC_ROBUST_HPP

#include "isac/codebook.hpp"

namespace isac {

struct UncertaintyConfig {
    double eps_csi = 0.0;    // ||dh||_2 bound
    double eps_aod_rad = 0.0; // |dtheta| bound, radians
    double eps_rc = 0.0;     // |dpsi| bound
    double eps_rsi = 0.0;    // ||dR||_F bound
    double upsilon = 0.0;    // self-interference severity in [0, 1]

    void validate() const {
        if (eps_csi < 0 || eps_aod_rad < 0 || eps_rc < 0 || eps_rsi < 0)
            throw std::invalid_argument("uncertainty radii must be >= 0");
        if (upsilon < 0.0 || upsilon > 1.0) throw std::invalid_argument("upsilon must be in [0, 1]");
    }
};

// min over ||dh|| <= eps of |(hbar + dh)^H Z b|^2 / sigma2, with the attaining dh.
struct WorstCaseSnr {
    double snr = 0.0;
    CVec minimizer_dh;
};

inline WorstCaseSnr worst_case_snr(const CVec& h_bar, double eps_csi, const RMat& z_tx,
                                   const CVec& b, double sigma2_com) {
    if (sigma2_com <= 0.0) throw std::invalid_argument("noise power must be positive");
    WorstCaseSnr out;
    const CVec g = z_tx * b;
    const double gn = g.norm();
    if (gn == 0.0) { // degenerate codeword; defend with zero SNR
        out.minimizer_dh = CVec::Zero(h_bar.size());
        return out;
    }
    const cplx ip = h_bar.dot(g); // hbar^H g
    const double mag = std::abs(ip);
    if (eps_csi * gn >= mag) {
        // ball covers the null direction
        out.snr = 0.0;
        out.minimizer_dh = (mag == 0.0) ? CVec(CVec::Zero(h_bar.size()))
                                        : CVec(-(g * std::conj(ip) / (gn * gn)));
        return out;
    }
    out.snr = sq(mag - eps_csi * gn) / sigma2_com;
    // dh^H g = -eps*||g||*e^{j arg(ip)}  =>  dh = -eps*(g/||g||)*e^{-j arg(ip)}
    const cplx phase = (mag == 0.0) ? cplx(1.0, 0.0) : cplx(ip / mag);
    out.minimizer_dh = -(eps_csi / gn) * g * std::conj(phase);
    return out;
}

// Worst-case SINR threshold under RC uncertainty: Lambda / (|psibar| - eps)^2,
// or a permanent infeasibility flag when the disk reaches zero.
struct RcThreshold {
    bool feasible = false;
    double lambda_bar = kInf;
};

inline RcThreshold worst_case_rc_threshold(double lambda_sinr, cplx psi_bar, double eps_rc) {
    if (lambda_sinr <= 0.0) throw std::invalid_argument("SINR threshold must be positive");
    const double mag = std::abs(psi_bar);
    if (eps_rc >= mag) return {false, kInf};
    return {true, lambda_sinr / sq(mag - eps_rc)};
}

// min over real |dtheta| <= eps of |c0 + c1*dtheta|^2 / sigma2 where
// c0 = d^H a(theta_bar), c1 = d^H atilde(theta_bar). Convex 1-D quadratic;
// minimum at the clamped stationary point.
struct WorstCaseAod {
    double value = 0.0;
    double minimizer_dtheta = 0.0;
};

inline WorstCaseAod worst_case_aod_core(cplx c0, cplx c1, double eps_aod, double sigma2_sen) {
    if (sigma2_sen <= 0.0) throw std::invalid_argument("noise power must be positive");
    WorstCaseAod out;
    const double a = abs2(c1);
    if (a == 0.0 || eps_aod == 0.0) {
        out.minimizer_dtheta = 0.0;
        out.value = abs2(c0) / sigma2_sen;
        return out;
    }
    const double b = std::real(std::conj(c0) * c1);
    out.minimizer_dtheta = std::clamp(-b / a, -eps_aod, eps_aod);
    out.value = abs2(c0 + c1 * out.minimizer_dtheta) / sigma2_sen;
    return out;
}

inline WorstCaseAod worst_case_aod_numerator(const CVec& a_vec, const CVec& a_tilde_vec,
                                             double eps_aod, const CVec& d_vec, double sigma2_sen) {
    return worst_case_aod_core(d_vec.dot(a_vec), d_vec.dot(a_tilde_vec), eps_aod, sigma2_sen);
}

// max over ||dR||_F <= eps of upsilon^2 |d^H (rbar + dr)|^2, with attaining dr.
struct WorstCaseRsi {
    double power = 0.0;
    CVec maximizer_dr;
};

inline WorstCaseRsi worst_case_rsi_core(double abs_d_rbar, double d_norm, double upsilon,
                                        double eps_rsi) {
    WorstCaseRsi out;
    out.power = sq(upsilon) * sq(abs_d_rbar + eps_rsi * d_norm);
    return out;
}

inline WorstCaseRsi worst_case_rsi_power(const CVec& r_bar_vec, double upsilon, double eps_rsi,
                                         const CVec& d_vec) {
    const cplx ip = d_vec.dot(r_bar_vec); // d^H rbar
    const double dn = d_vec.norm();
    WorstCaseRsi out = worst_case_rsi_core(std::abs(ip), dn, upsilon, eps_rsi);
    if (dn > 0.0) {
        const double mag = std::abs(ip);
        const cplx phase = (mag == 0.0) ? cplx(1.0, 0.0) : cplx(ip / mag);
        // d^H dr = eps*||d||*phase, coherently adding to d^H rbar
        out.maximizer_dr = (eps_rsi / dn) * d_vec * phase;
    } else {
        out.maximizer_dr = CVec::Zero(r_bar_vec.size());
    }
    return out;
}

// Per-(codeword pair, target) geometry. The identity
//   c^H Zrx^H M Ztx b = d_{b,c}^H vec(M),  d_{b,c} = (Ztx^* b^*) kron (Zrx c)
// lets every pair quantity reduce to cached scalars: with A = a_rx a_tx^H and
// Atilde = -j sin(tb) [(phi_rx o a_rx) a_tx^H - a_rx (phi_tx o a_tx)^H],
//   d^H a      = (p_c^H a_rx)(a_tx^H q_b)
//   d^H atilde = -j sin(tb) [(p_c^H (phi_rx o a_rx))(a_tx^H q_b)
//                            - (p_c^H a_rx)((phi_tx o a_tx)^H q_b)]
// where q_b = Ztx b and p_c = Zrx c.
class LinkGeometryCache {
public:
    LinkGeometryCache(const ArrayConfig& cfg, const RMat& z_tx, const RMat& z_rx,
                      const Codebook& cb_tx, const Codebook& cb_rx, double theta_bar_deg,
                      const NominalRsi& rsi)
        : cfg_(&cfg), cb_tx_(&cb_tx), cb_rx_(&cb_rx), z_tx_(&z_tx), z_rx_(&z_rx),
          theta_bar_deg_(theta_bar_deg) {
        const double sin_tb = std::sin(deg2rad(theta_bar_deg));
        const CVec a_tx = steering_vector(cfg, Side::Tx, theta_bar_deg);
        const CVec a_rx = steering_vector(cfg, Side::Rx, theta_bar_deg);
        const RVec phi_tx = steering_phases(cfg, Side::Tx);
        const RVec phi_rx = steering_phases(cfg, Side::Rx);
        const CVec a_tx_w = phi_tx.cast<cplx>().cwiseProduct(a_tx);
        const CVec a_rx_w = phi_rx.cast<cplx>().cwiseProduct(a_rx);

        const int ltx = cb_tx.size(), lrx = cb_rx.size();
        s_a_.resize(ltx);
        s_w_.resize(ltx);
        q_norm_.resize(ltx);
        for (int b = 0; b < ltx; ++b) {
            const CVec q = z_tx * cb_tx[b].vector;
            s_a_[b] = a_tx.dot(q);  // a_tx^H q
            s_w_[b] = a_tx_w.dot(q);
            q_norm_[b] = q.norm();
        }
        t_a_.resize(lrx);
        t_w_.resize(lrx);
        p_norm_.resize(lrx);
        noise_gain_.resize(lrx);
        rbar_row_.resize(lrx);
        for (int c = 0; c < lrx; ++c) {
            const CVec p = z_rx * cb_rx[c].vector;
            t_a_[c] = p.dot(a_rx); // p^H a_rx
            t_w_[c] = p.dot(a_rx_w);
            p_norm_[c] = p.norm();
            noise_gain_[c] = p.squaredNorm();
            rbar_row_[c] = rsi.r_bar.adjoint() * p; // (p^H Rbar)^H, length n_tx
        }
        minus_j_sin_ = cplx(0.0, -sin_tb);
        q_cache_.resize(ltx);
        p_cache_.resize(lrx);
        for (int b = 0; b < ltx; ++b) q_cache_[b] = z_tx * cb_tx[b].vector;
        for (int c = 0; c < lrx; ++c) p_cache_[c] = z_rx * cb_rx[c].vector;
    }

    double theta_bar_deg() const { return theta_bar_deg_; }

    // d^H a(theta_bar)
    cplx pair_c0(int b, int c) const { return t_a_[c] * s_a_[b]; }
    // d^H atilde(theta_bar)
    cplx pair_c1(int b, int c) const {
        return minus_j_sin_ * (t_w_[c] * s_a_[b] - t_a_[c] * s_w_[b]);
    }
    // d^H rbar
    cplx pair_rbar(int b, int c) const { return rbar_row_[c].dot(q_cache_[b]); }
    double pair_d_norm(int b, int c) const { return q_norm_[b] * p_norm_[c]; }
    // ||Zrx c||^2
    double noise_gain(int c) const { return noise_gain_[c]; }

    // explicit d_{b,c} = (Ztx^* b^*) kron (Zrx c), for the LMI blocks and tests
    CVec d_vec(int b, int c) const {
        const CVec& q = q_cache_[b];
        const CVec& p = p_cache_[c];
        CVec d(q.size() * p.size());
        for (Eigen::Index j = 0; j < q.size(); ++j)
            d.segment(j * p.size(), p.size()) = std::conj(q(j)) * p;
        return d;
    }

private:
    const ArrayConfig* cfg_;
    const Codebook* cb_tx_;
    const Codebook* cb_rx_;
    const RMat* z_tx_;
    const RMat* z_rx_;
    double theta_bar_deg_;
    cplx minus_j_sin_;
    std::vector<cplx> s_a_, s_w_, t_a_, t_w_;
    std::vector<double> q_norm_, p_norm_, noise_gain_;
    std::vector<CVec> rbar_row_, q_cache_, p_cache_;
};

// Robust sensing feasibility for one (b, c, target): worst-case numerator
// against the RC-scaled threshold times worst-case denominator. Signed margin
// returned; RC infeasibility propagates as -inf.
struct SensingFeasibility {
    bool feasible = false;
    double margin = -kInf;
};

inline SensingFeasibility robust_sensing_feasible(const LinkGeometryCache& cache, int b, int c,
                                                  double lambda_sinr, cplx psi_bar,
                                                  const UncertaintyConfig& unc, double sigma2_sen) {
    const RcThreshold rc = worst_case_rc_threshold(lambda_sinr, psi_bar, unc.eps_rc);
    if (!rc.feasible) return {false, -kInf};
    const double num = worst_case_aod_core(cache.pair_c0(b, c), cache.pair_c1(b, c),
                                           unc.eps_aod_rad, sigma2_sen)
                           .value;
    const double rsi = worst_case_rsi_core(std::abs(cache.pair_rbar(b, c)),
                                           cache.pair_d_norm(b, c), unc.upsilon, unc.eps_rsi)
                           .power;
    const double rhs = rc.lambda_bar * (rsi / sigma2_sen + cache.noise_gain(c));
    const double margin = num - rhs;
    return {margin >= 0.0, margin};
}

// Diagnostic only: the exact nonlinear worst case of the numerator over the
// AOD interval, by grid scan of |c^H Zrx^H A(theta) Ztx b|^2 / sigma2.
inline double nonlinear_aod_numerator_min(const ArrayConfig& cfg, const RMat& z_tx,
                                          const RMat& z_rx, const CVec& b_vec, const CVec& c_vec,
                                          double theta_bar_deg, double eps_aod_rad,
                                          double sigma2_sen, int n_grid = 2001) {
    const CVec q = z_tx * b_vec;
    const CVec p = z_rx * c_vec;
    double best = kInf;
    for (int i = 0; i < n_grid; ++i) {
        const double dt = (n_grid == 1) ? 0.0 : -eps_aod_rad + 2.0 * eps_aod_rad * i / (n_grid - 1);
        const double th = theta_bar_deg + rad2deg(dt);
        const cplx v = p.dot(steering_vector(cfg, Side::Rx, th)) *
                       steering_vector(cfg, Side::Tx, th).dot(q);
        best = std::min(best, abs2(v) / sigma2_sen);
    }
    return best;
}

} // namespace isac

#endif // ISAC_ROBUST_HPP
