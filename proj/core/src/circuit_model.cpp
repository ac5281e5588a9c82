// Copyright 2026 The gfqsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfq/circuit_model.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace gfq {

namespace {

// Derivatives of the loop and alpha-loop arguments with respect to the four
// main phases.
const Eigen::Vector4d kLoopDir = Eigen::Vector4d(1.0, 1.0, 2.0, 2.0) / -kTwoPi;
const Eigen::Vector4d kAlphaDir = Eigen::Vector4d(1.0, -1.0, 0.0, 0.0) / -kTwoPi;

double scaled_residual(std::initializer_list<double> lhs_terms, double rhs) {
  double lhs = 0.0;
  double scale = std::abs(rhs);
  for (double t : lhs_terms) {
    lhs += t;
    scale = std::max(scale, std::abs(t));
  }
  return scale == 0.0 ? 0.0 : (lhs - rhs) / scale;
}

struct RawWaveVectors {
  double k1, k2, kp1, kp2, k;
};

RawWaveVectors solve_wave_vectors(const InductanceSet& ind, const FluxBias& flux,
                                  const WindingNumbers& wind,
                                  const PhaseState& s, BiasNode node,
                                  double k_bias) {
  ind.validate();
  const double a = ind.squid_half();
  const double b = ind.branch();
  const double m = ind.mutual;
  const double mb = ind.mutual_branch;
  const double l_eff = effective_inductance(ind);
  if (b - mb == 0.0) {
    throw std::domain_error("wave_vectors: L'_K + L'_g - L'_M is zero");
  }

  const double x = loop_argument(flux, wind, s);
  const double y = alpha_argument(flux, wind, s);
  const double w = wind.m_prime() + flux.f1 + flux.f2 + (s.phi1 - s.phi2) / kTwoPi;

  double k = 0.0;
  double sum = 0.0;
  double sum_branch = 0.0;
  if (node == BiasNode::alpha_loop) {
    k = (kTwoPi * x - (a + m) * k_bias) / l_eff;
    sum = k + k_bias;
    sum_branch = k;
  } else {
    k = (kTwoPi * x + (b + mb) * k_bias) / l_eff;
    sum = k;
    sum_branch = k - k_bias;
  }
  const double diff = kTwoPi * y / a;
  const double diff_branch = -(kTwoPi * w + (a - m) * diff) / (b - mb);

  return {0.5 * (sum + diff), 0.5 * (sum - diff), 0.5 * (sum_branch + diff_branch),
          0.5 * (sum_branch - diff_branch), k};
}

WaveVectorSolution to_products(const InductanceSet& ind, const RawWaveVectors& r) {
  return {r.k1 * ind.kinetic, r.k2 * ind.kinetic, r.kp1 * ind.kinetic_branch,
          r.kp2 * ind.kinetic_branch, r.k * ind.kinetic_center};
}

Eigen::Vector4d as_vector(const PhaseState& s) {
  return {s.phi1, s.phi2, s.phi3, s.phi4};
}

double josephson(const JunctionEnergies& jj, const PhaseState& s) {
  return -jj.e_j * (std::cos(s.phi1) + std::cos(s.phi2)) -
         jj.e_j_branch * (std::cos(s.phi3) + std::cos(s.phi4));
}

double main_inductive(const CircuitParams& p, const PhaseState& s) {
  const auto& jj = p.junctions();
  const double x = loop_argument(p.flux(), p.winding(), s);
  const double y = alpha_argument(p.flux(), p.winding(), s);
  return jj.e_j * (jj.stiffness_loop * x * x + jj.stiffness_alpha * y * y);
}

}  // namespace

void InductanceSet::validate() const {
  for (double v : {kinetic, kinetic_branch, kinetic_center, geometric,
                   geometric_branch, geometric_center, mutual, mutual_branch}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("inductances must be finite and non-negative");
    }
  }
  if (kinetic <= 0.0 || kinetic_branch <= 0.0 || kinetic_center <= 0.0) {
    throw std::invalid_argument("kinetic inductances must be strictly positive");
  }
  if (effective_inductance(*this) <= 0.0) {
    throw std::invalid_argument("L_eff must be positive");
  }
}

double effective_inductance(const InductanceSet& ind) {
  return ind.kinetic + ind.geometric + ind.kinetic_branch + ind.geometric_branch +
         2.0 * (ind.kinetic_center + ind.geometric_center) + ind.mutual +
         ind.mutual_branch;
}

WindingNumbers WindingNumbers::from_m(int m, int m_prime, int n) {
  if ((m + m_prime) % 2 != 0) {
    throw std::invalid_argument("m and m' must have equal parity");
  }
  return {(m_prime - m) / 2, (m_prime + m) / 2, n};
}

void JunctionEnergies::validate() const {
  if (!(e_j > 0.0) || !(e_j_branch > 0.0) || !(e_c > 0.0)) {
    throw std::invalid_argument("junction energies must be positive");
  }
  if (!(stiffness_loop > 0.0) || !(stiffness_alpha > 0.0)) {
    throw std::invalid_argument("stiffness values must be positive");
  }
  if (!std::isfinite(e_j) || !std::isfinite(e_j_branch) || !std::isfinite(e_c) ||
      !std::isfinite(stiffness_loop) || !std::isfinite(stiffness_alpha)) {
    throw std::invalid_argument("junction energies must be finite");
  }
}

TransformedPhases to_transformed(const PhaseState& s) {
  return {0.5 * (s.phi1 + s.phi2), 0.5 * (s.phi1 - s.phi2), 0.5 * (s.phi3 + s.phi4),
          0.5 * (s.phi3 - s.phi4)};
}

PhaseState to_raw(const TransformedPhases& t) {
  return {t.phi_p + t.phi_m, t.phi_p - t.phi_m, t.phitilde_p + t.phitilde_m,
          t.phitilde_p - t.phitilde_m, 0.0, 0.0};
}

CircuitParams::CircuitParams(InductanceSet ind, FluxBias flux,
                             WindingNumbers winding, JunctionEnergies junctions)
    : ind_(ind), flux_(flux), winding_(winding), junctions_(junctions) {
  ind_.validate();
  junctions_.validate();
  for (double f : {flux_.f1, flux_.f2, flux_.f_alpha}) {
    if (!std::isfinite(f)) throw std::invalid_argument("flux biases must be finite");
  }
  l_eff_ = gfq::effective_inductance(ind_);
}

CircuitParams CircuitParams::with_flux(const FluxBias& f) const {
  return {ind_, f, winding_, junctions_};
}
CircuitParams CircuitParams::with_winding(const WindingNumbers& w) const {
  return {ind_, flux_, w, junctions_};
}
CircuitParams CircuitParams::with_junctions(const JunctionEnergies& j) const {
  return {ind_, flux_, winding_, j};
}
CircuitParams CircuitParams::with_inductances(const InductanceSet& i) const {
  return {i, flux_, winding_, junctions_};
}

double bias_wave_vector(const CircuitParams& params, double beta) {
  return -kPi * kPi * beta /
         (params.junctions().stiffness_loop * params.effective_inductance());
}

WaveVectorSolution wave_vectors(const InductanceSet& ind, const FluxBias& flux,
                                const WindingNumbers& wind,
                                const PhaseState& phases, double k0) {
  return to_products(ind, solve_wave_vectors(ind, flux, wind, phases,
                                             BiasNode::alpha_loop, k0));
}

WaveVectorSolution wave_vectors_branch(const InductanceSet& ind,
                                       const FluxBias& flux,
                                       const WindingNumbers& wind,
                                       const PhaseState& phases,
                                       double k0_branch) {
  return to_products(ind, solve_wave_vectors(ind, flux, wind, phases,
                                             BiasNode::branch, k0_branch));
}

std::array<double, 2> trapping_wave_vectors(const InductanceSet& ind,
                                            const FluxBias& flux,
                                            const WindingNumbers& wind,
                                            const PhaseState& phases,
                                            double k0) {
  ind.validate();
  const double l_eff = effective_inductance(ind);
  const double x = loop_argument(flux, wind, phases);
  const double d = mprime_argument(wind.m_prime(), flux.f1, flux.f2, flux.f_alpha,
                                   ind.mutual_ratio());
  const double common = kTwoPi * x / (2.0 * l_eff) -
                        (ind.squid_half() + ind.mutual) / (2.0 * l_eff) * k0;
  const double split = kTwoPi * d / (2.0 * ind.branch());
  return {(common - split) * ind.kinetic_branch,
          (common + split) * ind.kinetic_branch};
}

std::array<double, 5> boundary_residuals(const InductanceSet& ind,
                                         const FluxBias& flux,
                                         const WindingNumbers& wind,
                                         const PhaseState& s,
                                         const WaveVectorSolution& sol,
                                         BiasNode node, double k0) {
  const double k1 = sol.k1 / ind.kinetic;
  const double k2 = sol.k2 / ind.kinetic;
  const double kp1 = sol.kp1 / ind.kinetic_branch;
  const double kp2 = sol.kp2 / ind.kinetic_branch;
  const double k = sol.k / ind.kinetic_center;
  const double a = ind.squid_half();
  const double b = ind.branch();
  const double t = ind.center();

  std::array<double, 5> r{};
  r[0] = scaled_residual({-a * k1, -b * kp1, -t * k, -ind.mutual_branch * kp2,
                          -ind.mutual * k2},
                         kTwoPi * (wind.n1 + flux.f1) + s.phi1 + s.phi3 + s.phi4);
  r[1] = scaled_residual({a * k2, b * kp2, t * k, ind.mutual_branch * kp1,
                          ind.mutual * k1},
                         kTwoPi * (wind.n2 + flux.f2) - (s.phi2 + s.phi3 + s.phi4));
  r[2] = scaled_residual({a * k1, -a * k2},
                         kTwoPi * (wind.n + flux.f_alpha) - (s.phi1 - s.phi2));
  if (node == BiasNode::alpha_loop) {
    r[3] = scaled_residual({kp1, kp2, -k}, 0.0);
    r[4] = scaled_residual({k, k0, -k1, -k2}, 0.0);
  } else {
    r[3] = scaled_residual({kp1, kp2, k0, -k}, 0.0);
    r[4] = scaled_residual({k, -k1, -k2}, 0.0);
  }
  return r;
}

double loop_argument(const FluxBias& flux, const WindingNumbers& wind,
                     const PhaseState& s, bool include_extra) {
  double phase = s.phi1 + s.phi2 + 2.0 * s.phi3 + 2.0 * s.phi4;
  if (include_extra) phase -= s.phi1p + s.phi2p;
  return wind.m() + flux.f2 - flux.f1 - phase / kTwoPi;
}

double alpha_argument(const FluxBias& flux, const WindingNumbers& wind,
                      const PhaseState& s) {
  return wind.n + flux.f_alpha - (s.phi1 - s.phi2) / kTwoPi;
}

Eigen::Vector4d alpha_bias_weights(const CircuitParams& params, double beta0) {
  const auto& ind = params.inductances();
  const double l_eff = params.effective_inductance();
  const double a = ind.branch() + 2.0 * ind.center() + ind.mutual_branch;
  const double b = ind.squid_half() + ind.mutual;
  const double scale = 0.5 * beta0 * params.junctions().e_j / l_eff;
  return scale * Eigen::Vector4d(a, a, -2.0 * b, -2.0 * b);
}

Eigen::Vector4d branch_bias_weights(const CircuitParams& params,
                                    double beta_branch) {
  const auto& ind = params.inductances();
  const double c = ind.branch() + ind.mutual_branch;
  const double scale =
      0.5 * beta_branch * params.junctions().e_j * c / params.effective_inductance();
  return scale * Eigen::Vector4d(1.0, 1.0, 2.0, 2.0);
}

EnergyParts u_eff_parts(const CircuitParams& params, const PhaseState& s,
                        double beta0) {
  return {main_inductive(params, s), josephson(params.junctions(), s),
          alpha_bias_weights(params, beta0).dot(as_vector(s))};
}

double u_eff(const CircuitParams& params, const PhaseState& s, double beta0) {
  return u_eff_parts(params, s, beta0).total();
}

Eigen::Vector4d u_eff_gradient(const CircuitParams& params, const PhaseState& s,
                               double beta0) {
  const auto& jj = params.junctions();
  const double x = loop_argument(params.flux(), params.winding(), s);
  const double y = alpha_argument(params.flux(), params.winding(), s);
  Eigen::Vector4d g = 2.0 * jj.e_j * jj.stiffness_loop * x * kLoopDir +
                      2.0 * jj.e_j * jj.stiffness_alpha * y * kAlphaDir;
  g += Eigen::Vector4d(jj.e_j * std::sin(s.phi1), jj.e_j * std::sin(s.phi2),
                       jj.e_j_branch * std::sin(s.phi3),
                       jj.e_j_branch * std::sin(s.phi4));
  return g + alpha_bias_weights(params, beta0);
}

Eigen::Matrix4d u_eff_hessian(const CircuitParams& params, const PhaseState& s) {
  const auto& jj = params.junctions();
  Eigen::Matrix4d h = 2.0 * jj.e_j * jj.stiffness_loop * kLoopDir * kLoopDir.transpose() +
                      2.0 * jj.e_j * jj.stiffness_alpha * kAlphaDir * kAlphaDir.transpose();
  h(0, 0) += jj.e_j * std::cos(s.phi1);
  h(1, 1) += jj.e_j * std::cos(s.phi2);
  h(2, 2) += jj.e_j_branch * std::cos(s.phi3);
  h(3, 3) += jj.e_j_branch * std::cos(s.phi4);
  return h;
}

EnergyParts u_eff_transformed_parts(const CircuitParams& params,
                                    const TransformedPhases& t, double beta0) {
  const auto& jj = params.junctions();
  const auto& ind = params.inductances();
  const auto& f = params.flux();
  const auto& w = params.winding();
  const double l_eff = params.effective_inductance();

  const double loop = w.m() + f.f2 - f.f1 - (2.0 * t.phi_p + 4.0 * t.phitilde_p) / kTwoPi;
  const double alpha = w.n + f.f_alpha - t.phi_m / kPi;
  EnergyParts e;
  e.inductive = jj.e_j * (jj.stiffness_loop * loop * loop +
                          jj.stiffness_alpha * alpha * alpha);
  e.josephson = -2.0 * jj.e_j * std::cos(t.phi_p) * std::cos(t.phi_m) -
                2.0 * jj.e_j_branch * std::cos(t.phitilde_p) * std::cos(t.phitilde_m);
  const double a = ind.branch() + 2.0 * ind.center() + ind.mutual_branch;
  const double b = ind.squid_half() + ind.mutual;
  e.bias = beta0 * jj.e_j / l_eff * (a * t.phi_p - 2.0 * b * t.phitilde_p);
  return e;
}

double u_eff_transformed(const CircuitParams& params, const TransformedPhases& t,
                         double beta0) {
  return u_eff_transformed_parts(params, t, beta0).total();
}

EnergyParts u_eff_branch_parts(const CircuitParams& params, const PhaseState& s,
                               double beta_branch) {
  return {main_inductive(params, s), josephson(params.junctions(), s),
          branch_bias_weights(params, beta_branch).dot(as_vector(s))};
}

double u_eff_branch(const CircuitParams& params, const PhaseState& s,
                    double beta_branch) {
  return u_eff_branch_parts(params, s, beta_branch).total();
}

EnergyParts u_eff_appendix_parts(const CircuitParams& params, const PhaseState& s) {
  const auto& jj = params.junctions();
  const auto& ind = params.inductances();
  const auto& f = params.flux();
  const auto& w = params.winding();

  const double x = loop_argument(f, w, s, true);
  const double y = alpha_argument(f, w, s);
  const double z = mprime_argument(w.m_prime(), f.f1, f.f2, f.f_alpha, ind.mutual_ratio()) -
                   (s.phi1p - s.phi2p) / kTwoPi;
  const double stiffness_outer =
      jj.stiffness_loop * params.effective_inductance() / ind.branch();

  EnergyParts e;
  e.inductive = jj.e_j * (jj.stiffness_loop * x * x + jj.stiffness_alpha * y * y +
                          stiffness_outer * z * z);
  e.josephson = josephson(jj, s);
  return e;
}

double u_eff_appendix(const CircuitParams& params, const PhaseState& s) {
  return u_eff_appendix_parts(params, s).total();
}

Eigen::Matrix<double, 6, 1> u_eff_appendix_gradient(const CircuitParams& params,
                                                    const PhaseState& s) {
  const auto& jj = params.junctions();
  const auto& ind = params.inductances();
  const auto& f = params.flux();
  const auto& w = params.winding();

  const double x = loop_argument(f, w, s, true);
  const double y = alpha_argument(f, w, s);
  const double z = mprime_argument(w.m_prime(), f.f1, f.f2, f.f_alpha, ind.mutual_ratio()) -
                   (s.phi1p - s.phi2p) / kTwoPi;
  const double stiffness_outer =
      jj.stiffness_loop * params.effective_inductance() / ind.branch();

  Eigen::Matrix<double, 6, 1> dx, dy, dz;
  dx << -1, -1, -2, -2, 1, 1;
  dy << -1, 1, 0, 0, 0, 0;
  dz << 0, 0, 0, 0, -1, 1;
  Eigen::Matrix<double, 6, 1> g =
      (2.0 * jj.e_j / kTwoPi) *
      (jj.stiffness_loop * x * dx + jj.stiffness_alpha * y * dy + stiffness_outer * z * dz);
  g(0) += jj.e_j * std::sin(s.phi1);
  g(1) += jj.e_j * std::sin(s.phi2);
  g(2) += jj.e_j_branch * std::sin(s.phi3);
  g(3) += jj.e_j_branch * std::sin(s.phi4);
  return g;
}

double mprime_argument(int m_prime, double f1, double f2, double f_alpha,
                       double lm_ratio) {
  return m_prime + f1 + f2 + (1.0 - lm_ratio) * f_alpha;
}

int optimal_mprime(double f1, double f2, double f_alpha, double lm_ratio) {
  const double target = -(f1 + f2 + (1.0 - lm_ratio) * f_alpha);
  if (!std::isfinite(target)) {
    throw std::invalid_argument("optimal_mprime: non-finite flux");
  }
  const int lo = static_cast<int>(std::floor(target));
  const double e_lo = mprime_argument(lo, f1, f2, f_alpha, lm_ratio);
  const double e_hi = mprime_argument(lo + 1, f1, f2, f_alpha, lm_ratio);
  return e_hi * e_hi < e_lo * e_lo ? lo + 1 : lo;
}

double v_reduced(double ej_ratio, const FluxBias& flux, const WindingNumbers& wind,
                 double phi_p, double phitilde_m, double beta0) {
  const double mu = wind.m() + flux.f2 - flux.f1;
  return -2.0 * std::cos(kPi * (wind.n + flux.f_alpha)) * std::cos(phi_p) -
         2.0 * ej_ratio * std::cos(0.5 * (kPi * mu - phi_p)) * std::cos(phitilde_m) +
         beta0 * phi_p;
}

Eigen::Vector2d v_reduced_gradient(double ej_ratio, const FluxBias& flux,
                                   const WindingNumbers& wind, double phi_p,
                                   double phitilde_m, double beta0) {
  const double c = std::cos(kPi * (wind.n + flux.f_alpha));
  const double u = 0.5 * (kPi * (wind.m() + flux.f2 - flux.f1) - phi_p);
  return {2.0 * c * std::sin(phi_p) - ej_ratio * std::sin(u) * std::cos(phitilde_m) + beta0,
          2.0 * ej_ratio * std::cos(u) * std::sin(phitilde_m)};
}

Eigen::Matrix2d v_reduced_hessian(double ej_ratio, const FluxBias& flux,
                                  const WindingNumbers& wind, double phi_p,
                                  double phitilde_m) {
  const double c = std::cos(kPi * (wind.n + flux.f_alpha));
  const double u = 0.5 * (kPi * (wind.m() + flux.f2 - flux.f1) - phi_p);
  Eigen::Matrix2d h;
  h(0, 0) = 2.0 * c * std::cos(phi_p) + 0.5 * ej_ratio * std::cos(u) * std::cos(phitilde_m);
  h(0, 1) = h(1, 0) = ej_ratio * std::sin(u) * std::sin(phitilde_m);
  h(1, 1) = 2.0 * ej_ratio * std::cos(u) * std::cos(phitilde_m);
  return h;
}

}  // namespace gfq
