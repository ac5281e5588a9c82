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

#pragma once

// Gradiometric flux qubit circuit: fluxoid boundary conditions, the Cooper
// pair wave vectors they imply, and the effective potentials of the main
// four-junction scheme and of the six-junction variant.
//
// Reduced units throughout: energies in units of E_J (the alpha-loop
// junction energy, normally 1), phases in radians, fluxes in units of the
// flux quantum and bias currents as beta = Phi0 * I / (2 pi E_J).
// Inductances share one arbitrary unit. Branch lengths are measured so that
// each length equals its kinetic inductance (l = L_K, l' = L'_K,
// l~ = L~_K), which is the same as dropping the common factor
// m_c / (A n_c q_c^2); wave vectors are then in inverse inductance units.

#include <array>

#include <Eigen/Core>

namespace gfq {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct InductanceSet {
  double kinetic = 1.0;            // L_K, one half of the alpha (dc-SQUID) loop
  double kinetic_branch = 0.5;     // L'_K, left/right trapping branch
  double kinetic_center = 0.25;    // L~_K, central branch
  double geometric = 4.0;          // L_g
  double geometric_branch = 2.5;   // L'_g
  double geometric_center = 1.75;  // L~_g
  double mutual = 2.0;             // L_M, trapping loop to far SQUID half
  double mutual_branch = 1.0;      // L'_M, trapping loop to far branch

  /// Throws std::invalid_argument unless every entry is >= 0, the three
  /// kinetic inductances are > 0 and L_eff > 0.
  void validate() const;

  double squid_half() const { return kinetic + geometric; }
  double branch() const { return kinetic_branch + geometric_branch; }
  double center() const { return kinetic_center + geometric_center; }
  /// L_M / (L_K + L_g).
  double mutual_ratio() const { return mutual / squid_half(); }
};

/// L_eff = L_K + L_g + L'_K + L'_g + 2(L~_K + L~_g) + L_M + L'_M.
double effective_inductance(const InductanceSet& ind);

struct FluxBias {
  double f1 = 0.94;
  double f2 = 0.94;
  double f_alpha = 0.2;
};

struct WindingNumbers {
  int n1 = -1;
  int n2 = -1;
  int n = 1;

  int m() const { return n2 - n1; }
  int m_prime() const { return n1 + n2; }

  /// Builds (n1, n2) from m = n2 - n1 and m' = n1 + n2. Throws
  /// std::invalid_argument when m and m' differ in parity.
  static WindingNumbers from_m(int m, int m_prime, int n);
};

struct JunctionEnergies {
  double e_j = 1.0;          // E_J1 = E_J2
  double e_j_branch = 2.0;   // E_J3 = E_J4 (E~_J)
  double e_c = 1.0 / 40.0;   // e^2 / 2C of a junction with energy E_J
  double stiffness_loop = 1000.0;   // Phi0^2 / (4 L_eff E_J)
  double stiffness_alpha = 3000.0;  // Phi0^2 / (4 (L_K + L_g) E_J)

  void validate() const;
  double ej_ratio() const { return e_j_branch / e_j; }
};

/// Junction phases. phi1p / phi2p belong to the two extra junctions of the
/// six-junction scheme and are ignored by the main-scheme potentials.
struct PhaseState {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double phi3 = 0.0;
  double phi4 = 0.0;
  double phi1p = 0.0;
  double phi2p = 0.0;

  std::array<double, 4> main() const { return {phi1, phi2, phi3, phi4}; }
  static PhaseState from_main(const std::array<double, 4>& p) {
    return {p[0], p[1], p[2], p[3], 0.0, 0.0};
  }
};

/// phi_{p,m} = (phi1 +- phi2)/2, phitilde_{p,m} = (phi3 +- phi4)/2.
struct TransformedPhases {
  double phi_p = 0.0;
  double phi_m = 0.0;
  double phitilde_p = 0.0;
  double phitilde_m = 0.0;
};

TransformedPhases to_transformed(const PhaseState& s);
PhaseState to_raw(const TransformedPhases& t);

/// Complete, validated parameter record of the circuit.
class CircuitParams {
 public:
  CircuitParams() : CircuitParams(InductanceSet{}, FluxBias{}, WindingNumbers{}, JunctionEnergies{}) {}
  CircuitParams(InductanceSet ind, FluxBias flux, WindingNumbers winding,
                JunctionEnergies junctions);

  const InductanceSet& inductances() const { return ind_; }
  const FluxBias& flux() const { return flux_; }
  const WindingNumbers& winding() const { return winding_; }
  const JunctionEnergies& junctions() const { return junctions_; }
  double effective_inductance() const { return l_eff_; }

  CircuitParams with_flux(const FluxBias& f) const;
  CircuitParams with_winding(const WindingNumbers& w) const;
  CircuitParams with_junctions(const JunctionEnergies& j) const;
  CircuitParams with_inductances(const InductanceSet& i) const;

 private:
  InductanceSet ind_;
  FluxBias flux_;
  WindingNumbers winding_;
  JunctionEnergies junctions_;
  double l_eff_;
};

struct DriveParams {
  double beta0 = 0.0;        // Phi0 I0 / (2 pi E_J), alpha-loop bias
  double beta_branch = 0.0;  // Phi0 I'0 / (2 pi E_J), branch-node bias
};

/// Wave vector of a bias current with reduced strength beta,
/// k = -pi^2 beta / (stiffness_loop * L_eff). This is I = -(n_c A q_c/m_c) hbar k
/// rewritten with (n_c A q_c/m_c) hbar (2 pi L_K / l) = Phi0.
double bias_wave_vector(const CircuitParams& params, double beta);

/// Phase-gradient products k*l of every segment, in radians.
struct WaveVectorSolution {
  double k1 = 0.0;   // k1 l
  double k2 = 0.0;   // k2 l
  double kp1 = 0.0;  // k'1 l'
  double kp2 = 0.0;  // k'2 l'
  double k = 0.0;    // k l~
};

enum class BiasNode {
  alpha_loop,  // I0 enters the SQUID node: k = k'1 + k'2, k + k0 = k1 + k2
  branch,      // I'0 enters the branch node: k'1 + k'2 + k'0 = k, k = k1 + k2
};

/// Exact solution of the three linearised fluxoid conditions together with
/// the two node conditions. k1, k2 and k coincide with the familiar closed
/// forms; the antisymmetric trapping combination k'1 - k'2 carries
/// m' + f1 + f2 + (1 - L_M/(L_K+L_g))(n + f_alpha) + (L_M/(L_K+L_g))(phi1-phi2)/2pi
/// over (L'_K + L'_g - L'_M). Throws std::domain_error for degenerate
/// denominators.
WaveVectorSolution wave_vectors(const InductanceSet& ind, const FluxBias& flux,
                                const WindingNumbers& wind,
                                const PhaseState& phases, double k0);

WaveVectorSolution wave_vectors_branch(const InductanceSet& ind,
                                       const FluxBias& flux,
                                       const WindingNumbers& wind,
                                       const PhaseState& phases,
                                       double k0_branch);

/// Trapping-branch products k'1 l', k'2 l' in the published closed form,
/// whose antisymmetric part is m' + f1 + f2 + (1 - L_M/(L_K+L_g)) f_alpha
/// over 2(L'_K + L'_g). This is the form the loop currents are quoted in; it
/// is not an exact solution of the boundary conditions (see wave_vectors).
std::array<double, 2> trapping_wave_vectors(const InductanceSet& ind,
                                            const FluxBias& flux,
                                            const WindingNumbers& wind,
                                            const PhaseState& phases,
                                            double k0);

/// Residuals of the left, right and alpha-loop fluxoid conditions and the
/// two node conditions, each divided by the magnitude of its largest term
/// (or 1 when all terms are tiny).
std::array<double, 5> boundary_residuals(const InductanceSet& ind,
                                         const FluxBias& flux,
                                         const WindingNumbers& wind,
                                         const PhaseState& phases,
                                         const WaveVectorSolution& sol,
                                         BiasNode node, double k0);

/// m + f2 - f1 - (phi1 + phi2 + 2 phi3 + 2 phi4)/2pi (+ (phi1p + phi2p)/2pi).
double loop_argument(const FluxBias& flux, const WindingNumbers& wind,
                     const PhaseState& s, bool include_extra = false);
/// n + f_alpha - (phi1 - phi2)/2pi.
double alpha_argument(const FluxBias& flux, const WindingNumbers& wind,
                      const PhaseState& s);

struct EnergyParts {
  double inductive = 0.0;
  double josephson = 0.0;
  double bias = 0.0;
  double total() const { return inductive + josephson + bias; }
};

// Main scheme, bias I0 on the alpha loop.
EnergyParts u_eff_parts(const CircuitParams& params, const PhaseState& s,
                        double beta0);
double u_eff(const CircuitParams& params, const PhaseState& s, double beta0);
Eigen::Vector4d u_eff_gradient(const CircuitParams& params,
                               const PhaseState& s, double beta0);
/// The bias terms are linear, so the Hessian does not depend on them.
Eigen::Matrix4d u_eff_hessian(const CircuitParams& params,
                              const PhaseState& s);

/// Coefficients w_i of the linear coupling sum_i w_i phi_i for each scheme.
Eigen::Vector4d alpha_bias_weights(const CircuitParams& params, double beta0);
Eigen::Vector4d branch_bias_weights(const CircuitParams& params,
                                    double beta_branch);

/// Same energy written in transformed coordinates; phi_m and phitilde_p are
/// explicit arguments rather than eliminated.
EnergyParts u_eff_transformed_parts(const CircuitParams& params,
                                    const TransformedPhases& t, double beta0);
double u_eff_transformed(const CircuitParams& params,
                         const TransformedPhases& t, double beta0);

// Main scheme, bias I'0 on the branch node.
EnergyParts u_eff_branch_parts(const CircuitParams& params,
                               const PhaseState& s, double beta_branch);
double u_eff_branch(const CircuitParams& params, const PhaseState& s,
                    double beta_branch);

/// Six-junction scheme, no bias. The third inductive term has prefactor
/// stiffness_loop * L_eff / (L'_K + L'_g).
EnergyParts u_eff_appendix_parts(const CircuitParams& params,
                                 const PhaseState& s);
double u_eff_appendix(const CircuitParams& params, const PhaseState& s);
/// Gradient with respect to (phi1, phi2, phi3, phi4, phi1p, phi2p).
Eigen::Matrix<double, 6, 1> u_eff_appendix_gradient(const CircuitParams& params,
                                                    const PhaseState& s);

/// m' + f1 + f2 + (1 - L_M/(L_K+L_g)) f_alpha.
double mprime_argument(int m_prime, double f1, double f2, double f_alpha,
                       double lm_ratio);

/// Integer m' minimising mprime_argument^2; exact ties go to the smaller m'.
int optimal_mprime(double f1, double f2, double f_alpha, double lm_ratio);

/// Reduced two-dimensional potential V(phi_p, phitilde_m)/E_J obtained on the
/// constraint surface:
///   -2 cos(pi(n+f_alpha)) cos(phi_p)
///   - 2 r cos((pi(m+f2-f1) - phi_p)/2) cos(phitilde_m) + beta0 phi_p
/// with r = E~_J/E_J.
double v_reduced(double ej_ratio, const FluxBias& flux,
                 const WindingNumbers& wind, double phi_p, double phitilde_m,
                 double beta0);
Eigen::Vector2d v_reduced_gradient(double ej_ratio, const FluxBias& flux,
                                   const WindingNumbers& wind, double phi_p,
                                   double phitilde_m, double beta0);
Eigen::Matrix2d v_reduced_hessian(double ej_ratio, const FluxBias& flux,
                                  const WindingNumbers& wind, double phi_p,
                                  double phitilde_m);

}  // namespace gfq
