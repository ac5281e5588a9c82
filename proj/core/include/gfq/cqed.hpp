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

// Resonator quantisation, qubit-resonator Hamiltonians and closed-system
// time evolution. Qubit levels are (g, e) with sigma_z = diag(-1, 1) and
// sigma_- = |g><e|; Fock levels run 0..N-1.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gfq/operator_matrix.hpp"

namespace gfq {

struct ResonatorParams {
  double length = 1.0;
  double l_s = 1.0;  // inductance per length
  double c = 1.0;    // capacitance per length
  std::optional<double> d;      // capacitor width (uniform-c mode)
  std::optional<double> delta;  // lumped coupling parameter (delta mode)
  double hbar = 1.0;

  void validate() const;
  double velocity() const;
};

double mode_frequency(const ResonatorParams& p, int n);
/// cos(n pi x/L) for odd n, sin(n pi x/L) for even n, on |x| <= L/2.
double mode_shape(const ResonatorParams& p, int n, double x);
/// Coefficient of -i(a_n - a_n^dagger) in the current operator at x.
double current_mode_amplitude(const ResonatorParams& p, int n, double x);
/// Bias-current amplitude of mode n (the qubit-driving mode is n = 2).
/// Exactly one of d and delta must be configured, else ConfigError.
double bias_amplitude(const ResonatorParams& p, int n = 2);

constexpr int kDefaultFockCutoff = 10;
constexpr int kMinFockCutoff = 5;

/// omega a^dag a + (Delta/2) sigma_z + i g sigma_x (a - a^dag).
OperatorMatrix build_qubit_resonator_h(double delta, double g, double omega,
                                       int fock_cutoff = kDefaultFockCutoff);
/// Same system before the basis change: omega a^dag a - (Delta/2)(|d><u| + |u><d|)
/// + i g (|d><d| - |u><u|)(a - a^dag).
OperatorMatrix build_qubit_resonator_h_wells(double delta, double g, double omega,
                                             int fock_cutoff = kDefaultFockCutoff);
/// omega a^dag a + (Delta/2) sigma_z - i g (a^dag sigma_- - sigma_+ a).
OperatorMatrix build_rwa_h(double delta, double g, double omega,
                           int fock_cutoff = kDefaultFockCutoff);

/// Photon number plus excited qubits, diagonal on any qubit/Fock basis.
OperatorMatrix excitation_number(const TensorBasis& basis);

/// Total population in the highest Fock level.
double top_fock_population(const Eigen::VectorXcd& psi, const TensorBasis& basis);

/// Exact propagator of a time-independent Hamiltonian.
class Propagator {
 public:
  explicit Propagator(const OperatorMatrix& h);
  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double t) const;

 private:
  Eigen::VectorXd energies_;
  Eigen::MatrixXcd vectors_;
};

/// exp(-i H t / hbar) psi, hbar = 1. Throws SolverError on norm drift > 1e-8.
Eigen::VectorXcd time_evolve(const OperatorMatrix& h, const Eigen::VectorXcd& psi, double t);

struct DrivenEvolution {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  double norm_drift = 0.0;
};

/// H(t) = h0 + amplitude sin(omega t) v, piecewise constant over steps of
/// at most period / steps_per_period, each step exponentiated exactly.
/// States are recorded every `record_every` steps (and at the end).
DrivenEvolution evolve_driven(const OperatorMatrix& h0, const OperatorMatrix& v,
                              double amplitude, double omega,
                              const Eigen::VectorXcd& psi0, double t_final,
                              int steps_per_period = 200, int record_every = 1);

struct TwoQubitParams {
  double delta_l = 0.0;
  double delta_r = 0.0;
  double g_l = 0.0;
  double g_r = 0.0;
  double omega1 = 0.0;

  double detuning_l() const { return delta_l - omega1; }
  double detuning_r() const { return delta_r - omega1; }
  double shifted_gap_l() const { return delta_l + g_l * g_l / detuning_l(); }
  double shifted_gap_r() const { return delta_r + g_r * g_r / detuning_r(); }
  /// J = (1/2)(1/Delta'_l + 1/Delta'_r) g_l g_r.
  double exchange() const;
  /// |Delta'_j| >= 10 |g_j| for both qubits.
  bool dispersive_valid() const;
};

/// Effective exchange Hamiltonian on qubit_l x qubit_r x Fock. Throws
/// DispersiveInvalid outside the dispersive regime unless forced.
OperatorMatrix dispersive_two_qubit_h(const TwoQubitParams& p,
                                      int fock_cutoff = kDefaultFockCutoff,
                                      bool force = false);

/// Both qubits coupled to the same mode with the excitation-conserving
/// coupling -i g_j (a^dag sigma_-j - sigma_+j a), or the full i g_j sigma_xj (a - a^dag)
/// when rwa is false.
OperatorMatrix exact_two_qubit_h(const TwoQubitParams& p,
                                 int fock_cutoff = kDefaultFockCutoff, bool rwa = true);

/// |E_+ - E_-| of the exchange doublet from exact diagonalisation of the
/// RWA two-qubit Hamiltonian; equals 2J in the dispersive regime.
double exchange_splitting_exact(const TwoQubitParams& p,
                                int fock_cutoff = kDefaultFockCutoff);

}  // namespace gfq
