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

// Qubit spectrum: tunnelling splitting of the double well, the tight-binding
// two-level Hamiltonian and the alpha parameter.

#include <functional>
#include <string>
#include <vector>

#include "gfq/circuit_model.hpp"
#include "gfq/landscape.hpp"
#include "gfq/operator_matrix.hpp"

namespace gfq {

/// alpha = 2 arccos(r / (4 cos(pi f_alpha))), the well half-separation.
/// Accepts the closed region 0 < argument <= 1; throws NoDoubleWell otherwise.
double alpha_param(double ej_ratio, double f_alpha);

/// Kinetic prefactors (coefficients of -d^2/dphi^2, in units of E_J) from
/// the junction capacitances with phitilde_p slaved to phi_p and phi_m
/// frozen:
///   phi_p:       e^2 / (C + C~/4) = 2 E_C / (1 + r/4)
///   phitilde_m:  e^2 / C~         = 2 E_C / r
/// assuming C~/C = r = E~_J/E_J and E_C = e^2/2C.
struct MassModel {
  double kinetic_phi_p = 0.0;
  double kinetic_phitilde_m = 0.0;

  static MassModel from_charging_energy(double e_c, double ej_ratio);
};

/// Hard-wall grid; `points` includes the two wall nodes.
struct Grid1D {
  double lo = -2.0 * kPi;
  double hi = 2.0 * kPi;
  int points = 2001;
};

struct GapResult {
  double t_q = 0.0;
  double delta = 0.0;
  std::vector<double> levels;  // lowest four
  double wall_amplitude = 0.0;  // |psi| next to the walls over max |psi|, doublet states
  bool doublet_isolated = true;  // E2 - E1 >= 3 Delta
  std::string warning;
};

/// Lowest doublet of -kinetic d^2/dphi^2 + V(phi) by central differences.
GapResult tunneling_gap_1d(const std::function<double(double)>& v, double kinetic,
                           const Grid1D& grid = {});

/// Gap along the phitilde_m = 0 cut of the reduced potential, with E_C = E_J /
/// ej_over_ec. The cut must be symmetric (beta0 = 0).
GapResult tunneling_gap_1d(const ReducedPotential& v, double ej_over_ec,
                           const Grid1D& grid = {});

/// Interior points per axis; walls sit on the range ends.
struct Grid2D {
  double x_lo = -2.0 * kPi;
  double x_hi = 2.0 * kPi;
  double y_lo = -kPi;
  double y_hi = kPi;
  int nx = 201;
  int ny = 201;
};

struct Splitting2D {
  std::vector<double> levels;
  double delta = 0.0;
  int iterations = 0;
};

/// Lowest eigenpairs of the 5-point finite-difference Hamiltonian by
/// shift-invert subspace iteration. Throws SolverError on non-convergence.
Splitting2D splitting_2d(const std::function<double(double, double)>& v,
                         const MassModel& masses, const Grid2D& grid = {}, int nev = 4);

struct QubitSpectrum {
  double e_down = 0.0;
  double e_up = 0.0;
  double t_q = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double eps = 0.0;  // e_up - e_down
};

/// Well energies from the (possibly biased) potential, t_q from the
/// unbiased cut.
QubitSpectrum qubit_spectrum(const ReducedPotential& v, double ej_over_ec,
                             const Grid1D& grid = {});

/// E_down|d><d| + E_up|u><u| - t_q(|d><u| + |u><d|) - beta0 alpha (|d><d| - |u><u|).
OperatorMatrix tight_binding_h(const QubitSpectrum& spectrum, double beta0);

/// Rotates a well-basis operator into |0> = (|d> + |u>)/sqrt2,
/// |1> = (|d> - |u>)/sqrt2.
OperatorMatrix to_qubit_basis(const OperatorMatrix& well_operator);

}  // namespace gfq
