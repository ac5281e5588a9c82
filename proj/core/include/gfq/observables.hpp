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

// Measurable quantities: loop currents, coupling to the bias line and
// conversion out of reduced units.

#include <optional>
#include <vector>

#include "gfq/circuit_model.hpp"

namespace gfq {

struct PhysicalConstants {
  double phi0 = 2.067833848e-15;  // Wb
  double h = 6.62607015e-34;      // J s
  double l_eff = 15e-12;          // H
  double ej_over_h = 200e9;       // Hz

  /// Throws ConfigError for non-positive configured values.
  void validate() const;
};

enum class Quantity { current, energy };

/// current: value * Phi0 / L_eff (A); energy: value * h * (E_J/h) (J).
double to_si(double reduced, Quantity kind, const PhysicalConstants& c);

/// Currents reduced as I L_eff / Phi0.
struct LoopCurrents {
  double ip1 = 0.0;
  double ip2 = 0.0;
  double ialpha = 0.0;
  int m_prime = 0;
};

/// Trapping-branch currents from the closed-form k'_i and the alpha-loop
/// current (I1 - I2)/2 with I_i L_eff/Phi0 = -(pi / (2 stiffness_loop)) sin phi_i.
/// Without `m_prime` the minimising m' is used.
LoopCurrents loop_currents(const CircuitParams& params, const PhaseState& minimum,
                           std::optional<int> m_prime = std::nullopt, double beta0 = 0.0);

/// g = (Phi0 I_b / 2 pi) alpha; ib_reduced is Phi0 I_b in energy units.
double coupling_strength(double ej_ratio, double f_alpha, double ib_reduced = 1.0);

struct GCurveRow {
  double ej_ratio = 0.0;
  double f_alpha = 0.0;
  double g = 0.0;  // g / (Phi0 I_b)
};

struct GCurve {
  std::vector<GCurveRow> rows;
  int omitted = 0;  // grid points outside the open existence region
};

GCurve g_curve(const std::vector<double>& ej_ratios, const std::vector<double>& f_alphas);

}  // namespace gfq
