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

#include "gfq/observables.hpp"

#include <cmath>

#include "gfq/errors.hpp"
#include "gfq/landscape.hpp"
#include "gfq/spectrum.hpp"

namespace gfq {

void PhysicalConstants::validate() const {
  if (!(phi0 > 0.0) || !(h > 0.0) || !(l_eff > 0.0) || !(ej_over_h > 0.0)) {
    throw ConfigError("physical constants must be positive");
  }
}

double to_si(double reduced, Quantity kind, const PhysicalConstants& c) {
  c.validate();
  switch (kind) {
    case Quantity::current:
      return reduced * c.phi0 / c.l_eff;
    case Quantity::energy:
      return reduced * c.h * c.ej_over_h;
  }
  return 0.0;
}

LoopCurrents loop_currents(const CircuitParams& params, const PhaseState& minimum,
                           std::optional<int> m_prime, double beta0) {
  const InductanceSet& ind = params.inductances();
  const FluxBias& f = params.flux();
  const int mp = m_prime ? *m_prime
                         : optimal_mprime(f.f1, f.f2, f.f_alpha, ind.mutual_ratio());
  const WindingNumbers w = WindingNumbers::from_m(params.winding().m(), mp, params.winding().n);
  const double k0 = bias_wave_vector(params, beta0);
  const auto kp = trapping_wave_vectors(ind, f, w, minimum, k0);

  // (n_c A q_c / m_c) hbar = Phi0 l' / (2 pi L'_K) with k' l' given.
  const double scale = -params.effective_inductance() / (kTwoPi * ind.kinetic_branch);
  LoopCurrents out;
  out.ip1 = scale * kp[0];
  out.ip2 = scale * kp[1];
  const double s = params.junctions().stiffness_loop;
  out.ialpha = -(kPi / (4.0 * s)) * (std::sin(minimum.phi1) - std::sin(minimum.phi2));
  out.m_prime = mp;
  return out;
}

double coupling_strength(double ej_ratio, double f_alpha, double ib_reduced) {
  return ib_reduced * alpha_param(ej_ratio, f_alpha) / kTwoPi;
}

GCurve g_curve(const std::vector<double>& ej_ratios, const std::vector<double>& f_alphas) {
  GCurve out;
  for (double r : ej_ratios) {
    for (double fa : f_alphas) {
      if (!double_well_exists(r, fa)) {
        ++out.omitted;
        continue;
      }
      out.rows.push_back({r, fa, coupling_strength(r, fa)});
    }
  }
  return out;
}

}  // namespace gfq
