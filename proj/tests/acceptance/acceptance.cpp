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


// Acceptance run: one PASS/FAIL line per criterion, each with its measured
// values, tolerance and wall time. Exit status is non-zero if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <fmt/format.h>

#include "gfq/circuit_model.hpp"
#include "gfq/cqed.hpp"
#include "gfq/errors.hpp"
#include "gfq/landscape.hpp"
#include "gfq/observables.hpp"
#include "gfq/spectrum.hpp"

using namespace gfq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [FAIL]");
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;  // seconds
  std::function<Outcome()> run;
};

const FluxBias kFlux{0.94, 0.94, 0.2};
const WindingNumbers kWind{-1, -1, 1};

bool within_rel(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

MinimaResult reference_minima() { return find_minima(FullPotential(CircuitParams{})); }

Outcome minima() {
  Outcome o;
  const MinimaResult r = reference_minima();
  o.check(r.minima.size() == 2, fmt::format("{} minima", r.minima.size()));
  if (r.minima.size() != 2) return o;
  const AnalyticMinima a = analytic_minima(2.0, 0.2);
  for (const LocalMinimum& m : r.minima) {
    const double target = m.label == WellLabel::down ? a.phi_p_down : a.phi_p_up;
    o.check(std::abs(m.position.phitilde_m) <= 1e-3, fmt::format("phitilde_m = {:.2e}", m.position.phitilde_m));
    o.check(std::abs(m.position.phi_p - target) <= 0.04 && std::abs(std::abs(m.position.phi_p) - 1.809) <= 0.04,
            fmt::format("phi_p = {:.5f} (closed form {:.5f}, tol 0.04)", m.position.phi_p, target));
  }
  return o;
}

Outcome decomposition() {
  Outcome o;
  const CircuitParams p;
  const MinimaResult r = reference_minima();
  o.check(r.minima.size() == 2, fmt::format("{} minima", r.minima.size()));
  for (const LocalMinimum& m : r.minima) {
    const EnergyParts e = u_eff_parts(p, FullPotential::phases(m.coords), 0.0);
    o.check(std::abs(e.josephson - (-2.886)) <= 0.02, fmt::format("U_JJ/E_J = {:.4f} (-2.886 +- 0.02)", e.josephson));
    o.check(std::abs(e.inductive - 0.006) <= 0.003, fmt::format("U_ind/E_J = {:.4f} (0.006 +- 0.003)", e.inductive));
  }
  return o;
}

Outcome currents() {
  Outcome o;
  const CircuitParams p;
  o.check(std::abs(p.inductances().mutual_ratio() - 0.4) <= 1e-12, "L_M/(L_K+L_g) = 0.4");
  const MinimaResult r = reference_minima();
  o.check(r.minima.size() == 2, fmt::format("{} minima", r.minima.size()));
  if (r.minima.size() != 2) return o;
  const PhysicalConstants c;
  const LoopCurrents down = loop_currents(p, FullPotential::phases(r.minima[0].coords), -2);
  const LoopCurrents up = loop_currents(p, FullPotential::phases(r.minima[1].coords), -2);
  o.check(within_rel(up.ip1, -down.ip1, 1e-8) && within_rel(up.ip1, up.ip2, 1e-8), "I'1 = I'2 = -I'1(other well)");
  o.check(within_rel(std::abs(up.ip1), 0.00123, 0.03), fmt::format("|I' L_eff/Phi0| = {:.6f} (0.00123 +- 3%)", std::abs(up.ip1)));
  o.check(within_rel(std::abs(up.ialpha), 0.00022, 0.05),
          fmt::format("|I_alpha L_eff/Phi0| = {:.6f} (0.00022 +- 5%)", std::abs(up.ialpha)));
  const double ip_na = std::abs(to_si(up.ip1, Quantity::current, c)) * 1e9;
  const double ia_na = std::abs(to_si(up.ialpha, Quantity::current, c)) * 1e9;
  o.check(within_rel(ip_na, 170.0, 0.03), fmt::format("|I'| = {:.1f} nA (170 +- 3%)", ip_na));
  o.check(within_rel(ia_na, 30.0, 0.03), fmt::format("|I_alpha| = {:.1f} nA (30 +- 3%)", ia_na));
  return o;
}

Outcome coupling() {
  Outcome o;
  const double g = coupling_strength(2.0, 0.2);
  o.check(std::abs(g - 0.288) <= 0.015, fmt::format("g/(Phi0 I_b) = {:.4f} (0.288 +- 0.015)", g));
  std::vector<double> fas;
  for (int k = 0; k <= 50; ++k) fas.push_back(0.01 * k);
  for (double ratio : {1.5, 2.0, 2.5}) {
    const GCurve curve = g_curve({ratio}, fas);
    bool monotone = curve.rows.size() >= 2;
    for (std::size_t i = 1; i < curve.rows.size(); ++i) monotone = monotone && curve.rows[i].g < curve.rows[i - 1].g;
    o.check(monotone, fmt::format("ratio {} monotone decreasing over {} points", ratio, curve.rows.size()));
  }
  return o;
}

Outcome mprime() {
  Outcome o;
  constexpr int kCalls = 10000;
  int m = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < kCalls; ++i) m = optimal_mprime(0.94, 0.94, 0.2, 0.4 + 0.0 * i);
  const double per_call = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / kCalls;
  o.check(m == -2, fmt::format("optimal m' = {}", m));
  o.check(per_call < 1e-3, fmt::format("{:.2e} s per call (< 1 ms)", per_call));
  return o;
}

Outcome gap() {
  Outcome o;
  constexpr double kEjOverH = 200.0;  // GHz
  const ReducedPotential v(2.0, kFlux, kWind);
  const GapResult g1 = tunneling_gap_1d(v, 40.0);
  const Splitting2D g2 = splitting_2d([&v](double x, double y) { return v(x, y); },
                                      MassModel::from_charging_energy(1.0 / 40.0, 2.0));
  const double ghz1 = g1.delta * kEjOverH, ghz2 = g2.delta * kEjOverH;
  o.check(ghz1 >= 0.3 && ghz1 <= 3.0, fmt::format("Delta/h (1D) = {:.4f} GHz (band [0.3, 3])", ghz1));
  const double ratio = std::max(g1.delta, g2.delta) / std::min(g1.delta, g2.delta);
  o.check(ratio <= 2.0, fmt::format("Delta/h (2D) = {:.4f} GHz, 1D/2D ratio {:.3f} (<= 2)", ghz2, ratio));
  std::vector<double> sweep;
  for (double fa : {0.1, 0.15, 0.2, 0.25}) {
    sweep.push_back(tunneling_gap_1d(ReducedPotential(2.0, {0.94, 0.94, fa}, kWind), 40.0).delta * kEjOverH);
  }
  bool increasing = true;
  for (std::size_t i = 1; i < sweep.size(); ++i) increasing = increasing && sweep[i] > sweep[i - 1];
  o.check(increasing, fmt::format("sweep f_alpha 0.1..0.25: {:.4f}, {:.4f}, {:.4f}, {:.4f} GHz increasing", sweep[0],
                                  sweep[1], sweep[2], sweep[3]));
  return o;
}

Outcome robustness() {
  Outcome o;
  auto params = [](double loop, double alpha) {
    JunctionEnergies jj;
    jj.stiffness_loop = loop;
    jj.stiffness_alpha = alpha;
    return CircuitParams(InductanceSet{}, kFlux, kWind, jj);
  };
  const FullPotential soft(params(1000, 3000)), stiff(params(10000, 30000));
  double worst = 0.0;
  for (double b : {0.025, 0.05, 0.075, 0.1}) {
    worst = std::max(worst, std::abs(tilt(soft, soft.with_drive({0.0, b})).epsilon));
  }
  o.check(worst < 1e-2, fmt::format("max branch-bias tilt (beta' <= 0.1) = {:.3e} E_J (< 1e-2)", worst));
  const double e_soft = std::abs(tilt(soft, soft.with_drive({0.0, 0.1})).epsilon);
  const double e_stiff = std::abs(tilt(stiff, stiff.with_drive({0.0, 0.1})).epsilon);
  o.check(e_soft >= 5.0 * e_stiff, fmt::format("stiffness x10 reduces the tilt {:.1f}x (>= 5x)", e_soft / e_stiff));
  const double beta0 = 1e-3;
  const double eps = tilt(soft, soft.with_drive({beta0, 0.0})).epsilon;
  const double first_order = 2.0 * alpha_param(2.0, 0.2) * beta0;
  o.check(within_rel(eps, first_order, 0.05),
          fmt::format("alpha-bias tilt {:.5e} vs 2 alpha beta0 = {:.5e} (5%)", eps, first_order));
  return o;
}

Eigen::VectorXcd basis_state(int dim, int index) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(index) = 1.0;
  return v;
}

Outcome cqed() {
  Outcome o;
  const double g = 0.01;
  const OperatorMatrix rwa = build_rwa_h(1.0, g, 1.0);
  const OperatorMatrix full = build_qubit_resonator_h(1.0, g, 1.0);
  const int e0 = rwa.basis().index({1, 0});
  const Eigen::VectorXcd psi0 = basis_state(rwa.dim(), e0);
  const Propagator ur(rwa), uf(full);
  auto pe = [&](const Propagator& u, double t) {
    const Eigen::VectorXcd psi = u.apply(psi0, t);
    double p = 0.0;
    for (int k = 0; k < rwa.dim(); ++k) {
      if (rwa.basis().levels(k)[0] == 1) p += std::norm(psi(k));
    }
    return p;
  };
  // The first population minimum is half a vacuum Rabi period.
  double lo = 0.25 * kPi / g, hi = 0.75 * kPi / g;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < 100; ++i) {
    const double a = hi - r * (hi - lo), c = lo + r * (hi - lo);
    if (pe(ur, a) < pe(ur, c)) {
      hi = c;
    } else {
      lo = a;
    }
  }
  const double period = lo + hi;
  o.check(within_rel(period, kPi / g, 1e-3), fmt::format("vacuum Rabi period {:.6f} vs pi/g = {:.6f} (0.1%)", period, kPi / g));
  double worst = 0.0;
  for (double t = 0.0; t <= 10.0 * kPi / g; t += 0.5) worst = std::max(worst, std::abs(pe(uf, t) - pe(ur, t)));
  o.check(worst <= 0.05, fmt::format("max |P_full - P_rwa| over 10 periods = {:.4f} (<= 0.05)", worst));

  const double dp = 0.5;
  const TwoQubitParams tq{1.0 + dp, 1.0 + dp, 0.05 * dp, 0.05 * dp, 1.0};
  const double split = exchange_splitting_exact(tq, 6);
  const double two_j = 2.0 * tq.exchange();
  o.check(within_rel(split, two_j, 0.01), fmt::format("exact splitting {:.6e} vs 2J = {:.6e} (1%)", split, two_j));
  return o;
}

Outcome algebra() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> pos(0.1, 5.0), sym(-1.0, 1.0), phase(-3.0, 3.0);
  std::uniform_int_distribution<int> wn(-3, 3);
  double worst_residual = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const InductanceSet ind{pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng)};
    const FluxBias flux{sym(rng), sym(rng), sym(rng)};
    const WindingNumbers wind{wn(rng), wn(rng), wn(rng)};
    const PhaseState s{phase(rng), phase(rng), phase(rng), phase(rng), 0.0, 0.0};
    const double k0 = sym(rng);
    for (BiasNode node : {BiasNode::alpha_loop, BiasNode::branch}) {
      const WaveVectorSolution w = node == BiasNode::branch ? wave_vectors_branch(ind, flux, wind, s, k0)
                                                            : wave_vectors(ind, flux, wind, s, k0);
      for (double res : boundary_residuals(ind, flux, wind, s, w, node, k0)) {
        worst_residual = std::max(worst_residual, std::abs(res));
      }
    }
  }
  o.check(worst_residual <= 1e-12, fmt::format("plug-back residual {:.2e} over 1e4 draws (<= 1e-12)", worst_residual));

  const CircuitParams p;
  double worst_grad = 0.0;
  for (int n = 0; n < 100; ++n) {
    const PhaseState s{phase(rng), phase(rng), phase(rng), phase(rng), 0.0, 0.0};
    const double beta0 = 0.01 * sym(rng);
    const Eigen::Vector4d ga = u_eff_gradient(p, s, beta0);
    const std::array<double, 4> x = s.main();
    for (int i = 0; i < 4; ++i) {
      std::array<double, 4> xp = x, xm = x;
      xp[static_cast<std::size_t>(i)] += 1e-5;
      xm[static_cast<std::size_t>(i)] -= 1e-5;
      const double fd = (u_eff(p, PhaseState::from_main(xp), beta0) - u_eff(p, PhaseState::from_main(xm), beta0)) / 2e-5;
      worst_grad = std::max(worst_grad, std::abs(ga(i) - fd) / std::max(1.0, ga.lpNorm<Eigen::Infinity>()));
    }
    const double xp = 2.0 * phase(rng), ym = phase(rng);
    const Eigen::Vector2d gv = v_reduced_gradient(2.0, kFlux, kWind, xp, ym, beta0);
    const double fx = (v_reduced(2.0, kFlux, kWind, xp + 1e-5, ym, beta0) -
                       v_reduced(2.0, kFlux, kWind, xp - 1e-5, ym, beta0)) / 2e-5;
    const double fy = (v_reduced(2.0, kFlux, kWind, xp, ym + 1e-5, beta0) -
                       v_reduced(2.0, kFlux, kWind, xp, ym - 1e-5, beta0)) / 2e-5;
    worst_grad = std::max({worst_grad, std::abs(gv(0) - fx) / std::max(1.0, gv.norm()),
                           std::abs(gv(1) - fy) / std::max(1.0, gv.norm())});
  }
  o.check(worst_grad <= 1e-6, fmt::format("gradient vs finite differences {:.2e} over 100 points (<= 1e-6)", worst_grad));

  double worst_parity = 0.0, worst_global = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double x = 2.0 * phase(rng), y = phase(rng);
    worst_parity = std::max(worst_parity, std::abs(v_reduced(2.0, kFlux, kWind, x, y, 0.0) -
                                                   v_reduced(2.0, kFlux, kWind, -x, y, 0.0)));
    const FluxBias f{0.91, 0.96, 0.2};
    const double c = phase(rng);
    const FluxBias shifted{f.f1 + c, f.f2 + c, f.f_alpha};
    worst_global = std::max(worst_global, std::abs(v_reduced(2.0, f, kWind, x, y, 0.01) -
                                                   v_reduced(2.0, shifted, kWind, x, y, 0.01)));
  }
  o.check(worst_parity <= 1e-12, fmt::format("phi_p parity {:.1e} over 1e3 points", worst_parity));
  o.check(worst_global <= 1e-12, fmt::format("global-flux shift {:.1e} over 1e3 points", worst_global));
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = ::pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string("\"") + GFQSIM_PATH + "\" reproduce 2>/dev/null";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  o.check(!a.empty() && a.find("\"entries\"") != std::string::npos, fmt::format("scorecard emitted ({} bytes)", a.size()));
  o.check(a == b && s1 == s2, "two consecutive runs are byte-identical");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "minima", 5.0, minima},
      {2, "potential decomposition", 5.0, decomposition},
      {3, "currents", 5.0, currents},
      {4, "coupling", 1.0, coupling},
      {5, "m' selection", 1.0, mprime},
      {6, "gap", 60.0, gap},
      {7, "branch-bias robustness", 30.0, robustness},
      {8, "circuit-QED dynamics", 30.0, cqed},
      {9, "algebraic suites", 30.0, algebra},
      {10, "determinism", 600.0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(secs < c.time_limit, fmt::format("runtime {:.3f} s (< {} s)", secs, c.time_limit));
    if (!o.pass) ++failed;
    fmt::print("criterion {:>2} {:<24} {}  {}\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
