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

#include "gfq/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gfq/errors.hpp"

namespace gfq {

namespace {

// Raw phases = kTransform * (phi_p, phi_m, phitilde_p, phitilde_m).
Eigen::Matrix4d make_transform() {
  Eigen::Matrix4d t;
  t << 1, 1, 0, 0,
       1, -1, 0, 0,
       0, 0, 1, 1,
       0, 0, 1, -1;
  return t;
}
const Eigen::Matrix4d kTransform = make_transform();

constexpr double kMaxStep = 0.5;

bool positive_definite(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 0.0;
}

}  // namespace

// ReducedPotential -----------------------------------------------------------

double ReducedPotential::operator()(double phi_p, double phitilde_m) const {
  return v_reduced(ej_ratio_, flux_, winding_, phi_p, phitilde_m, beta0_);
}

double ReducedPotential::value(const Eigen::VectorXd& x) const {
  return (*this)(x(0), x(1));
}

Eigen::VectorXd ReducedPotential::gradient(const Eigen::VectorXd& x) const {
  return v_reduced_gradient(ej_ratio_, flux_, winding_, x(0), x(1), beta0_);
}

Eigen::MatrixXd ReducedPotential::hessian(const Eigen::VectorXd& x) const {
  return v_reduced_hessian(ej_ratio_, flux_, winding_, x(0), x(1));
}

Eigen::VectorXd ReducedPotential::lift(const PlanePoint& p) const {
  return Eigen::Vector2d(p.phi_p, p.phitilde_m);
}

PlanePoint ReducedPotential::project(const Eigen::VectorXd& x) const {
  return {x(0), x(1)};
}

double ReducedPotential::surface(const PlanePoint& p) const {
  return (*this)(p.phi_p, p.phitilde_m);
}

// FullPotential --------------------------------------------------------------

FullPotential::FullPotential(CircuitParams params, DriveParams drive)
    : params_(std::move(params)), drive_(drive) {
  weights_ = alpha_bias_weights(params_, drive_.beta0) +
             branch_bias_weights(params_, drive_.beta_branch);
}

PhaseState FullPotential::phases(const Eigen::VectorXd& x) {
  const Eigen::Vector4d raw = kTransform * x.head<4>();
  return {raw(0), raw(1), raw(2), raw(3), 0.0, 0.0};
}

double FullPotential::value(const Eigen::VectorXd& x) const {
  const PhaseState s = phases(x);
  const EnergyParts e = u_eff_parts(params_, s, 0.0);
  return e.inductive + e.josephson + weights_.dot(Eigen::Vector4d(s.phi1, s.phi2, s.phi3, s.phi4));
}

Eigen::VectorXd FullPotential::gradient(const Eigen::VectorXd& x) const {
  const Eigen::Vector4d g = u_eff_gradient(params_, phases(x), 0.0) + weights_;
  return kTransform.transpose() * g;
}

Eigen::MatrixXd FullPotential::hessian(const Eigen::VectorXd& x) const {
  return kTransform.transpose() * u_eff_hessian(params_, phases(x)) * kTransform;
}

Eigen::VectorXd FullPotential::lift(const PlanePoint& p) const {
  const auto& f = params_.flux();
  const auto& w = params_.winding();
  const double phi_m = kPi * (w.n + f.f_alpha);
  const double phitilde_p = 0.5 * (kPi * (w.m() + f.f2 - f.f1) - p.phi_p);
  return Eigen::Vector4d(p.phi_p, phi_m, phitilde_p, p.phitilde_m);
}

PlanePoint FullPotential::project(const Eigen::VectorXd& x) const {
  return {x(0), x(3)};
}

Eigen::VectorXd FullPotential::relax(const PlanePoint& p) const {
  Eigen::VectorXd x = lift(p);
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd g = gradient(x);
    const Eigen::Vector2d gh(g(1), g(2));
    if (gh.norm() <= 1e-11) break;
    const Eigen::MatrixXd h = hessian(x);
    Eigen::Matrix2d hh;
    hh << h(1, 1), h(1, 2), h(2, 1), h(2, 2);
    Eigen::Vector2d step = -hh.ldlt().solve(gh);
    if (step.norm() > kMaxStep) step *= kMaxStep / step.norm();
    x(1) += step(0);
    x(2) += step(1);
    if (step.norm() < 1e-15) break;
  }
  return x;
}

double FullPotential::surface(const PlanePoint& p) const {
  return value(relax(p));
}

// Minimisation ---------------------------------------------------------------

bool SearchWindow::contains(const PlanePoint& p, double margin) const {
  return p.phi_p > phi_p_min + margin && p.phi_p < phi_p_max - margin &&
         p.phitilde_m > phitilde_m_min + margin && p.phitilde_m < phitilde_m_max - margin;
}

std::optional<LocalMinimum> descend(const Potential& v, const Eigen::VectorXd& start,
                                    const MinimizerOptions& opts) {
  Eigen::VectorXd x = start;
  double f = v.value(x);
  Eigen::VectorXd g = v.gradient(x);

  for (int it = 0; it < opts.max_iterations && g.norm() > opts.gradient_tolerance; ++it) {
    const Eigen::MatrixXd h = v.hessian(x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const double floor = std::max(1e-8, 1e-10 * lam.cwiseAbs().maxCoeff());
    const Eigen::VectorXd inv = lam.cwiseAbs().cwiseMax(floor).cwiseInverse();
    Eigen::VectorXd p = -es.eigenvectors() * inv.asDiagonal() *
                        (es.eigenvectors().transpose() * g);
    if (p.norm() > kMaxStep) p *= kMaxStep / p.norm();

    const bool newton_regime = lam.minCoeff() > 0.0 && p.norm() < 1e-4;
    const double slope = g.dot(p);
    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      const Eigen::VectorXd trial = x + t * p;
      const double ft = v.value(trial);
      if (ft <= f + 1e-4 * t * slope) {
        x = trial;
        f = ft;
        accepted = true;
        break;
      }
      // Close to a minimum the energy decrease drops below round-off; fall
      // back to the gradient norm as merit function.
      if (newton_regime) {
        const Eigen::VectorXd gt = v.gradient(trial);
        if (gt.norm() < g.norm()) {
          x = trial;
          f = ft;
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) break;
    g = v.gradient(x);
  }

  if (!(g.norm() <= opts.gradient_tolerance) || !positive_definite(v.hessian(x))) {
    return std::nullopt;
  }
  LocalMinimum m;
  m.coords = x;
  m.position = v.project(x);
  m.energy = f;
  m.gradient_norm = g.norm();
  m.label = m.position.phi_p < 0.0 ? WellLabel::down : WellLabel::up;
  return m;
}

namespace {

// Two converged points belong to one basin when the straight path between
// them never rises above the higher endpoint. This merges the spread-out
// points a flat (e.g. quartic) minimum leaves behind.
bool same_basin(const Potential& v, const LocalMinimum& a, const LocalMinimum& b, double tol) {
  const double ceiling = std::max(a.energy, b.energy) + tol * std::max(1.0, std::abs(a.energy));
  constexpr int kSamples = 32;
  for (int k = 1; k < kSamples; ++k) {
    const double t = static_cast<double>(k) / kSamples;
    if (v.value((1.0 - t) * a.coords + t * b.coords) > ceiling) return false;
  }
  return true;
}

}  // namespace

MinimaResult find_minima(const Potential& v, const MinimizerOptions& opts) {
  if (opts.seeds_phi_p < 1 || opts.seeds_phitilde_m < 1) {
    throw std::invalid_argument("find_minima: seed grid must be non-empty");
  }
  const SearchWindow& w = opts.window;
  const double dp = (w.phi_p_max - w.phi_p_min) / opts.seeds_phi_p;
  const double dm = (w.phitilde_m_max - w.phitilde_m_min) / opts.seeds_phitilde_m;

  MinimaResult result;
  for (int i = 0; i < opts.seeds_phi_p; ++i) {
    for (int j = 0; j < opts.seeds_phitilde_m; ++j) {
      const PlanePoint seed{w.phi_p_min + (i + 0.5) * dp, w.phitilde_m_min + (j + 0.5) * dm};
      auto m = descend(v, v.lift(seed), opts);
      if (!m || !w.contains(m->position, opts.dedup_tolerance)) continue;
      const auto same = std::find_if(
          result.minima.begin(), result.minima.end(), [&](const LocalMinimum& other) {
            return (other.coords - m->coords).cwiseAbs().maxCoeff() <= opts.dedup_tolerance ||
                   same_basin(v, other, *m, opts.barrier_tolerance);
          });
      if (same == result.minima.end()) {
        result.minima.push_back(std::move(*m));
      } else if (m->energy < same->energy) {
        *same = std::move(*m);
      }
    }
  }
  std::sort(result.minima.begin(), result.minima.end(),
            [](const LocalMinimum& a, const LocalMinimum& b) {
              if (a.position.phi_p != b.position.phi_p) return a.position.phi_p < b.position.phi_p;
              return a.position.phitilde_m < b.position.phitilde_m;
            });
  result.status = result.minima.empty() ? MinimaStatus::none : MinimaStatus::found;
  return result;
}

bool double_well_exists(double ej_ratio, double f_alpha, int n) {
  if (n % 2 == 0) return false;
  const double c = std::cos(kPi * f_alpha);
  if (!(c > 0.0)) return false;
  const double arg = ej_ratio / (4.0 * c);
  return arg > 0.0 && arg < 1.0;
}

AnalyticMinima analytic_minima(double ej_ratio, double f_alpha, int n) {
  if (!double_well_exists(ej_ratio, f_alpha, n)) {
    throw NoDoubleWell("r/(4 cos(pi f_alpha)) must lie in (0, 1) with odd n");
  }
  const double half = std::acos(ej_ratio / (4.0 * std::cos(kPi * f_alpha)));
  return {-2.0 * half, 2.0 * half, 0.0};
}

namespace {

struct WellPair {
  const LocalMinimum* down = nullptr;
  const LocalMinimum* up = nullptr;
};

// Lowest minimum on each side of phi_p = 0.
WellPair pick_wells(const std::vector<LocalMinimum>& minima, double tol) {
  WellPair w;
  for (const auto& m : minima) {
    if (m.position.phi_p < -tol) {
      if (!w.down || m.energy < w.down->energy) w.down = &m;
    } else if (m.position.phi_p > tol) {
      if (!w.up || m.energy < w.up->energy) w.up = &m;
    }
  }
  return w;
}

}  // namespace

DoubleWellCut double_well_cut(const Potential& v, int npoints,
                              const MinimizerOptions& opts) {
  if (npoints < 3) throw std::invalid_argument("double_well_cut: need >= 3 points");
  const MinimaResult found = find_minima(v, opts);
  const WellPair wells = pick_wells(found.minima, opts.dedup_tolerance);
  if (!wells.down || !wells.up) {
    throw NoDoubleWell("potential has fewer than two minima in the search window");
  }

  DoubleWellCut cut;
  cut.phi_p.resize(npoints);
  cut.energy.resize(npoints);
  const double lo = -2.0 * kPi;
  const double step = 4.0 * kPi / (npoints - 1);
  for (int i = 0; i < npoints; ++i) {
    cut.phi_p[i] = lo + i * step;
    cut.energy[i] = v.surface({cut.phi_p[i], 0.0});
  }
  cut.well_energy_down = wells.down->energy;
  cut.well_energy_up = wells.up->energy;
  cut.barrier_height =
      v.surface({0.0, 0.0}) - std::min(cut.well_energy_down, cut.well_energy_up);
  return cut;
}

TiltResult tilt(const Potential& unbiased, const Potential& biased,
                const MinimizerOptions& opts) {
  const MinimaResult found = find_minima(unbiased, opts);
  const WellPair wells = pick_wells(found.minima, opts.dedup_tolerance);
  if (!wells.down || !wells.up) {
    throw NoDoubleWell("unbiased potential has fewer than two minima");
  }
  auto down = descend(biased, wells.down->coords, opts);
  auto up = descend(biased, wells.up->coords, opts);
  if (!down || !up || down->position.phi_p >= 0.0 || up->position.phi_p <= 0.0 ||
      (down->coords - up->coords).cwiseAbs().maxCoeff() <= 1e-3) {
    throw WellsMerged("bias removes one of the two wells");
  }
  return {up->energy - down->energy, *down, *up};
}

double PotentialLandscape::grid_min() const {
  return energy.empty() ? std::numeric_limits<double>::quiet_NaN()
                        : *std::min_element(energy.begin(), energy.end());
}

PotentialLandscape grid_scan(const Potential& v, const GridSpec& grid,
                             const MinimizerOptions& opts) {
  if (grid.phi_p_points < 32 || grid.phitilde_m_points < 32) {
    throw std::invalid_argument("grid_scan: resolution must be >= 32 per axis");
  }
  if (!(grid.phi_p_max > grid.phi_p_min) || !(grid.phitilde_m_max > grid.phitilde_m_min)) {
    throw std::invalid_argument("grid_scan: empty axis range");
  }
  PotentialLandscape out;
  out.grid = grid;
  const int nx = grid.phi_p_points;
  const int ny = grid.phitilde_m_points;
  out.phi_p.resize(nx);
  out.phitilde_m.resize(ny);
  for (int i = 0; i < nx; ++i) {
    out.phi_p[i] = grid.phi_p_min + (grid.phi_p_max - grid.phi_p_min) * i / (nx - 1);
  }
  for (int j = 0; j < ny; ++j) {
    out.phitilde_m[j] =
        grid.phitilde_m_min + (grid.phitilde_m_max - grid.phitilde_m_min) * j / (ny - 1);
  }
  out.energy.resize(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      out.energy[static_cast<std::size_t>(i) * ny + j] =
          v.surface({out.phi_p[i], out.phitilde_m[j]});
    }
  }
  out.minima = find_minima(v, opts).minima;
  return out;
}

}  // namespace gfq
