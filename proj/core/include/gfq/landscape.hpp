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

// Minima, grids and cuts of the qubit potentials in the (phi_p, phitilde_m)
// plane.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "gfq/circuit_model.hpp"

namespace gfq {

struct PlanePoint {
  double phi_p = 0.0;
  double phitilde_m = 0.0;
};

/// Smooth potential with analytic derivatives. Coordinates are either the
/// plane itself (dim 2) or the plane plus hidden coordinates relaxed by
/// minimisation.
class Potential {
 public:
  virtual ~Potential() = default;

  virtual int dim() const = 0;
  virtual double value(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd gradient(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const = 0;

  /// Starting point for a descent seeded at a plane point.
  virtual Eigen::VectorXd lift(const PlanePoint& p) const = 0;
  virtual PlanePoint project(const Eigen::VectorXd& x) const = 0;

  /// Potential as a function of the plane alone; hidden coordinates are
  /// minimised out.
  virtual double surface(const PlanePoint& p) const = 0;
};

/// V(phi_p, phitilde_m) on the constraint surface, in units of E_J.
class ReducedPotential final : public Potential {
 public:
  ReducedPotential(double ej_ratio, FluxBias flux, WindingNumbers winding,
                   double beta0 = 0.0)
      : ej_ratio_(ej_ratio), flux_(flux), winding_(winding), beta0_(beta0) {}

  int dim() const override { return 2; }
  double value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd lift(const PlanePoint& p) const override;
  PlanePoint project(const Eigen::VectorXd& x) const override;
  double surface(const PlanePoint& p) const override;

  double operator()(double phi_p, double phitilde_m) const;

  double ej_ratio() const { return ej_ratio_; }
  const FluxBias& flux() const { return flux_; }
  const WindingNumbers& winding() const { return winding_; }
  double beta0() const { return beta0_; }
  ReducedPotential with_bias(double beta0) const {
    return {ej_ratio_, flux_, winding_, beta0};
  }

 private:
  double ej_ratio_;
  FluxBias flux_;
  WindingNumbers winding_;
  double beta0_;
};

/// Soft-constraint potential of the four main junctions with both bias
/// couplings, in coordinates (phi_p, phi_m, phitilde_p, phitilde_m).
class FullPotential final : public Potential {
 public:
  explicit FullPotential(CircuitParams params, DriveParams drive = {});

  int dim() const override { return 4; }
  double value(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override;
  Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override;
  /// Hidden coordinates start on the hard constraints: phi_m = pi(n + f_alpha),
  /// phitilde_p = (pi(m + f2 - f1) - phi_p)/2.
  Eigen::VectorXd lift(const PlanePoint& p) const override;
  PlanePoint project(const Eigen::VectorXd& x) const override;
  double surface(const PlanePoint& p) const override;

  /// Hidden coordinates relaxed at fixed plane point.
  Eigen::VectorXd relax(const PlanePoint& p) const;

  const CircuitParams& params() const { return params_; }
  const DriveParams& drive() const { return drive_; }
  FullPotential with_drive(const DriveParams& d) const { return FullPotential(params_, d); }

  static PhaseState phases(const Eigen::VectorXd& x);

 private:
  CircuitParams params_;
  DriveParams drive_;
  Eigen::Vector4d weights_;
};

struct SearchWindow {
  double phi_p_min = -2.0 * kPi;
  double phi_p_max = 2.0 * kPi;
  double phitilde_m_min = -kPi;
  double phitilde_m_max = kPi;

  /// Strict interior test; points within `margin` of an edge are outside.
  bool contains(const PlanePoint& p, double margin = 1e-6) const;
};

struct MinimizerOptions {
  int seeds_phi_p = 17;
  int seeds_phitilde_m = 17;
  double gradient_tolerance = 1e-10;
  double dedup_tolerance = 1e-6;
  double barrier_tolerance = 1e-9;  // relative; see find_minima
  int max_iterations = 200;
  SearchWindow window;
};

enum class WellLabel { down, up };

struct LocalMinimum {
  Eigen::VectorXd coords;  // full coordinate vector of the potential
  PlanePoint position;
  double energy = 0.0;
  double gradient_norm = 0.0;
  WellLabel label = WellLabel::down;  // down <=> phi_p < 0
};

enum class MinimaStatus { found, none };

struct MinimaResult {
  MinimaStatus status = MinimaStatus::none;
  std::vector<LocalMinimum> minima;  // sorted by phi_p ascending
};

/// Damped Newton descent from `start`. Returns nothing when the iteration
/// does not reach the gradient tolerance or ends on a non-minimum.
std::optional<LocalMinimum> descend(const Potential& v, const Eigen::VectorXd& start,
                                    const MinimizerOptions& opts = {});

/// Multi-start search on a regular seed grid covering the window. Converged
/// points joined by a barrier-free straight path count as one minimum.
MinimaResult find_minima(const Potential& v, const MinimizerOptions& opts = {});

/// cos(phi_p/2) = r / (4 cos(pi f_alpha)) (odd n, m + f2 - f1 = 0).
struct AnalyticMinima {
  double phi_p_down = 0.0;
  double phi_p_up = 0.0;
  double phitilde_m = 0.0;
};

/// Strict existence predicate for odd n: 0 < r / (4 cos(pi f_alpha)) < 1.
bool double_well_exists(double ej_ratio, double f_alpha, int n = 1);

/// Throws NoDoubleWell outside the existence region (including the boundary).
AnalyticMinima analytic_minima(double ej_ratio, double f_alpha, int n = 1);

struct DoubleWellCut {
  std::vector<double> phi_p;
  std::vector<double> energy;
  double barrier_height = 0.0;  // V(phi_p = 0) - min well energy
  double well_energy_down = 0.0;
  double well_energy_up = 0.0;
};

/// Samples the surface along phitilde_m = 0 over phi_p in [-2pi, 2pi].
/// Throws NoDoubleWell when the potential has fewer than two minima.
DoubleWellCut double_well_cut(const Potential& v, int npoints = 801,
                              const MinimizerOptions& opts = {});

struct TiltResult {
  double epsilon = 0.0;  // E(up) - E(down)
  LocalMinimum down;
  LocalMinimum up;
};

/// Follows both unbiased wells into the biased potential. Throws NoDoubleWell
/// if the unbiased potential has no double well and WellsMerged when the two
/// wells no longer survive as distinct minima.
TiltResult tilt(const Potential& unbiased, const Potential& biased,
                const MinimizerOptions& opts = {});

struct GridSpec {
  double phi_p_min = -2.0 * kPi;
  double phi_p_max = 2.0 * kPi;
  double phitilde_m_min = -kPi;
  double phitilde_m_max = kPi;
  int phi_p_points = 201;
  int phitilde_m_points = 201;
};

struct PotentialLandscape {
  GridSpec grid;
  std::vector<double> phi_p;
  std::vector<double> phitilde_m;
  std::vector<double> energy;  // energy[i * phitilde_m.size() + j]
  std::vector<LocalMinimum> minima;

  double at(std::size_t i, std::size_t j) const {
    return energy[i * phitilde_m.size() + j];
  }
  double grid_min() const;
};

/// Throws std::invalid_argument for fewer than 32 points per axis.
PotentialLandscape grid_scan(const Potential& v, const GridSpec& grid = {},
                             const MinimizerOptions& opts = {});

}  // namespace gfq
