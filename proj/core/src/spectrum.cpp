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

#include "gfq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <arpack/arpack.h>
#include <lapacke.h>

#include "gfq/errors.hpp"

namespace gfq {

double alpha_param(double ej_ratio, double f_alpha) {
  const double c = std::cos(kPi * f_alpha);
  if (!(c > 0.0)) throw NoDoubleWell("cos(pi f_alpha) must be positive");
  const double arg = ej_ratio / (4.0 * c);
  if (!(arg > 0.0 && arg <= 1.0)) {
    throw NoDoubleWell("r/(4 cos(pi f_alpha)) must lie in (0, 1]");
  }
  return 2.0 * std::acos(arg);
}

MassModel MassModel::from_charging_energy(double e_c, double ej_ratio) {
  if (!(e_c > 0.0) || !(ej_ratio > 0.0)) {
    throw std::invalid_argument("charging energy and junction ratio must be positive");
  }
  return {2.0 * e_c / (1.0 + ej_ratio / 4.0), 2.0 * e_c / ej_ratio};
}

GapResult tunneling_gap_1d(const std::function<double(double)>& v, double kinetic,
                           const Grid1D& grid) {
  if (grid.points < 101) throw std::invalid_argument("1D grid needs at least 101 points");
  if (!(grid.hi > grid.lo)) throw std::invalid_argument("1D grid range is empty");
  if (!(kinetic > 0.0)) throw std::invalid_argument("kinetic prefactor must be positive");

  const int n = grid.points - 2;  // interior nodes
  const double h = (grid.hi - grid.lo) / (grid.points - 1);
  const double off = -kinetic / (h * h);
  std::vector<double> d(n), e(n - 1, off);
  for (int i = 0; i < n; ++i) d[i] = 2.0 * kinetic / (h * h) + v(grid.lo + (i + 1) * h);

  constexpr int kLevels = 4;
  std::vector<double> w(n), z(static_cast<std::size_t>(n) * kLevels);
  std::vector<lapack_int> support(2 * kLevels);
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, kLevels,
                     0.0, &found, w.data(), z.data(), n, support.data());
  if (info != 0 || found != kLevels) {
    throw SolverError("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
  }

  GapResult r;
  r.levels.assign(w.begin(), w.begin() + kLevels);
  r.delta = r.levels[1] - r.levels[0];
  r.t_q = 0.5 * r.delta;
  for (int k = 0; k < 2; ++k) {
    const double* col = z.data() + static_cast<std::size_t>(k) * n;
    double peak = 0.0;
    for (int i = 0; i < n; ++i) peak = std::max(peak, std::abs(col[i]));
    const double edge = std::max(std::abs(col[0]), std::abs(col[n - 1]));
    r.wall_amplitude = std::max(r.wall_amplitude, edge / peak);
  }
  r.doublet_isolated = r.levels[2] - r.levels[1] >= 3.0 * r.delta;
  if (!r.doublet_isolated) r.warning = "lowest doublet not isolated: E2 - E1 < 3 Delta";
  if (r.wall_amplitude > 1e-6) {
    if (!r.warning.empty()) r.warning += "; ";
    r.warning += "wavefunction reaches the hard walls";
  }
  return r;
}

GapResult tunneling_gap_1d(const ReducedPotential& v, double ej_over_ec, const Grid1D& grid) {
  if (v.beta0() != 0.0) throw std::invalid_argument("gap requires the unbiased cut");
  if (!(ej_over_ec > 0.0)) throw std::invalid_argument("E_J/E_C must be positive");
  const MassModel m = MassModel::from_charging_energy(1.0 / ej_over_ec, v.ej_ratio());
  return tunneling_gap_1d([&v](double x) { return v(x, 0.0); }, m.kinetic_phi_p, grid);
}

namespace {

// Portable deterministic start vector: raw mt19937_64 output mapped to [-1, 1).
std::vector<double> start_vector(Eigen::Index n) {
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
  return x;
}

}  // namespace

Splitting2D splitting_2d(const std::function<double(double, double)>& v,
                         const MassModel& masses, const Grid2D& grid, int nev) {
  if (grid.nx < 32 || grid.ny < 32) throw std::invalid_argument("2D grid needs at least 32 points per axis");
  if (nev < 2) throw std::invalid_argument("need at least two eigenpairs");
  if (!(masses.kinetic_phi_p > 0.0) || !(masses.kinetic_phitilde_m > 0.0)) {
    throw std::invalid_argument("kinetic prefactors must be positive");
  }

  const int nx = grid.nx;
  const int ny = grid.ny;
  const double hx = (grid.x_hi - grid.x_lo) / (nx + 1);
  const double hy = (grid.y_hi - grid.y_lo) / (ny + 1);
  const double cx = masses.kinetic_phi_p / (hx * hx);
  const double cy = masses.kinetic_phitilde_m / (hy * hy);
  const Eigen::Index size = static_cast<Eigen::Index>(nx) * ny;
  auto idx = [ny](int i, int j) { return static_cast<Eigen::Index>(i) * ny + j; };

  // H >= min V, so any shift below it leaves H - sigma positive definite.
  std::vector<double> pot(static_cast<std::size_t>(size));
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      pot[idx(i, j)] = v(grid.x_lo + (i + 1) * hx, grid.y_lo + (j + 1) * hy);
    }
  }
  const double vmin = *std::min_element(pot.begin(), pot.end());
  const double sigma = vmin - 1e-3 * std::max(1.0, std::abs(vmin));

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(static_cast<std::size_t>(size) * 5);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      trips.emplace_back(idx(i, j), idx(i, j), 2.0 * cx + 2.0 * cy + pot[idx(i, j)] - sigma);
      if (i > 0) trips.emplace_back(idx(i, j), idx(i - 1, j), -cx);
      if (i + 1 < nx) trips.emplace_back(idx(i, j), idx(i + 1, j), -cx);
      if (j > 0) trips.emplace_back(idx(i, j), idx(i, j - 1), -cy);
      if (j + 1 < ny) trips.emplace_back(idx(i, j), idx(i, j + 1), -cy);
    }
  }
  Eigen::SparseMatrix<double> shifted(size, size);
  shifted.setFromTriplets(trips.begin(), trips.end());
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> chol(shifted);
  if (chol.info() != Eigen::Success) throw SolverError("shifted Hamiltonian factorisation failed");

  // Lanczos on (H - sigma)^-1 (ARPACK shift-invert mode): the largest
  // eigenvalues of the inverse are the lowest levels of H.
  const a_int n = static_cast<a_int>(size);
  const a_int ncv = std::min<a_int>(n, std::max(4 * nev, 20));
  const a_int lworkl = ncv * (ncv + 8);
  std::vector<double> resid = start_vector(size);
  std::vector<double> basis(static_cast<std::size_t>(n) * ncv);
  std::vector<double> workd(3 * static_cast<std::size_t>(n));
  std::vector<double> workl(static_cast<std::size_t>(lworkl));
  a_int iparam[11] = {1, 0, 3000, 1, 0, 0, 3, 0, 0, 0, 0};
  a_int ipntr[11] = {};
  a_int ido = 0;
  a_int info = 1;  // use the supplied start vector
  constexpr double kTol = 1e-13;
  for (;;) {
    dsaupd_c(&ido, "I", n, "LM", nev, kTol, resid.data(), ncv, basis.data(), n, iparam, ipntr,
             workd.data(), workl.data(), lworkl, &info);
    if (ido != -1 && ido != 1) break;
    Eigen::Map<const Eigen::VectorXd> in(workd.data() + ipntr[0] - 1, size);
    Eigen::Map<Eigen::VectorXd> out(workd.data() + ipntr[1] - 1, size);
    out = chol.solve(in);
  }
  if (info != 0) throw SolverError("Lanczos iteration did not converge (info " + std::to_string(info) + ")");

  std::vector<a_int> select(static_cast<std::size_t>(ncv));
  std::vector<double> levels(static_cast<std::size_t>(nev));
  dseupd_c(0, "A", select.data(), levels.data(), nullptr, n, sigma, "I", n, "LM", nev, kTol,
           resid.data(), ncv, basis.data(), n, iparam, ipntr, workd.data(), workl.data(), lworkl,
           &info);
  if (info != 0) throw SolverError("Lanczos eigenvalue extraction failed (info " + std::to_string(info) + ")");

  Splitting2D out;
  out.levels = levels;
  std::sort(out.levels.begin(), out.levels.end());
  out.delta = out.levels[1] - out.levels[0];
  out.iterations = static_cast<int>(iparam[2]);
  return out;
}

QubitSpectrum qubit_spectrum(const ReducedPotential& v, double ej_over_ec, const Grid1D& grid) {
  const MinimaResult mins = find_minima(v);
  if (mins.minima.size() < 2) throw NoDoubleWell("potential has fewer than two minima");
  QubitSpectrum s;
  s.e_down = mins.minima.front().energy;
  s.e_up = mins.minima.back().energy;
  s.eps = s.e_up - s.e_down;
  s.alpha = alpha_param(v.ej_ratio(), v.flux().f_alpha);
  const GapResult gap = tunneling_gap_1d(v.with_bias(0.0), ej_over_ec, grid);
  s.t_q = gap.t_q;
  s.delta = gap.delta;
  return s;
}

OperatorMatrix tight_binding_h(const QubitSpectrum& s, double beta0) {
  const double b = beta0 * s.alpha;
  Eigen::MatrixXcd m(2, 2);
  m << s.e_down - b, -s.t_q,
       -s.t_q, s.e_up + b;
  return {m, TensorBasis::wells()};
}

OperatorMatrix to_qubit_basis(const OperatorMatrix& well_operator) {
  if (well_operator.dim() != 2) throw std::invalid_argument("expected a two-level operator");
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd u(2, 2);
  u << r, r,
       r, -r;
  TensorBasis basis{{"qubit"}, {2}, {{"0", "1"}}};
  return {u.adjoint() * well_operator.matrix() * u, basis};
}

}  // namespace gfq
