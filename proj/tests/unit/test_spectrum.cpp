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

#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "gfq/errors.hpp"
#include "gfq/spectrum.hpp"

using namespace gfq;

namespace {

const FluxBias kFlux{0.94, 0.94, 0.2};
const WindingNumbers kWind{-1, -1, 1};

ReducedPotential reference(double f_alpha = 0.2) { return {2.0, {0.94, 0.94, f_alpha}, kWind}; }

double ghz(double delta) { return delta * 200.0; }  // E_J/h = 200 GHz

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("alpha parameter") {
  CHECK(alpha_param(2.0, 0.2) == doctest::Approx(1.80911).epsilon(1e-5));
  CHECK(alpha_param(4.0, 0.0) == 0.0);
  CHECK(alpha_param(2.0, 0.25) == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK_THROWS_AS(alpha_param(4.0, 0.1), NoDoubleWell);
  CHECK_THROWS_AS(alpha_param(2.0, 0.5), NoDoubleWell);
  CHECK_THROWS_AS(alpha_param(-1.0, 0.2), NoDoubleWell);
}

TEST_CASE("mass model") {
  const MassModel m = MassModel::from_charging_energy(1.0 / 40.0, 2.0);
  CHECK(m.kinetic_phi_p == doctest::Approx(1.0 / 30.0));
  CHECK(m.kinetic_phitilde_m == doctest::Approx(1.0 / 40.0));
  CHECK_THROWS(MassModel::from_charging_energy(0.0, 2.0));
}

TEST_CASE("1D solver: harmonic calibration") {
  const double c = 1.0 / 30.0;
  const double k = 0.5;
  const double omega = std::sqrt(2.0 * c * k);
  const GapResult r = tunneling_gap_1d([k](double x) { return 0.5 * k * x * x; }, c);
  CHECK(r.levels[0] == doctest::Approx(0.5 * omega).epsilon(1e-4));
  CHECK(r.levels[1] - r.levels[0] == doctest::Approx(omega).epsilon(1e-4));
  CHECK(r.levels[3] - r.levels[2] == doctest::Approx(omega).epsilon(1e-4));
  // Equally spaced ladder: the lowest "doublet" is not isolated.
  CHECK_FALSE(r.doublet_isolated);
  CHECK_FALSE(r.warning.empty());
}

TEST_CASE("1D solver: reference double well") {
  const GapResult r = tunneling_gap_1d(reference(), 40.0);
  CHECK(r.delta > 0.0);
  CHECK(r.t_q == doctest::Approx(r.delta / 2));
  CHECK(r.wall_amplitude <= 1e-6);
  CHECK(r.doublet_isolated);
  CHECK(r.warning.empty());
  // Value produced by the pinned mass model; see README for the band discussion.
  CHECK(ghz(r.delta) == doctest::Approx(0.0422).epsilon(0.01));

  Grid1D fine;
  fine.points = 4001;
  const GapResult f = tunneling_gap_1d(reference(), 40.0, fine);
  CHECK(std::abs(f.delta - r.delta) / r.delta <= 5e-3);
}

TEST_CASE("1D solver: gap closes monotonically as the barrier grows") {
  double prev = 1e300;
  for (int i = 0; i < 10; ++i) {
    const double fa = 0.3 - 0.025 * i;
    const double d = tunneling_gap_1d(reference(fa), 40.0).delta;
    CHECK(d > 0.0);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("1D solver: input validation") {
  CHECK_THROWS_AS(tunneling_gap_1d(reference().with_bias(0.01), 40.0), std::invalid_argument);
  Grid1D coarse;
  coarse.points = 100;
  CHECK_THROWS_AS(tunneling_gap_1d([](double) { return 0.0; }, 1.0, coarse), std::invalid_argument);
}

TEST_CASE("2D solver: harmonic calibration") {
  const MassModel m{1.0 / 30.0, 1.0 / 40.0};
  const double k = 0.5;
  const double wx = std::sqrt(2.0 * m.kinetic_phi_p * k);
  const double wy = std::sqrt(2.0 * m.kinetic_phitilde_m * k);
  const Splitting2D s = splitting_2d(
      [k](double x, double y) { return 0.5 * k * (x * x + y * y); }, m);
  REQUIRE(s.levels.size() == 4);
  CHECK(s.levels[0] == doctest::Approx(0.5 * (wx + wy)).epsilon(1e-3));
  // Ladder: wy < wx < 2 wy, so the next levels are +wy, +wx, +2wy.
  CHECK(s.levels[1] - s.levels[0] == doctest::Approx(wy).epsilon(1e-3));
  CHECK(s.levels[2] - s.levels[0] == doctest::Approx(wx).epsilon(1e-3));
  CHECK(s.levels[3] - s.levels[0] == doctest::Approx(2 * wy).epsilon(1e-3));
}

TEST_CASE("2D solver agrees with the 1D cut within a factor of two") {
  const MassModel m = MassModel::from_charging_energy(1.0 / 40.0, 2.0);
  const ReducedPotential v = reference();
  const Splitting2D s = splitting_2d([&v](double x, double y) { return v(x, y); }, m);
  const double d1 = tunneling_gap_1d(v, 40.0).delta;
  CHECK(s.delta > 0.0);
  CHECK(std::max(s.delta, d1) / std::min(s.delta, d1) <= 2.0);

  const ReducedPotential deep = reference(0.05);
  const Splitting2D sd = splitting_2d([&deep](double x, double y) { return deep(x, y); }, m);
  CHECK(sd.delta < s.delta);
  CHECK(tunneling_gap_1d(deep, 40.0).delta < d1);
}

TEST_CASE("2D solver: input validation") {
  Grid2D g;
  g.nx = 20;
  CHECK_THROWS_AS(splitting_2d([](double, double) { return 0.0; }, {1, 1}, g), std::invalid_argument);
}

TEST_CASE("qubit spectrum") {
  const QubitSpectrum s = qubit_spectrum(reference(), 40.0);
  CHECK(s.t_q >= 0.0);
  CHECK(s.delta == doctest::Approx(2 * s.t_q));
  CHECK(std::abs(s.eps) <= 1e-10);
  CHECK(s.alpha == doctest::Approx(alpha_param(2.0, 0.2)));
  CHECK(s.e_down == doctest::Approx(-2.854102).epsilon(1e-6));

  const QubitSpectrum b = qubit_spectrum(reference().with_bias(1e-3), 40.0);
  CHECK(b.eps > 0.0);
  CHECK(b.delta == doctest::Approx(s.delta));
}

TEST_CASE("tight-binding Hamiltonian") {
  QubitSpectrum s;
  s.e_down = s.e_up = -2.5;
  s.t_q = 1e-3;
  s.delta = 2e-3;
  s.alpha = 1.8;

  const OperatorMatrix h = tight_binding_h(s, 0.0);
  CHECK(h.is_hermitian());
  const Eigen::VectorXd ev = h.eigenvalues();
  CHECK(ev(0) == doctest::Approx(-2.5 - 1e-3).epsilon(1e-14));
  CHECK(ev(1) == doctest::Approx(-2.5 + 1e-3).epsilon(1e-14));
  CHECK(ev(1) - ev(0) == doctest::Approx(s.delta).epsilon(1e-12));

  const OperatorMatrix q = to_qubit_basis(h);
  CHECK(std::abs(q.matrix()(0, 1)) <= 1e-15);
  CHECK(q.matrix()(0, 0).real() == doctest::Approx(-2.5 - s.delta / 2));
  CHECK(q.matrix()(1, 1).real() == doctest::Approx(-2.5 + s.delta / 2));
  CHECK(q.basis().labels()[0] == "|0>");

  // A bias beta0 = -beta_b sin(wt) becomes g sin(wt) sigma_x with g = beta_b alpha.
  const double beta_b = 0.01;
  const OperatorMatrix drive = to_qubit_basis(tight_binding_h(s, -beta_b));
  const Eigen::MatrixXcd diff = drive.matrix() - q.matrix();
  CHECK(std::abs(diff(0, 0)) <= 1e-15);
  CHECK(std::abs(diff(1, 1)) <= 1e-15);
  CHECK(diff(0, 1).real() == doctest::Approx(beta_b * s.alpha).epsilon(1e-12));
  CHECK(diff(1, 0).real() == doctest::Approx(beta_b * s.alpha).epsilon(1e-12));

  // Strong bias, no tunnelling: eigenstates are the bare wells.
  s.t_q = 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(tight_binding_h(s, 0.5).matrix());
  CHECK(std::abs(es.eigenvectors()(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(es.eigenvectors()(1, 1)) == doctest::Approx(1.0));
}

}  // TEST_SUITE
