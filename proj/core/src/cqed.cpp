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

#include "gfq/cqed.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "gfq/circuit_model.hpp"
#include "gfq/errors.hpp"

namespace gfq {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Eigen::MatrixXcd annihilation(int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Eigen::MatrixXcd sigma_minus() {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

Eigen::MatrixXcd sigma_z() {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
  s(0, 0) = -1.0;
  s(1, 1) = 1.0;
  return s;
}

Eigen::MatrixXcd sigma_x() { return sigma_minus() + sigma_minus().adjoint(); }

void check_cutoff(int n) {
  if (n < kMinFockCutoff) {
    throw std::invalid_argument("Fock cutoff must be at least " + std::to_string(kMinFockCutoff));
  }
}

void check_nonnegative(double delta, double g, double omega) {
  if (!(delta >= 0.0) || !(g >= 0.0) || !(omega >= 0.0)) {
    throw std::invalid_argument("Delta, g and omega must be non-negative");
  }
}

TensorBasis named_qubit(const std::string& name) {
  TensorBasis b = TensorBasis::qubit();
  b.factors[0] = name;
  return b;
}

}  // namespace

void ResonatorParams::validate() const {
  if (!(length > 0.0) || !(l_s > 0.0) || !(c > 0.0) || !(hbar > 0.0)) {
    throw ConfigError("resonator length, l_s, c and hbar must be positive");
  }
  if (d && !(*d >= 0.0 && *d < length)) throw ConfigError("capacitor width must satisfy 0 <= d < L");
}

double ResonatorParams::velocity() const { return 1.0 / std::sqrt(l_s * c); }

double mode_frequency(const ResonatorParams& p, int n) {
  if (n < 1) throw std::domain_error("mode index must be at least 1");
  p.validate();
  return n * kPi * p.velocity() / p.length;
}

double mode_shape(const ResonatorParams& p, int n, double x) {
  if (n < 1) throw std::domain_error("mode index must be at least 1");
  if (std::abs(x) > 0.5 * p.length) throw std::domain_error("position outside the resonator");
  const double arg = n * kPi * x / p.length;
  return n % 2 == 1 ? std::cos(arg) : std::sin(arg);
}

double current_mode_amplitude(const ResonatorParams& p, int n, double x) {
  const double zp = std::sqrt(p.hbar * mode_frequency(p, n) / (p.l_s * p.length));
  return zp * mode_shape(p, n, x);
}

double bias_amplitude(const ResonatorParams& p, int n) {
  if (p.d.has_value() == p.delta.has_value()) {
    throw ConfigError("exactly one of capacitor width d and delta must be set");
  }
  const double zp = std::sqrt(p.hbar * mode_frequency(p, n) / (p.l_s * p.length));
  if (p.d) return 2.0 * zp * std::sin(kPi * *p.d / p.length);
  return zp * *p.delta;
}

OperatorMatrix build_qubit_resonator_h(double delta, double g, double omega, int fock_cutoff) {
  check_cutoff(fock_cutoff);
  check_nonnegative(delta, g, omega);
  const Eigen::MatrixXcd a = annihilation(fock_cutoff);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd h = omega * kron(i2, a.adjoint() * a) +
                             0.5 * delta * kron(sigma_z(), Eigen::MatrixXcd::Identity(fock_cutoff, fock_cutoff)) +
                             kI * g * kron(sigma_x(), a - a.adjoint());
  return {h, TensorBasis::qubit() * TensorBasis::fock(fock_cutoff)};
}

OperatorMatrix build_qubit_resonator_h_wells(double delta, double g, double omega,
                                             int fock_cutoff) {
  check_cutoff(fock_cutoff);
  check_nonnegative(delta, g, omega);
  const Eigen::MatrixXcd a = annihilation(fock_cutoff);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  // In the (down, up) basis: sigma_z of the wells is diag(1, -1), hopping is sigma_x.
  Eigen::MatrixXcd z_wells = Eigen::MatrixXcd::Zero(2, 2);
  z_wells(0, 0) = 1.0;
  z_wells(1, 1) = -1.0;
  const Eigen::MatrixXcd h = omega * kron(i2, a.adjoint() * a) -
                             0.5 * delta * kron(sigma_x(), Eigen::MatrixXcd::Identity(fock_cutoff, fock_cutoff)) +
                             kI * g * kron(z_wells, a - a.adjoint());
  return {h, TensorBasis::wells() * TensorBasis::fock(fock_cutoff)};
}

OperatorMatrix build_rwa_h(double delta, double g, double omega, int fock_cutoff) {
  check_cutoff(fock_cutoff);
  check_nonnegative(delta, g, omega);
  const Eigen::MatrixXcd a = annihilation(fock_cutoff);
  const Eigen::MatrixXcd sm = sigma_minus();
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd h = omega * kron(i2, a.adjoint() * a) +
                             0.5 * delta * kron(sigma_z(), Eigen::MatrixXcd::Identity(fock_cutoff, fock_cutoff)) -
                             kI * g * (kron(sm, a.adjoint()) - kron(sm.adjoint(), a));
  return {h, TensorBasis::qubit() * TensorBasis::fock(fock_cutoff)};
}

OperatorMatrix excitation_number(const TensorBasis& basis) {
  const int n = basis.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const std::vector<int> lv = basis.levels(k);
    int count = 0;
    for (std::size_t f = 0; f < lv.size(); ++f) count += lv[f];
    m(k, k) = count;
  }
  return {m, basis};
}

double top_fock_population(const Eigen::VectorXcd& psi, const TensorBasis& basis) {
  const auto it = std::find(basis.factors.begin(), basis.factors.end(), "fock");
  if (it == basis.factors.end()) return 0.0;
  const std::size_t f = static_cast<std::size_t>(it - basis.factors.begin());
  double pop = 0.0;
  for (int k = 0; k < basis.size(); ++k) {
    if (basis.levels(k)[f] == basis.dims[f] - 1) pop += std::norm(psi(k));
  }
  return pop;
}

Propagator::Propagator(const OperatorMatrix& h) {
  if (!h.is_hermitian()) throw std::invalid_argument("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix());
  energies_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

Eigen::VectorXcd Propagator::apply(const Eigen::VectorXcd& psi, double t) const {
  Eigen::VectorXcd c = vectors_.adjoint() * psi;
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-kI * energies_(k) * t);
  return vectors_ * c;
}

Eigen::VectorXcd time_evolve(const OperatorMatrix& h, const Eigen::VectorXcd& psi, double t) {
  if (psi.size() != h.dim()) throw std::invalid_argument("state dimension mismatch");
  const Eigen::VectorXcd out = Propagator(h).apply(psi, t);
  if (std::abs(out.norm() - psi.norm()) > 1e-8) throw SolverError("norm drift in evolution");
  return out;
}

DrivenEvolution evolve_driven(const OperatorMatrix& h0, const OperatorMatrix& v, double amplitude,
                              double omega, const Eigen::VectorXcd& psi0, double t_final,
                              int steps_per_period, int record_every) {
  if (h0.dim() != v.dim() || psi0.size() != h0.dim()) {
    throw std::invalid_argument("operator or state dimension mismatch");
  }
  if (!(omega > 0.0) || steps_per_period < 200 || !(t_final >= 0.0) || record_every < 1) {
    throw std::invalid_argument("invalid driven-evolution settings");
  }
  const double max_dt = kTwoPi / omega / steps_per_period;
  const long steps = std::max(1L, static_cast<long>(std::ceil(t_final / max_dt)));
  const double dt = t_final / static_cast<double>(steps);

  DrivenEvolution out;
  out.times.push_back(0.0);
  out.states.push_back(psi0);
  Eigen::VectorXcd psi = psi0;
  const double norm0 = psi0.norm();
  for (long s = 0; s < steps; ++s) {
    const double t_mid = (static_cast<double>(s) + 0.5) * dt;
    const Eigen::MatrixXcd h = h0.matrix() + amplitude * std::sin(omega * t_mid) * v.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
    Eigen::VectorXcd c = es.eigenvectors().adjoint() * psi;
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-kI * es.eigenvalues()(k) * dt);
    psi = es.eigenvectors() * c;
    if ((s + 1) % record_every == 0 || s + 1 == steps) {
      out.times.push_back(static_cast<double>(s + 1) * dt);
      out.states.push_back(psi);
    }
  }
  out.norm_drift = std::abs(psi.norm() - norm0);
  if (out.norm_drift > 1e-8) throw SolverError("norm drift in driven evolution");
  return out;
}

double TwoQubitParams::exchange() const {
  return 0.5 * (1.0 / detuning_l() + 1.0 / detuning_r()) * g_l * g_r;
}

bool TwoQubitParams::dispersive_valid() const {
  return std::abs(detuning_l()) >= 10.0 * std::abs(g_l) &&
         std::abs(detuning_r()) >= 10.0 * std::abs(g_r);
}

OperatorMatrix dispersive_two_qubit_h(const TwoQubitParams& p, int fock_cutoff, bool force) {
  check_cutoff(fock_cutoff);
  if (!force && !p.dispersive_valid()) {
    throw DispersiveInvalid("require |Delta'_j| >= 10 |g_j|");
  }
  const Eigen::MatrixXcd a = annihilation(fock_cutoff);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd in = Eigen::MatrixXcd::Identity(fock_cutoff, fock_cutoff);
  const Eigen::MatrixXcd sm = sigma_minus();
  const Eigen::MatrixXcd exch = kron(sm, sm.adjoint()) + kron(sm.adjoint(), sm);
  const Eigen::MatrixXcd h = p.omega1 * kron(kron(i2, i2), a.adjoint() * a) +
                             0.5 * p.shifted_gap_l() * kron(kron(sigma_z(), i2), in) +
                             0.5 * p.shifted_gap_r() * kron(kron(i2, sigma_z()), in) +
                             p.exchange() * kron(exch, in);
  return {h, named_qubit("qubit_l") * named_qubit("qubit_r") * TensorBasis::fock(fock_cutoff)};
}

OperatorMatrix exact_two_qubit_h(const TwoQubitParams& p, int fock_cutoff, bool rwa) {
  check_cutoff(fock_cutoff);
  const Eigen::MatrixXcd a = annihilation(fock_cutoff);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd in = Eigen::MatrixXcd::Identity(fock_cutoff, fock_cutoff);
  const Eigen::MatrixXcd sm_l = kron(sigma_minus(), i2);
  const Eigen::MatrixXcd sm_r = kron(i2, sigma_minus());
  auto coupling = [&](const Eigen::MatrixXcd& sm, double g) -> Eigen::MatrixXcd {
    if (rwa) return -kI * g * (kron(sm, a.adjoint()) - kron(sm.adjoint(), a));
    return kI * g * kron(sm + sm.adjoint(), a - a.adjoint());
  };
  const Eigen::MatrixXcd h = p.omega1 * kron(kron(i2, i2), a.adjoint() * a) +
                             0.5 * p.delta_l * kron(kron(sigma_z(), i2), in) +
                             0.5 * p.delta_r * kron(kron(i2, sigma_z()), in) +
                             coupling(sm_l, p.g_l) + coupling(sm_r, p.g_r);
  return {h, named_qubit("qubit_l") * named_qubit("qubit_r") * TensorBasis::fock(fock_cutoff)};
}

double exchange_splitting_exact(const TwoQubitParams& p, int fock_cutoff) {
  const OperatorMatrix h = exact_two_qubit_h(p, fock_cutoff);
  const TensorBasis& b = h.basis();
  const int eg = b.index({1, 0, 0});
  const int ge = b.index({0, 1, 0});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix());
  // The two eigenstates with the largest weight on the single-excitation
  // qubit subspace form the exchange doublet.
  std::vector<std::pair<double, double>> qubit_like;  // (weight, energy)
  for (int k = 0; k < h.dim(); ++k) {
    const double w = std::norm(es.eigenvectors()(eg, k)) + std::norm(es.eigenvectors()(ge, k));
    qubit_like.emplace_back(w, es.eigenvalues()(k));
  }
  std::sort(qubit_like.rbegin(), qubit_like.rend());
  return std::abs(qubit_like[0].second - qubit_like[1].second);
}

}  // namespace gfq
