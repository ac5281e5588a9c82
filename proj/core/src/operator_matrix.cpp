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

#include "gfq/operator_matrix.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gfq {

int TensorBasis::size() const {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

std::vector<std::string> TensorBasis::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (int i = 0; i < size(); ++i) {
    const auto lv = levels(i);
    std::string s = "|";
    for (std::size_t f = 0; f < lv.size(); ++f) {
      if (f) s += ",";
      s += level_names[f][lv[f]];
    }
    out.push_back(s + ">");
  }
  return out;
}

int TensorBasis::index(const std::vector<int>& lv) const {
  if (lv.size() != dims.size()) throw std::invalid_argument("TensorBasis::index: rank mismatch");
  int idx = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (lv[f] < 0 || lv[f] >= dims[f]) throw std::out_of_range("TensorBasis::index");
    idx = idx * dims[f] + lv[f];
  }
  return idx;
}

std::vector<int> TensorBasis::levels(int index) const {
  std::vector<int> lv(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    lv[f] = index % dims[f];
    index /= dims[f];
  }
  return lv;
}

TensorBasis TensorBasis::qubit() { return {{"qubit"}, {2}, {{"g", "e"}}}; }

TensorBasis TensorBasis::wells() { return {{"well"}, {2}, {{"down", "up"}}}; }

TensorBasis TensorBasis::fock(int cutoff) {
  std::vector<std::string> names;
  for (int n = 0; n < cutoff; ++n) names.push_back(std::to_string(n));
  return {{"fock"}, {cutoff}, {names}};
}

TensorBasis TensorBasis::operator*(const TensorBasis& rhs) const {
  TensorBasis out = *this;
  out.factors.insert(out.factors.end(), rhs.factors.begin(), rhs.factors.end());
  out.dims.insert(out.dims.end(), rhs.dims.begin(), rhs.dims.end());
  out.level_names.insert(out.level_names.end(), rhs.level_names.begin(),
                         rhs.level_names.end());
  return out;
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd m, TensorBasis basis)
    : m_(std::move(m)), basis_(std::move(basis)) {
  if (m_.rows() != m_.cols() || m_.rows() != basis_.size()) {
    throw std::invalid_argument("OperatorMatrix: matrix does not match basis");
  }
}

bool OperatorMatrix::is_hermitian(double rel_tol) const {
  const double norm = m_.norm();
  return (m_ - m_.adjoint()).norm() <= rel_tol * (norm > 0.0 ? norm : 1.0);
}

Eigen::VectorXd OperatorMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace gfq
