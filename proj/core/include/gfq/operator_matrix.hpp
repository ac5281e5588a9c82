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

#include <string>
#include <vector>

#include <Eigen/Core>

namespace gfq {

/// Labelled tensor-product basis, first factor most significant.
struct TensorBasis {
  std::vector<std::string> factors;  // e.g. {"qubit", "fock"}
  std::vector<int> dims;
  std::vector<std::vector<std::string>> level_names;  // per factor

  int size() const;
  std::vector<std::string> labels() const;  // "|e,3>" style
  /// Flat index of a multi-index.
  int index(const std::vector<int>& levels) const;
  std::vector<int> levels(int index) const;

  static TensorBasis qubit();                  // {down/up wells or g/e}
  static TensorBasis wells();
  static TensorBasis fock(int cutoff);
  TensorBasis operator*(const TensorBasis& rhs) const;  // tensor product
};

/// Dense complex operator on a labelled basis.
class OperatorMatrix {
 public:
  OperatorMatrix(Eigen::MatrixXcd m, TensorBasis basis);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  const TensorBasis& basis() const { return basis_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// ||H - H^dagger|| <= rel_tol * ||H|| (Frobenius norms).
  bool is_hermitian(double rel_tol = 1e-12) const;
  /// Ascending eigenvalues; requires a Hermitian operator.
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd m_;
  TensorBasis basis_;
};

}  // namespace gfq
