// SPDX-License-Identifier: Apache-2.0
//
// holowdm: wavenumber-division multiplexed holographic MIMO channel toolkit
// Copyright (C) 2026 The holowdm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>

namespace holowdm {

struct HermitianEigen {
    Eigen::VectorXd values;    ///< descending
    Eigen::MatrixXcd vectors;  ///< column i pairs with values[i]
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Throws DomainError if A deviates from Hermitian by more than 1e-10 ||A||_F.
HermitianEigen hermitian_eigs(const Eigen::MatrixXcd& A);

/// Eigenvalues only, descending.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& A);

/// Hermitian PSD square root V sqrt(max(L, 0)) V^H. Eigenvalues that are
/// negative from roundoff are clamped to zero.
Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& A);

} // namespace holowdm
