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

#include "holowdm/linalg.hpp"

#include "holowdm/errors.hpp"


namespace holowdm {
namespace {

void require_hermitian(const Eigen::MatrixXcd& A) {
    if (A.rows() != A.cols()) throw DomainError("hermitian_eigs: matrix is not square");
    if (!A.allFinite()) throw DomainError("hermitian_eigs: non-finite entries");
    const double scale = A.norm();
    if ((A - A.adjoint()).norm() > 1e-10 * scale)
        throw DomainError("hermitian_eigs: matrix is not Hermitian");
}

} // namespace

HermitianEigen hermitian_eigs(const Eigen::MatrixXcd& A) {
    require_hermitian(A);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericError("hermitian_eigs: solver did not converge");

    // Eigen returns ascending order; reverse.
    const Eigen::Index n = A.rows();
    HermitianEigen out{Eigen::VectorXd(n), Eigen::MatrixXcd(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values[i] = solver.eigenvalues()[n - 1 - i];
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& A) {
    require_hermitian(A);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(A, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("hermitian_eigenvalues: solver did not converge");
    return solver.eigenvalues().reverse();
}

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& A) {
    const auto eig = hermitian_eigs(A);
    const Eigen::VectorXd root = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
}

} // namespace holowdm
