// Copyright 2026 The schmidt-control Authors
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

#include "sctl/types.hpp"

namespace sctl {

// Pauli matrices, tr(P_i P_j) = 2 delta_ij.
const Eigen::Matrix2cd& pauli_x();
const Eigen::Matrix2cd& pauli_y();
const Eigen::Matrix2cd& pauli_z();
const Eigen::Matrix2cd& pauli(int i);  // 0 -> x, 1 -> y, 2 -> z

/// Traceless Hermitian orthonormal basis of su(d) with the Pauli
/// normalization tr(A_i A_j) = 2 delta_ij.  For d = 2 these are the Paulis;
/// for d = 3, 4 a Gell-Mann-type construction (symmetric, antisymmetric and
/// diagonal generators) is used.  Size d^2 - 1.
const std::vector<Eigen::MatrixXcd>& traceless_basis(Eigen::Index d);

struct SchmidtDecomposition {
  LocalUnitary frame;      // V, W with psi = (V (x) W) |sigma>
  Eigen::VectorXd sigma;   // non-negative, non-increasing, length dmin
};

/// Schmidt decomposition of a unit-norm pure state.  Phases are absorbed
/// into the columns of V so that all sigma_i >= 0; degenerate singular
/// values keep the decomposition order of the underlying SVD.
SchmidtDecomposition schmidt_decompose(const BipartiteState& state);

/// Coupling coefficients of H0 in the traceless_basis() product basis and
/// the orthogonal projection onto the purely local part.  Requires
/// d1, d2 in {2, 3, 4}.
CoefficientMatrix coefficient_matrix(const CouplingHamiltonian& H0);

/// Reassemble sum_ij C_ij A_i (x) B_j + E_loc (x) 1 + 1 (x) F_loc + c 1.
Eigen::MatrixXcd assemble_coefficients(const CoefficientMatrix& cm,
                                       Eigen::Index d1, Eigen::Index d2);

struct DiagonalTerm {
  Eigen::MatrixXcd A;  // orthonormal, tr(A_i A_j) = 2 delta_ij
  Eigen::MatrixXcd B;
  double omega = 0.0;
};

/// Diagonal form H0 = sum_i omega_i A_i (x) B_i + local parts, with
/// omega_i >= 0 non-increasing, obtained from the real SVD of the
/// coefficient matrix.  The number of terms equals rank(C).
std::vector<DiagonalTerm> diagonalize_coupling(const CouplingHamiltonian& H0);

struct SymmetricDiagonalTerm {
  Eigen::MatrixXcd A;
  double omega = 0.0;  // real eigenvalue of the symmetric coefficient matrix
};

/// Diagonal form H0 = sum_i omega_i A_i (x) A_i + local parts for a
/// swap-symmetric coupling on d (x) d.  Throws if the symmetry residual of
/// the coefficient matrix exceeds 1e-10.
std::vector<SymmetricDiagonalTerm> symmetric_diagonalize(
    const CouplingHamiltonian& H0);

/// SO(3) rotation of the adjoint action of a 2x2 unitary on the Pauli
/// vector: (R)_ij = tr(P_i V P_j V^-1) / 2, so Ad_V(a . P) = (R a) . P.
/// Global phases drop out.
Eigen::Matrix3d rotation_from_su2(const Eigen::Matrix2cd& V);

/// Inverse of rotation_from_su2 up to global phase: an SU(2) element with
/// the given adjoint rotation.
Eigen::Matrix2cd su2_from_rotation(const Eigen::Matrix3d& R);

/// Partial traces over the second / first factor of a dense d1*d2 operator.
Eigen::MatrixXcd partial_trace_2(const Eigen::MatrixXcd& M, Eigen::Index d1,
                                 Eigen::Index d2);
Eigen::MatrixXcd partial_trace_1(const Eigen::MatrixXcd& M, Eigen::Index d1,
                                 Eigen::Index d2);

}  // namespace sctl
