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

struct CompensationResult {
  LocalHamiltonian hc;
  /// All singular values of the input state distinct and nonzero.
  bool regular = true;
  /// Norm of the part of the drift tangent that no local Hamiltonian can
  /// cancel (the singular-value motion itself plus, at non-regular states,
  /// directions lost to the pseudo-inverse cutoff).
  double residual = 0.0;
};

/// Minimal-norm (Hilbert-Schmidt) local Hamiltonian cancelling the
/// local-unitary component of the drift -i H0 |psi> at psi, computed by a
/// least-squares solve from local-Hamiltonian space to the tangent space
/// with singular-value cutoff `cutoff`.
CompensationResult compensating_general(const BipartiteState& psi,
                                        const CouplingHamiltonian& H0,
                                        double cutoff = 1e-10);

/// Compensating Hamiltonian for the two-qubit reduced motion at Schmidt
/// angle chi, from the coupling coefficients C' in the achiever frame.
/// E, F are rotated back through the frame.  Throws within 1e-9 of the
/// chi = k pi/4 poles.
LocalHamiltonian comp_qubits_closed_form(const Eigen::Matrix3d& Cprime, double chi,
                                         const LocalUnitary& frame);

/// Stabilizer for a diagonal C': holds the Schmidt angle fixed, valid up
/// to and including chi = pi/4.  Diverges as chi -> 0 unless
/// C'_xx = C'_yy; throws at that pole.
LocalHamiltonian stabilizer_qubits_diagonal(const Eigen::Matrix3d& Cprime,
                                            double chi);

/// Stabilizer for the frame choice C'_xx = C'_yy (always reachable), which
/// stays bounded at product states; the sec(2 chi) pole at chi = pi/4 is
/// excluded instead.
LocalHamiltonian stabilizer_qubits_product_safe(const Eigen::Matrix3d& Cprime,
                                                double chi);

/// Bosonic compensating Hamiltonian E (x) 1 + 1 (x) E for a symmetric C'.
/// Pole checks are coefficient-aware: terms with vanishing coefficients do
/// not restrict chi.
LocalHamiltonian comp_bosonic(const Eigen::Matrix3d& Cprime, double chi,
                              const LocalUnitary& frame);

/// Fermionic d = 4 compensator in the level-mixed basis, from the
/// eigenvalues of A (non-increasing): E = -E_tilde - (l1+l3)(l2+l4)/8.
/// Blows up toward chi = k pi/2; throws within 1e-9 of those poles.
Eigen::Matrix4cd comp_fermionic(const Eigen::Vector4d& eigs, double chi);

/// chi-independent fermionic stabilizer in the basis diagonalizing A:
/// -diag(l1 l2 / 2, l1 l2 / 2, l3 l4 / 2, l3 l4 / 2).
Eigen::Matrix4cd fermionic_diagonal_stabilizer(const Eigen::Vector4d& eigs);

/// Detour control (sigma_z / (2 sqrt2 eps)) P'_y for the qutrit protocol;
/// eps must be positive.
Eigen::Matrix3cd comp_qutrit_detour(double eps, double sigma_z);

/// Constant stabilizer diag(1/2, 0, 1/2) on both factors, defined in the
/// basis where A and B are diag(1, 0, -1); holds the maximally entangled
/// state fixed there.
LocalHamiltonian qutrit_stabilizer();

struct StabilizationReport {
  bool pass = false;
  double max_drift = 0.0;
  double horizon = 0.0;
  double tolerance = 0.0;
};

/// Integrates psi under H0 + E (x) 1 + 1 (x) F for time T and reports the
/// maximum deviation of the Weyl-projected singular values from their
/// initial values.
StabilizationReport check_stabilized(const BipartiteState& psi,
                                     const CouplingHamiltonian& H0,
                                     const LocalHamiltonian& Hc, double T,
                                     double tol, double sample_dt = 0.0);

}  // namespace sctl
