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

#include <cstdint>
#include <string>

namespace sctl {

enum class SpeedLimitCase {
  two_qubit,
  bosonic,
  fermionic_lower,
  fermionic_upper,
  qutrit_octahedron,
};

std::string to_string(SpeedLimitCase c);

struct SpeedLimitResult {
  double omega_star = 0.0;
  SpeedLimitCase tag = SpeedLimitCase::two_qubit;
  /// Local unitaries attaining the limit (six octahedron vertices for the
  /// qutrit case, one otherwise; empty when no achiever is guaranteed).
  std::vector<LocalUnitary> achievers;
};

/// omega* = s1 + s2, the two largest singular values of the coefficient
/// matrix; the achiever realizes the anti-diagonal form R_V^T C R_W.
SpeedLimitResult speed_limit_two_qubits(const Eigen::Matrix3d& C);

/// omega* = l1(C) - l3(C) for a symmetric coefficient matrix; the achiever
/// is symmetric, V (x) V.
SpeedLimitResult speed_limit_bosonic(const Eigen::Matrix3d& C);

struct FermionicBounds {
  double lower = 0.0;  // (l1 - l3)(l2 - l4)/4
  double upper = 0.0;  // (l1 + l2 - l3 - l4)^2/16
  /// Level-mixing unitary V with |Im(a13 a24 - a14 a23)| = lower for
  /// a = V^* diag(l) V.
  Eigen::Matrix4cd achiever_lower;
};

/// Speed bounds for the rank-one fermionic d = 4 coupling A (x) A given the
/// eigenvalues of A in non-increasing order.  The bounds coincide exactly
/// when l1 + l4 = l2 + l3.
FermionicBounds fermionic_speed_bounds(const Eigen::Vector4d& eigs);

/// Schmidt-angle velocity of the fermionic reduced system at V (x) V:
/// Im(a13 a24 - a14 a23) with a = V^* A V.
double fermionic_angle_velocity(const Eigen::Matrix4cd& A,
                                const Eigen::Matrix4cd& V);

/// omega* = (l1(A) - l3(A)) (l1(B) - l3(B)) / 4 bounding ||omega_U||_1 for
/// equidistant spectra; returns achievers for all six octahedron vertices.
/// Throws if either spectrum is not equidistant within 1e-10.
SpeedLimitResult qutrit_speed_limit(const Eigen::Matrix3cd& A,
                                    const Eigen::Matrix3cd& B);

enum class SpeedObjective {
  abs_omega,        // |(H_U)_21|, dmin = 2
  one_norm,         // ||omega_U||_1, dmin = 3
  fermionic_angle,  // |Im(a13 a24 - a14 a23)|, d = 4 rank-one A (x) A
};

struct BruteForceOptions {
  int samples = 512;
  int restarts = 4;
  int iterations = 400;
  double initial_step = 0.3;
  double decay = 0.97;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool symmetric = false;  // constrain W = V (bosonic / fermionic)
};

/// Best objective value over Haar-sampled local unitaries refined by
/// hill-climbing with random tangent moves and geometric step decay.
/// Deterministic for a fixed seed, independent of the job count.
double brute_force_speed(const CouplingHamiltonian& H0, SpeedObjective objective,
                         const BruteForceOptions& opts = {});

/// Face barycenters of the regular octahedron O3 = conv(+-e_i).
struct OctahedronCatalog {
  std::vector<Eigen::Vector3d> vertices;          // 6, ||.||_1 = 1
  std::vector<Eigen::Vector3d> edge_barycenters;  // 12, (+-1/2, +-1/2, 0)-type
  std::vector<Eigen::Vector3d> facet_barycenters; // 8, (+-1/3, +-1/3, +-1/3)
};
const OctahedronCatalog& octahedron_faces();

}  // namespace sctl
