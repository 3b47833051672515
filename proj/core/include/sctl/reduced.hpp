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

#include <functional>
#include <variant>

namespace sctl {

/// Rotation generator of the reduced dynamics on the Schmidt sphere,
/// sigma' = -H sigma.  Convention for dmin = 3:
///   H = [[0, w_z, -w_y], [-w_z, 0, w_x], [w_y, -w_x, 0]]
/// so that -H sigma = omega x sigma; for dmin = 2 the scalar angular
/// velocity is H(1, 0).
struct InducedField {
  Eigen::MatrixXd generator;  // antisymmetric dmin x dmin

  Eigen::Index dmin() const { return generator.rows(); }
  /// Scalar angular velocity (dmin = 2 only).
  double omega_scalar() const { return generator(1, 0); }
  /// Rotation vector (dmin = 3 only).
  Eigen::Vector3d omega_vector() const {
    return {generator(1, 2), generator(2, 0), generator(0, 1)};
  }
  static InducedField from_omega(const Eigen::Vector3d& w);
  static InducedField from_omega_scalar(double w);
};

/// H_U = sum_k Im((V^* A_k V) o (W^* B_k W)) truncated to the leading
/// dmin x dmin block, where o is the element-wise product.
InducedField induced_field(const CouplingHamiltonian& H0, const LocalUnitary& u);

/// Weyl projection: absolute values arranged into the chamber.  For
/// dmin = 2 this is (cos chi, sin chi) with chi in [0, pi/4]; for dmin = 3
/// the default chamber is sigma_z >= sigma_x >= sigma_y >= 0.
enum class WeylChamber {
  zxy,  // sigma_z >= sigma_x >= sigma_y >= 0 (default)
  zyx,  // sigma_z >= sigma_y >= sigma_x >= 0
};

Eigen::VectorXd weyl_project(const Eigen::VectorXd& sigma,
                             WeylChamber chamber = WeylChamber::zxy);

/// Schmidt angle chi in [0, pi/4] of a two-dimensional singular value
/// vector: Weyl-projected sigma equals (cos chi, sin chi).
double schmidt_angle(const Eigen::VectorXd& sigma);

/// Piecewise control for the reduced system: each segment carries either a
/// local unitary (the induced field is recomputed against the coupling) or
/// a cached induced field.
struct ControlSchedule {
  struct Segment {
    double t_start = 0.0;
    double t_end = 0.0;
    std::variant<LocalUnitary, InducedField> payload;
  };
  std::vector<Segment> segments;

  static ControlSchedule constant(const InducedField& field, double T);
  static ControlSchedule constant(const LocalUnitary& u, double T);
};

struct ReducedTrajectory {
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXd> states;  // unit vectors, one per time
};

/// Integrates sigma' = -H_U sigma with exact rotation steps per
/// piecewise-constant segment.  The coupling is only needed for segments
/// holding a LocalUnitary payload; pass nullptr when all segments carry
/// cached fields.
ReducedTrajectory integrate_reduced(const Eigen::VectorXd& sigma0,
                                    const ControlSchedule& schedule,
                                    double T, double dt,
                                    const CouplingHamiltonian* H0 = nullptr);

/// Fixed-step RK4 fallback for genuinely time-varying generators.
ReducedTrajectory integrate_reduced(const Eigen::VectorXd& sigma0,
                                    const std::function<Eigen::MatrixXd(double)>& generator,
                                    double T, double dt = 1e-3);

/// exp(-H t) applied exactly (closed form for dmin = 2, 3; scaling-and-
/// squaring otherwise).
Eigen::MatrixXd rotation_step(const Eigen::MatrixXd& generator, double t);

}  // namespace sctl
