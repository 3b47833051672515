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

#include "sctl/reduced.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace sctl {

InducedField InducedField::from_omega(const Eigen::Vector3d& w) {
  Eigen::Matrix3d H;
  H << 0, w.z(), -w.y(), -w.z(), 0, w.x(), w.y(), -w.x(), 0;
  return InducedField{H};
}

InducedField InducedField::from_omega_scalar(double w) {
  Eigen::Matrix2d H;
  H << 0, -w, w, 0;
  return InducedField{H};
}

InducedField induced_field(const CouplingHamiltonian& H0, const LocalUnitary& u) {
  if (u.V.rows() != H0.d1() || u.W.rows() != H0.d2())
    throw std::invalid_argument("induced_field: unitary dims do not match coupling");
  const Eigen::Index n = H0.dmin();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  for (const auto& term : H0.terms()) {
    Eigen::MatrixXcd a = (u.V.adjoint() * term.A * u.V).topLeftCorner(n, n);
    Eigen::MatrixXcd b = (u.W.adjoint() * term.B * u.W).topLeftCorner(n, n);
    H += a.cwiseProduct(b).imag();
  }
  return InducedField{std::move(H)};
}

Eigen::VectorXd weyl_project(const Eigen::VectorXd& sigma, WeylChamber chamber) {
  Eigen::VectorXd abs = sigma.cwiseAbs();
  std::sort(abs.data(), abs.data() + abs.size(), std::greater<double>());
  if (sigma.size() != 3) return abs;  // non-increasing order
  Eigen::VectorXd out(3);
  if (chamber == WeylChamber::zxy) {
    out << abs(1), abs(2), abs(0);  // z largest, then x, then y
  } else {
    out << abs(2), abs(1), abs(0);
  }
  return out;
}

double schmidt_angle(const Eigen::VectorXd& sigma) {
  if (sigma.size() != 2)
    throw std::invalid_argument("schmidt_angle requires dmin = 2");
  Eigen::VectorXd p = weyl_project(sigma);
  return std::atan2(p(1), p(0));
}

ControlSchedule ControlSchedule::constant(const InducedField& field, double T) {
  return {{Segment{0.0, T, field}}};
}
ControlSchedule ControlSchedule::constant(const LocalUnitary& u, double T) {
  return {{Segment{0.0, T, u}}};
}

Eigen::MatrixXd rotation_step(const Eigen::MatrixXd& generator, double t) {
  const Eigen::Index n = generator.rows();
  if (n == 2) {
    const double phi = generator(1, 0) * t;  // exp(-H t) rotates by -phi
    Eigen::Matrix2d R;
    R << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
    return R;
  }
  if (n == 3) {
    // -H sigma = omega x sigma, so exp(-H t) is the Rodrigues rotation
    // about omega by angle |omega| t.
    const Eigen::Vector3d w{generator(1, 2), generator(2, 0), generator(0, 1)};
    const double speed = w.norm();
    if (speed * std::abs(t) < 1e-300) return Eigen::Matrix3d::Identity();
    const Eigen::Vector3d axis = w / speed;
    Eigen::Matrix3d K;
    K << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
    const double ang = speed * t;
    return Eigen::Matrix3d::Identity() + std::sin(ang) * K +
           (1.0 - std::cos(ang)) * K * K;
  }
  Eigen::MatrixXd M = -generator * t;
  return M.exp();
}

namespace {

const Eigen::MatrixXd& segment_generator(
    const ControlSchedule::Segment& seg, const CouplingHamiltonian* H0,
    Eigen::MatrixXd& scratch) {
  if (const auto* field = std::get_if<InducedField>(&seg.payload))
    return field->generator;
  if (H0 == nullptr)
    throw std::invalid_argument(
        "integrate_reduced: LocalUnitary segment needs the coupling Hamiltonian");
  scratch = induced_field(*H0, std::get<LocalUnitary>(seg.payload)).generator;
  return scratch;
}

}  // namespace

ReducedTrajectory integrate_reduced(const Eigen::VectorXd& sigma0,
                                    const ControlSchedule& schedule,
                                    double T, double dt,
                                    const CouplingHamiltonian* H0) {
  if (!(dt > 0) || !std::isfinite(dt) || !std::isfinite(T) || T < 0)
    throw std::invalid_argument("integrate_reduced: bad time parameters");
  for (const auto& seg : schedule.segments)
    if (const auto* f = std::get_if<InducedField>(&seg.payload))
      if (!f->generator.allFinite())
        throw std::invalid_argument("integrate_reduced: non-finite schedule values");

  const Eigen::Index n = sigma0.size();
  const auto n_steps = static_cast<Eigen::Index>(std::ceil(T / dt - 1e-12));
  ReducedTrajectory traj;
  traj.times.resize(n_steps + 1);
  traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.states.push_back(sigma0);
  traj.times(0) = 0.0;

  Eigen::VectorXd sigma = sigma0;
  Eigen::MatrixXd scratch;
  double t = 0.0;
  for (Eigen::Index k = 1; k <= n_steps; ++k) {
    const double t_next = std::min(T, static_cast<double>(k) * dt);
    // Advance across (possibly several) piecewise-constant segments with
    // exact rotations; time outside every segment is drift-free u = 0
    // only if no segment covers it, which we treat as zero generator.
    double s = t;
    while (s < t_next - 1e-15) {
      double s_end = t_next;
      const Eigen::MatrixXd* gen = nullptr;
      for (const auto& seg : schedule.segments) {
        if (seg.t_start - 1e-15 <= s && s < seg.t_end - 1e-15) {
          gen = &segment_generator(seg, H0, scratch);
          s_end = std::min(s_end, seg.t_end);
          break;
        }
      }
      if (gen == nullptr) {
        // find next segment start after s, if any
        for (const auto& seg : schedule.segments)
          if (seg.t_start > s + 1e-15) s_end = std::min(s_end, seg.t_start);
        s = s_end;
        continue;
      }
      sigma = (rotation_step(*gen, s_end - s) * sigma).eval();
      s = s_end;
    }
    t = t_next;
    traj.times(k) = t;
    traj.states.push_back(sigma);
  }
  return traj;
}

ReducedTrajectory integrate_reduced(
    const Eigen::VectorXd& sigma0,
    const std::function<Eigen::MatrixXd(double)>& generator, double T, double dt) {
  const auto n_steps = static_cast<Eigen::Index>(std::ceil(T / dt - 1e-12));
  ReducedTrajectory traj;
  traj.times.resize(n_steps + 1);
  traj.states.push_back(sigma0);
  traj.times(0) = 0.0;
  Eigen::VectorXd sigma = sigma0;
  auto rhs = [&](double t, const Eigen::VectorXd& s) -> Eigen::VectorXd {
    return -(generator(t) * s);
  };
  double t = 0.0;
  for (Eigen::Index k = 1; k <= n_steps; ++k) {
    const double t_next = std::min(T, static_cast<double>(k) * dt);
    const double h = t_next - t;
    Eigen::VectorXd k1 = rhs(t, sigma);
    Eigen::VectorXd k2 = rhs(t + h / 2, sigma + h / 2 * k1);
    Eigen::VectorXd k3 = rhs(t + h / 2, sigma + h / 2 * k2);
    Eigen::VectorXd k4 = rhs(t + h, sigma + h * k3);
    sigma += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    sigma.normalize();  // project back to the sphere
    t = t_next;
    traj.times(k) = t;
    traj.states.push_back(sigma);
  }
  return traj;
}

}  // namespace sctl
