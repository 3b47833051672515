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

#include "sctl/sim.hpp"

#include "sctl/bipartite.hpp"
#include "sctl/speed_limits.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <future>

namespace sctl {

namespace {

Eigen::VectorXd weyl_singular_values(const Eigen::VectorXcd& psi, Eigen::Index d1,
                                     Eigen::Index d2, WeylChamber chamber) {
  BipartiteState s = BipartiteState::from_vec(psi, d1, d2);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.amplitudes);
  return weyl_project(svd.singularValues(), chamber);
}

/// exp(-i H t) |psi> via one Hermitian eigendecomposition; the
/// decomposition is reused across sampling steps of a constant segment.
struct Propagator {
  Eigen::MatrixXcd Q;
  Eigen::VectorXd evals;

  explicit Propagator(const Eigen::MatrixXcd& H) {
    require_hermitian(H, 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    Q = es.eigenvectors();
    evals = es.eigenvalues();
  }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double t) const {
    Eigen::VectorXcd phases =
        (Complex(0, -1) * t * evals.cast<Complex>()).array().exp();
    return Q * (phases.asDiagonal() * (Q.adjoint() * psi));
  }
};

}  // namespace

SimulationResult schrodinger_integrate(const BipartiteState& psi0,
                                       const HamiltonianSchedule& schedule,
                                       double T, double dt, WeylChamber chamber) {
  if (!(dt > 0) || !std::isfinite(dt) || !std::isfinite(T) || T < 0)
    throw std::invalid_argument("schrodinger_integrate: bad time parameters");
  const Eigen::Index d1 = psi0.d1(), d2 = psi0.d2();
  psi0.require_normalized(1e-9);

  std::vector<Propagator> props;
  props.reserve(schedule.segments.size());
  for (const auto& seg : schedule.segments) props.emplace_back(seg.H);

  const auto n_steps = static_cast<Eigen::Index>(std::ceil(T / dt - 1e-12));
  SimulationResult out;
  out.times.resize(n_steps + 1);
  out.times(0) = 0.0;
  Eigen::VectorXcd psi = psi0.vec();
  out.states.push_back(psi);
  out.singular_values.push_back(weyl_singular_values(psi, d1, d2, chamber));

  double t = 0.0;
  for (Eigen::Index k = 1; k <= n_steps; ++k) {
    const double t_next = std::min(T, static_cast<double>(k) * dt);
    double s = t;
    while (s < t_next - 1e-15) {
      double s_end = t_next;
      const Propagator* prop = nullptr;
      for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
        const auto& seg = schedule.segments[i];
        if (seg.t_start - 1e-15 <= s && s < seg.t_end - 1e-15) {
          prop = &props[i];
          s_end = std::min(s_end, seg.t_end);
          break;
        }
      }
      if (prop == nullptr) {
        for (const auto& seg : schedule.segments)
          if (seg.t_start > s + 1e-15) s_end = std::min(s_end, seg.t_start);
      } else {
        psi = prop->apply(psi, s_end - s);
      }
      s = s_end;
    }
    t = t_next;
    out.times(k) = t;
    out.states.push_back(psi);
    out.singular_values.push_back(weyl_singular_values(psi, d1, d2, chamber));
  }
  return out;
}

SimulationResult schrodinger_integrate_timedep(
    const BipartiteState& psi0, const Eigen::MatrixXcd& base,
    const Eigen::MatrixXcd& direction, const std::function<double(double)>& coeff,
    double T, double dt, WeylChamber chamber) {
  if (!(dt > 0) || !std::isfinite(dt) || !std::isfinite(T) || T < 0)
    throw std::invalid_argument("schrodinger_integrate_timedep: bad time parameters");
  require_hermitian(base, 1e-9);
  require_hermitian(direction, 1e-9);
  const Eigen::Index d1 = psi0.d1(), d2 = psi0.d2();

  const auto n_steps = static_cast<Eigen::Index>(std::ceil(T / dt - 1e-12));
  SimulationResult out;
  out.times.resize(n_steps + 1);
  out.times(0) = 0.0;
  Eigen::VectorXcd psi = psi0.vec();
  out.states.push_back(psi);
  out.singular_values.push_back(weyl_singular_values(psi, d1, d2, chamber));

  // 4th-order commutator-free Magnus: two Gauss nodes per step.
  const double root3 = std::sqrt(3.0);
  const double a1 = 0.25 + root3 / 6.0, a2 = 0.25 - root3 / 6.0;
  double t = 0.0;
  for (Eigen::Index k = 1; k <= n_steps; ++k) {
    const double t_next = std::min(T, static_cast<double>(k) * dt);
    const double h = t_next - t;
    const double c1 = coeff(t + (0.5 - root3 / 6.0) * h);
    const double c2 = coeff(t + (0.5 + root3 / 6.0) * h);
    Eigen::MatrixXcd H_a = base + (a2 * c1 + a1 * c2) * direction;
    Eigen::MatrixXcd H_b = base + (a1 * c1 + a2 * c2) * direction;
    psi = Propagator(H_a).apply(Propagator(H_b).apply(psi, h), h);
    t = t_next;
    out.times(k) = t;
    out.states.push_back(psi);
    out.singular_values.push_back(weyl_singular_values(psi, d1, d2, chamber));
  }
  return out;
}

double qutrit_time_star() { return std::sqrt(2.0) * std::acos(1.0 / std::sqrt(3.0)); }

const Eigen::Matrix3cd& qutrit_coupling_a() {
  static const Eigen::Matrix3cd m = [] {
    Eigen::Matrix3cd a;
    a << 0, 0, 1, 0, 0, 1, 1, 1, 0;
    return Eigen::Matrix3cd(a / std::sqrt(2.0));
  }();
  return m;
}

const Eigen::Matrix3cd& qutrit_coupling_b() {
  static const Eigen::Matrix3cd m = [] {
    const Complex i(0, 1);
    Eigen::Matrix3cd b;
    b << 0, 0, -i, 0, 0, -i, i, i, 0;
    return Eigen::Matrix3cd(b / std::sqrt(2.0));
  }();
  return m;
}

const Eigen::Matrix3cd& qutrit_py() {
  static const Eigen::Matrix3cd m = [] {
    const Complex i(0, 1);
    Eigen::Matrix3cd p = Eigen::Matrix3cd::Zero();
    p(0, 1) = -i;
    p(1, 0) = i;
    return p;
  }();
  return m;
}

LocalUnitary qutrit_protocol_frame(const Eigen::Matrix3cd& A,
                                   const Eigen::Matrix3cd& B) {
  auto frame_to = [](const Eigen::Matrix3cd& M, const Eigen::Matrix3cd& target) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> em(M), et(target);
    if ((em.eigenvalues() - et.eigenvalues()).norm() > 1e-9)
      throw std::invalid_argument(
          "qutrit_protocol_frame: spectrum must be (1, 0, -1) up to ordering");
    return Eigen::Matrix3cd(em.eigenvectors() * et.eigenvectors().adjoint());
  };
  return {frame_to(A, qutrit_coupling_a()), frame_to(B, qutrit_coupling_b())};
}

SimulationResult epsilon_protocol(double eps, DetourMode mode, double T, double dt) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("epsilon_protocol requires eps in (0, 1)");
  if (T < 0) T = qutrit_time_star();
  const double s2 = std::sqrt(2.0);
  const Eigen::MatrixXcd drift = kron(qutrit_coupling_a(), qutrit_coupling_b());
  const Eigen::MatrixXcd ctrl =
      kron(qutrit_py(), Eigen::MatrixXcd::Identity(3, 3)) +
      kron(Eigen::MatrixXcd::Identity(3, 3), qutrit_py());

  if (mode == DetourMode::constant) {
    Eigen::VectorXd sigma0(3);
    sigma0 << 0, 0, 1;
    BipartiteState psi0 = BipartiteState::diagonal(sigma0, 3, 3);
    HamiltonianSchedule sched =
        HamiltonianSchedule::constant(drift + ctrl / (2 * s2 * eps), T);
    return schrodinger_integrate(psi0, sched, T, dt);
  }

  // Shifted start on the circle sigma_x = sigma_y + eps sqrt2.
  const double q = std::sqrt(1.0 - eps * eps);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = eps / s2;
  m(1, 1) = -eps / s2;
  m(2, 2) = q;
  BipartiteState psi0{m};

  if (mode == DetourMode::time_dependent) {
    auto coeff = [eps, q, s2](double t) {
      return q * std::cos(t / s2) / (2 * s2 * eps);
    };
    return schrodinger_integrate_timedep(psi0, drift, ctrl, coeff, T, dt);
  }

  // State-dependent: coefficient sigma_z/(2 sqrt2 eps) read off the running
  // state, refreshed by a midpoint pass per step.
  const auto n_steps = static_cast<Eigen::Index>(std::ceil(T / dt - 1e-12));
  SimulationResult out;
  out.times.resize(n_steps + 1);
  out.times(0) = 0.0;
  Eigen::VectorXcd psi = psi0.vec();
  out.states.push_back(psi);
  out.singular_values.push_back(weyl_project(psi0.amplitudes.diagonal().real()));
  double t = 0.0;
  for (Eigen::Index k = 1; k <= n_steps; ++k) {
    const double t_next = std::min(T, static_cast<double>(k) * dt);
    const double h = t_next - t;
    auto sigma_z = [](const Eigen::VectorXcd& p) { return std::real(p(8)); };
    Eigen::VectorXcd mid =
        Propagator(drift + (sigma_z(psi) / (2 * s2 * eps)) * ctrl).apply(psi, h / 2);
    psi = Propagator(drift + (sigma_z(mid) / (2 * s2 * eps)) * ctrl).apply(psi, h);
    t = t_next;
    out.times(k) = t;
    out.states.push_back(psi);
    out.singular_values.push_back(
        weyl_singular_values(psi, 3, 3, WeylChamber::zxy));
  }
  return out;
}

double cost_C(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("cost_C requires eps in (0, 1)");
  const double s2 = std::sqrt(2.0);
  const Eigen::MatrixXcd H =
      kron(qutrit_coupling_a(), qutrit_coupling_b()) +
      (kron(qutrit_py(), Eigen::MatrixXcd::Identity(3, 3)) +
       kron(Eigen::MatrixXcd::Identity(3, 3), qutrit_py())) /
          (2 * s2 * eps);
  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(9);
  psi0(8) = 1.0;
  Eigen::VectorXcd psiT = Propagator(H).apply(psi0, qutrit_time_star());
  BipartiteState s = BipartiteState::from_vec(psiT, 3, 3);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.amplitudes);
  Eigen::Vector3d target = Eigen::Vector3d::Constant(1.0 / std::sqrt(3.0));
  return (svd.singularValues() - target).norm();
}

double transformed_cost(double x) {
  const double s2 = std::sqrt(2.0);
  if (!(x > 1.0 / (2 * s2)))
    throw std::invalid_argument("transformed_cost requires x > 1/(2 sqrt2)");
  const double eps = 1.0 / (2 * s2 * x);
  return std::sqrt(3.0) * cost_C(eps) * (2 * s2 * x - 1.0);
}

double epsilon_minimum(double k, const EpsilonMinimaConstants& c) {
  const double s2 = std::sqrt(2.0);
  const double eps = 1.0 / (2 * s2 * (c.x0 + k * c.dx));
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::domain_error("epsilon_minimum: k places eps outside (0, 1)");
  return eps;
}

EpsilonMinimaConstants fit_epsilon_minima(double x_lo, double x_hi, int grid) {
  if (grid < 16 || !(x_lo < x_hi))
    throw std::invalid_argument("fit_epsilon_minima: bad grid");
  Eigen::VectorXd xs(grid), cs(grid);
  const double h = (x_hi - x_lo) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    xs(i) = x_lo + i * h;
    cs(i) = transformed_cost(xs(i));
  }
  std::vector<double> minima;
  for (int i = 1; i + 1 < grid; ++i) {
    if (cs(i) < cs(i - 1) && cs(i) < cs(i + 1)) {
      const double denom = cs(i - 1) - 2 * cs(i) + cs(i + 1);
      const double shift = denom > 0 ? 0.5 * (cs(i - 1) - cs(i + 1)) / denom : 0.0;
      minima.push_back(xs(i) + shift * h);
    }
  }
  if (minima.size() < 2)
    throw std::runtime_error("fit_epsilon_minima: fewer than two minima found");
  // Least-squares line x_k = x0 + k dx through consecutive minima.
  const auto n = static_cast<Eigen::Index>(minima.size());
  Eigen::MatrixXd A(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = static_cast<double>(i);
    b(i) = minima[static_cast<std::size_t>(i)];
  }
  Eigen::Vector2d sol = A.colPivHouseholderQr().solve(b);
  EpsilonMinimaConstants out;
  out.dx = sol(1);
  // Anchor x0 in [0, dx) the way the catalog indexes minima from k = 1.
  double x0 = sol(0);
  x0 -= std::floor(x0 / out.dx) * out.dx;
  out.x0 = x0;
  return out;
}

CostCurve sweep_cost(double eps_min, double eps_max, int n, int jobs) {
  if (!(eps_min > 0.0) || !(eps_max < 1.0) || !(eps_min < eps_max) || n < 2)
    throw std::invalid_argument("sweep_cost: bad range");
  CostCurve curve;
  curve.epsilons.resize(n);
  curve.costs.resize(n);
  curve.xs.resize(n);
  curve.transformed.resize(n);
  const double l0 = std::log(eps_min), l1 = std::log(eps_max);
  for (int i = 0; i < n; ++i)
    curve.epsilons(i) = std::exp(l0 + (l1 - l0) * i / (n - 1));

  auto run = [&](int begin, int end) {
    const double s2 = std::sqrt(2.0);
    for (int i = begin; i < end; ++i) {
      const double eps = curve.epsilons(i);
      curve.costs(i) = cost_C(eps);
      curve.xs(i) = 1.0 / (2 * s2 * eps);
      curve.transformed(i) =
          std::sqrt(3.0) * curve.costs(i) * (2 * s2 * curve.xs(i) - 1.0);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    run(0, n);
  } else {
    std::vector<std::future<void>> futs;
    const int chunk = (n + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const int b = j * chunk, e = std::min(n, b + chunk);
      if (b >= e) break;
      futs.push_back(std::async(std::launch::async, run, b, e));
    }
    for (auto& f : futs) f.get();
  }
  return curve;
}

TwoQubitProtocol two_qubit_protocol(const CouplingHamiltonian& H0) {
  if (H0.d1() != 2 || H0.d2() != 2)
    throw std::invalid_argument("two_qubit_protocol requires a 2x2 coupling");
  CoefficientMatrix cm = coefficient_matrix(H0);
  SpeedLimitResult sl = speed_limit_two_qubits(cm.C);
  if (sl.omega_star <= 1e-12)
    throw std::domain_error(
        "two_qubit_protocol: s1 + s2 = 0, entanglement is not controllable");
  TwoQubitProtocol p;
  p.achiever = sl.achievers.front();
  p.omega_star = sl.omega_star;
  p.duration = (M_PI / 4.0) / sl.omega_star;
  Eigen::Matrix3d Cp = rotation_from_su2(p.achiever.V).transpose() * cm.C *
                       rotation_from_su2(p.achiever.W);
  p.local_shift = Cp(2, 2);
  return p;
}

SimulationResult lift_two_qubit_protocol(const CouplingHamiltonian& H0, double dt) {
  TwoQubitProtocol p = two_qubit_protocol(H0);
  // |00> -> U|00>, then evolve under H0 + H_c with H_c = -C'_zz * identity.
  Eigen::VectorXcd start = Eigen::VectorXcd::Zero(4);
  start(0) = 1.0;
  Eigen::VectorXcd psi0 = p.achiever.dense() * start;
  Eigen::MatrixXcd H = H0.dense() - p.local_shift * Eigen::MatrixXcd::Identity(4, 4);
  return schrodinger_integrate(BipartiteState::from_vec(psi0, 2, 2),
                               HamiltonianSchedule::constant(H, p.duration),
                               p.duration, dt);
}

}  // namespace sctl
