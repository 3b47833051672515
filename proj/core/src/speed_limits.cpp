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

#include "sctl/speed_limits.hpp"

#include "sctl/bipartite.hpp"
#include "sctl/reduced.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <future>
#include <random>

namespace sctl {

std::string to_string(SpeedLimitCase c) {
  switch (c) {
    case SpeedLimitCase::two_qubit: return "two-qubit";
    case SpeedLimitCase::bosonic: return "bosonic";
    case SpeedLimitCase::fermionic_lower: return "fermionic-lower";
    case SpeedLimitCase::fermionic_upper: return "fermionic-upper";
    case SpeedLimitCase::qutrit_octahedron: return "qutrit-octahedron";
  }
  return "unknown";
}

SpeedLimitResult speed_limit_two_qubits(const Eigen::Matrix3d& C) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(C, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d s = svd.singularValues();

  // Rotations R_V, R_W with R_V^T C R_W = [[0, s1, 0], [s2, 0, 0], [0, 0, *]]:
  // fix determinants into the third singular direction, then swap the first
  // two columns with a sign flip to keep det = +1.
  Eigen::Matrix3d U = svd.matrixU(), V = svd.matrixV();
  if (U.determinant() < 0) U.col(2) *= -1;
  if (V.determinant() < 0) V.col(2) *= -1;
  Eigen::Matrix3d swap;
  swap << 0, 1, 0, 1, 0, 0, 0, 0, -1;
  SpeedLimitResult out;
  out.tag = SpeedLimitCase::two_qubit;
  out.omega_star = s(0) + s(1);
  out.achievers.push_back(
      {su2_from_rotation(U), su2_from_rotation(V * swap)});
  return out;
}

SpeedLimitResult speed_limit_bosonic(const Eigen::Matrix3d& C) {
  if ((C - C.transpose()).norm() > 1e-10 * std::max(1.0, C.norm()))
    throw std::invalid_argument("speed_limit_bosonic requires a symmetric C");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(C);
  // non-increasing l1 >= l2 >= l3
  Eigen::Vector3d l(es.eigenvalues()(2), es.eigenvalues()(1), es.eigenvalues()(0));
  Eigen::Matrix3d Q;
  Q << es.eigenvectors().col(2), es.eigenvectors().col(1), es.eigenvectors().col(0);
  if (Q.determinant() < 0) Q.col(2) *= -1;

  // Target R_V^T C R_V = [[m, d, 0], [d, m, 0], [0, 0, l2]] with
  // m = (l1+l3)/2, d = (l1-l3)/2, diagonalized by G0 with eigenvalue order
  // (l1, l3, l2).
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d G0;
  G0 << r, r, 0, r, -r, 0, 0, 0, 1;
  if (G0.determinant() < 0) G0.col(2) *= -1;
  Eigen::Matrix3d P;  // (l1, l2, l3) -> (l1, l3, l2) reorder
  P << 1, 0, 0, 0, 0, 1, 0, 1, 0;
  if (P.determinant() < 0) P.col(2) *= -1;
  Eigen::Matrix3d RV = Q * P.transpose() * G0.transpose();

  SpeedLimitResult out;
  out.tag = SpeedLimitCase::bosonic;
  out.omega_star = l(0) - l(2);
  Eigen::Matrix2cd Vu = su2_from_rotation(RV);
  out.achievers.push_back({Vu, Vu});
  return out;
}

double fermionic_angle_velocity(const Eigen::Matrix4cd& A, const Eigen::Matrix4cd& V) {
  Eigen::Matrix4cd a = V.adjoint() * A * V;
  return std::imag(a(0, 2) * a(1, 3) - a(0, 3) * a(1, 2));
}

FermionicBounds fermionic_speed_bounds(const Eigen::Vector4d& eigs) {
  for (int i = 0; i + 1 < 4; ++i)
    if (eigs(i) < eigs(i + 1) - 1e-12)
      throw std::invalid_argument("fermionic_speed_bounds expects non-increasing eigenvalues");
  const double l1 = eigs(0), l2 = eigs(1), l3 = eigs(2), l4 = eigs(3);
  FermionicBounds out;
  out.lower = 0.25 * (l1 - l3) * (l2 - l4);
  out.upper = (l1 + l2 - l3 - l4) * (l1 + l2 - l3 - l4) / 16.0;

  // Mix levels (1,3) and (2,4); a relative phase of i between the two
  // blocks turns the determinant of the off-diagonal block imaginary so
  // that the angle velocity is realized rather than cancelled.
  const Complex i(0, 1);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd V = Eigen::Matrix4cd::Zero();
  V(0, 0) = r; V(0, 2) = i * r;
  V(2, 0) = i * r; V(2, 2) = r;
  V(1, 1) = r; V(1, 3) = r;
  V(3, 1) = r; V(3, 3) = -r;
  out.achiever_lower = V;
  return out;
}

namespace {

void require_equidistant(const Eigen::Vector3d& l) {
  if (std::abs((l(0) - l(1)) - (l(1) - l(2))) > 1e-10 * std::max(1.0, l.norm()))
    throw std::invalid_argument("qutrit_speed_limit requires equidistant eigenvalues");
}

Eigen::Vector3d sorted_eigs_desc(const Eigen::Matrix3cd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(A);
  return {es.eigenvalues()(2), es.eigenvalues()(1), es.eigenvalues()(0)};
}

/// Unitary Q with Q^* M Q = target, both Hermitian with equal spectra.
Eigen::MatrixXcd frame_between(const Eigen::MatrixXcd& M, const Eigen::MatrixXcd& target) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> em(M), et(target);
  return em.eigenvectors() * et.eigenvectors().adjoint();
}

}  // namespace

SpeedLimitResult qutrit_speed_limit(const Eigen::Matrix3cd& A, const Eigen::Matrix3cd& B) {
  require_hermitian(A, 1e-10);
  require_hermitian(B, 1e-10);
  const Eigen::Vector3d la = sorted_eigs_desc(A), lb = sorted_eigs_desc(B);
  require_equidistant(la);
  require_equidistant(lb);

  SpeedLimitResult out;
  out.tag = SpeedLimitCase::qutrit_octahedron;
  out.omega_star = (la(0) - la(2)) * (lb(0) - lb(2)) / 4.0;

  // Vertex achiever for +-e_axis: concentrate the whole off-diagonal budget
  // of A and B in the single entry pair feeding that omega component
  // (omega_x <- (2,3), omega_y <- (3,1), omega_z <- (1,2)), with a relative
  // phase of i between the A and B entries.
  const double rA = (la(0) - la(2)) / 2.0, rB = (lb(0) - lb(2)) / 2.0;
  const double mA = (la(0) + la(2)) / 2.0, mB = (lb(0) + lb(2)) / 2.0;
  const Complex i(0, 1);
  struct Pair { int r, c; };
  const Pair entry[3] = {{1, 2}, {2, 0}, {0, 1}};  // x, y, z
  for (int axis = 0; axis < 3; ++axis) {
    for (int sign : {+1, -1}) {
      const auto [p, q] = entry[axis];
      const int rest = 3 - p - q;
      Eigen::Matrix3cd Ap = Eigen::Matrix3cd::Identity() * mA;
      Eigen::Matrix3cd Bp = Eigen::Matrix3cd::Identity() * mB;
      Ap(rest, rest) = la(1);
      Bp(rest, rest) = lb(1);
      Ap(p, q) = rA;
      Ap(q, p) = rA;
      Bp(p, q) = static_cast<double>(sign) * i * rB;
      Bp(q, p) = -static_cast<double>(sign) * i * rB;
      LocalUnitary u{frame_between(A, Ap), frame_between(B, Bp)};
      // Orient the sign by evaluating the realized omega.
      CouplingHamiltonian h = CouplingHamiltonian::product(A, B);
      Eigen::Vector3d w = induced_field(h, u).omega_vector();
      if (w(axis) * sign < 0) {
        Bp(p, q) = -Bp(p, q);
        Bp(q, p) = -Bp(q, p);
        u.W = frame_between(B, Bp);
      }
      out.achievers.push_back(std::move(u));
    }
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Eigen::MatrixXcd haar_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd Z(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) Z(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(Z);
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::VectorXcd d = qr.matrixQR().diagonal();
  for (Eigen::Index k = 0; k < n; ++k) Q.col(k) *= d(k) / std::abs(d(k));
  return Q;
}

Eigen::MatrixXcd random_tangent_move(Eigen::Index n, double step, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd K(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) K(r, c) = Complex(gauss(rng), gauss(rng));
  K = ((K + K.adjoint()) / 2.0).eval();
  K /= K.norm();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K);
  Eigen::VectorXcd phases =
      (Complex(0, -1) * step * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double brute_force_speed(const CouplingHamiltonian& H0, SpeedObjective objective,
                         const BruteForceOptions& opts) {
  if (opts.samples <= 0 || opts.iterations < 0 || opts.restarts <= 0)
    throw std::invalid_argument("brute_force_speed: budget must be positive");
  const Eigen::Index d1 = H0.d1(), d2 = H0.d2();

  Eigen::Matrix4cd fermA;
  if (objective == SpeedObjective::fermionic_angle) {
    if (d1 != 4 || d2 != 4 || H0.terms().size() != 1)
      throw std::invalid_argument("fermionic objective requires a rank-one 4x4 coupling");
    fermA = H0.terms()[0].A;
  }

  auto evaluate = [&](const Eigen::MatrixXcd& V, const Eigen::MatrixXcd& W) {
    switch (objective) {
      case SpeedObjective::abs_omega:
        return std::abs(induced_field(H0, {V, W}).omega_scalar());
      case SpeedObjective::one_norm:
        return induced_field(H0, {V, W}).omega_vector().cwiseAbs().sum();
      case SpeedObjective::fermionic_angle:
        return std::abs(fermionic_angle_velocity(fermA, V));
    }
    return 0.0;
  };

  struct Candidate {
    double value;
    Eigen::MatrixXcd V, W;
  };

  auto sample_range = [&](int begin, int end) {
    std::vector<Candidate> best;
    for (int idx = begin; idx < end; ++idx) {
      std::mt19937_64 rng(splitmix64(opts.seed ^ (0x5eedULL + static_cast<std::uint64_t>(idx))));
      Eigen::MatrixXcd V = haar_unitary(d1, rng);
      Eigen::MatrixXcd W = opts.symmetric ? V : haar_unitary(d2, rng);
      best.push_back({evaluate(V, W), std::move(V), std::move(W)});
    }
    std::sort(best.begin(), best.end(),
              [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    if (best.size() > static_cast<std::size_t>(opts.restarts)) best.resize(opts.restarts);
    return best;
  };

  // Deterministic seed splitting: samples are indexed, so the result does
  // not depend on the number of jobs.
  std::vector<Candidate> pool;
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    pool = sample_range(0, opts.samples);
  } else {
    std::vector<std::future<std::vector<Candidate>>> futs;
    const int chunk = (opts.samples + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const int b = j * chunk, e = std::min(opts.samples, b + chunk);
      if (b >= e) break;
      futs.push_back(std::async(std::launch::async, sample_range, b, e));
    }
    for (auto& f : futs) {
      auto part = f.get();
      pool.insert(pool.end(), part.begin(), part.end());
    }
    std::sort(pool.begin(), pool.end(),
              [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
  }

  double best = pool.empty() ? 0.0 : pool.front().value;
  const int n_restarts = std::min<int>(opts.restarts, static_cast<int>(pool.size()));
  auto climb = [&](int r) {
    std::mt19937_64 rng(splitmix64(opts.seed ^ (0xc11abULL + static_cast<std::uint64_t>(r))));
    Eigen::MatrixXcd V = pool[r].V, W = pool[r].W;
    double value = pool[r].value;
    double step = opts.initial_step;
    for (int it = 0; it < opts.iterations; ++it) {
      Eigen::MatrixXcd V2 = V * random_tangent_move(d1, step, rng);
      Eigen::MatrixXcd W2 = opts.symmetric ? V2 : (W * random_tangent_move(d2, step, rng)).eval();
      const double v2 = evaluate(V2, W2);
      if (v2 > value) {
        V = std::move(V2);
        W = std::move(W2);
        value = v2;
      } else {
        step *= opts.decay;
      }
    }
    return value;
  };
  for (int r = 0; r < n_restarts; ++r) best = std::max(best, climb(r));
  return best;
}

const OctahedronCatalog& octahedron_faces() {
  static const OctahedronCatalog catalog = [] {
    OctahedronCatalog c;
    for (int axis = 0; axis < 3; ++axis)
      for (int sign : {+1, -1}) {
        Eigen::Vector3d v = Eigen::Vector3d::Zero();
        v(axis) = sign;
        c.vertices.push_back(v);
      }
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
        if (c.vertices[i].dot(c.vertices[j]) != 0.0) continue;  // antipodal pair
        c.edge_barycenters.push_back((c.vertices[i] + c.vertices[j]) / 2.0);
      }
    for (int sx : {+1, -1})
      for (int sy : {+1, -1})
        for (int sz : {+1, -1})
          c.facet_barycenters.push_back(Eigen::Vector3d(sx, sy, sz) / 3.0);
    return c;
  }();
  return catalog;
}

}  // namespace sctl
