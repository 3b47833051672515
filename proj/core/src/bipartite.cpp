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

#include "sctl/bipartite.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace sctl {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  Eigen::MatrixXcd out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index k = 0; k < A.cols(); ++k)
      out.block(i * B.rows(), k * B.cols(), B.rows(), B.cols()) = A(i, k) * B;
  return out;
}

bool is_hermitian(const Eigen::MatrixXcd& M, double eps) {
  return M.rows() == M.cols() && (M - M.adjoint()).norm() <= eps * std::max(1.0, M.norm());
}

void require_hermitian(const Eigen::MatrixXcd& M, double eps) {
  if (!is_hermitian(M, eps)) throw std::invalid_argument("matrix is not Hermitian");
}

BipartiteState BipartiteState::diagonal(const Eigen::VectorXd& sigma,
                                        Eigen::Index d1, Eigen::Index d2) {
  if (sigma.size() != std::min(d1, d2))
    throw std::invalid_argument("sigma length must equal min(d1, d2)");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d1, d2);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) m(i, i) = sigma(i);
  return BipartiteState{std::move(m)};
}

void BipartiteState::require_normalized(double eps) const {
  if (std::abs(norm() - 1.0) > eps)
    throw std::invalid_argument("state is not normalized");
}

Eigen::MatrixXcd LocalUnitary::dense() const { return kron(V, W); }

void LocalUnitary::require_unitary(double eps) const {
  auto check = [eps](const Eigen::MatrixXcd& U) {
    Eigen::MatrixXcd d = U.adjoint() * U - Eigen::MatrixXcd::Identity(U.rows(), U.cols());
    return d.norm() <= eps * std::max<double>(1.0, static_cast<double>(U.rows()));
  };
  if (!check(V) || !check(W)) throw std::invalid_argument("factor is not unitary");
}

CouplingHamiltonian::CouplingHamiltonian(Eigen::Index d1, Eigen::Index d2,
                                         std::vector<Term> terms)
    : d1_(d1), d2_(d2), terms_(std::move(terms)), cache_(std::make_shared<DenseCache>()) {
  for (const auto& t : terms_) {
    if (t.A.rows() != d1 || t.A.cols() != d1 || t.B.rows() != d2 || t.B.cols() != d2)
      throw std::invalid_argument("coupling term dimensions do not match dims");
  }
}

const Eigen::MatrixXcd& CouplingHamiltonian::dense() const {
  std::call_once(cache_->once, [this] {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d1_ * d2_, d1_ * d2_);
    for (const auto& t : terms_) sum += kron(t.A, t.B);
    cache_->matrix = std::move(sum);
  });
  return cache_->matrix;
}

CouplingHamiltonian CouplingHamiltonian::conjugated(const LocalUnitary& u) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back({u.V.adjoint() * t.A * u.V, u.W.adjoint() * t.B * u.W});
  return CouplingHamiltonian(d1_, d2_, std::move(out));
}

CouplingHamiltonian CouplingHamiltonian::scaled(double factor) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({factor * t.A, t.B});
  return CouplingHamiltonian(d1_, d2_, std::move(out));
}

void CouplingHamiltonian::require_hermitian_terms(double eps) const {
  for (const auto& t : terms_) {
    require_hermitian(t.A, eps);
    require_hermitian(t.B, eps);
  }
}

Eigen::MatrixXcd LocalHamiltonian::dense() const {
  return kron(E, Eigen::MatrixXcd::Identity(F.rows(), F.rows())) +
         kron(Eigen::MatrixXcd::Identity(E.rows(), E.rows()), F);
}

const Eigen::Matrix2cd& pauli_x() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  return m;
}
const Eigen::Matrix2cd& pauli_y() {
  static const Eigen::Matrix2cd m =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}
const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return m;
}
const Eigen::Matrix2cd& pauli(int i) {
  switch (i) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

namespace {

// Gell-Mann-type generators normalized to tr(A_i A_j) = 2 delta_ij, ordered
// as all symmetric pairs, all antisymmetric pairs, then diagonal ones, so
// that d = 2 reproduces (P_x, P_y, P_z) exactly.
std::vector<Eigen::MatrixXcd> build_traceless_basis(Eigen::Index d) {
  std::vector<Eigen::MatrixXcd> basis;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
      sym(i, j) = sym(j, i) = 1.0;
      basis.push_back(sym);
      Eigen::MatrixXcd asym = Eigen::MatrixXcd::Zero(d, d);
      asym(i, j) = Complex(0, -1);
      asym(j, i) = Complex(0, 1);
      basis.push_back(asym);
    }
  for (Eigen::Index k = 1; k < d; ++k) {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
    const double scale = std::sqrt(2.0 / static_cast<double>(k * (k + 1)));
    for (Eigen::Index j = 0; j < k; ++j) diag(j, j) = scale;
    diag(k, k) = -scale * static_cast<double>(k);
    basis.push_back(diag);
  }
  return basis;
}

}  // namespace

const std::vector<Eigen::MatrixXcd>& traceless_basis(Eigen::Index d) {
  static const std::vector<Eigen::MatrixXcd> b2 = build_traceless_basis(2);
  static const std::vector<Eigen::MatrixXcd> b3 = build_traceless_basis(3);
  static const std::vector<Eigen::MatrixXcd> b4 = build_traceless_basis(4);
  switch (d) {
    case 2: return b2;
    case 3: return b3;
    case 4: return b4;
    default: throw std::invalid_argument("traceless_basis supports d in {2, 3, 4}");
  }
}

SchmidtDecomposition schmidt_decompose(const BipartiteState& state) {
  state.require_normalized();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      state.amplitudes, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // amplitudes = U S V^dagger and (V (x) W)|sigma> has matrix V S W^T,
  // so V = U and W = conj(V_svd).
  SchmidtDecomposition out;
  out.frame.V = svd.matrixU();
  out.frame.W = svd.matrixV().conjugate();
  out.sigma = svd.singularValues().head(state.dmin());
  return out;
}

Eigen::MatrixXcd partial_trace_2(const Eigen::MatrixXcd& M, Eigen::Index d1,
                                 Eigen::Index d2) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index k = 0; k < d1; ++k)
      for (Eigen::Index j = 0; j < d2; ++j) out(i, k) += M(i * d2 + j, k * d2 + j);
  return out;
}

Eigen::MatrixXcd partial_trace_1(const Eigen::MatrixXcd& M, Eigen::Index d1,
                                 Eigen::Index d2) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d2, d2);
  for (Eigen::Index j = 0; j < d2; ++j)
    for (Eigen::Index l = 0; l < d2; ++l)
      for (Eigen::Index i = 0; i < d1; ++i) out(j, l) += M(i * d2 + j, i * d2 + l);
  return out;
}

CoefficientMatrix coefficient_matrix(const CouplingHamiltonian& H0) {
  const Eigen::Index d1 = H0.d1(), d2 = H0.d2();
  if ((d1 < 2 || d1 > 4) || (d2 < 2 || d2 > 4))
    throw std::invalid_argument("coefficient_matrix supports dims in {2, 3, 4}");
  const Eigen::MatrixXcd& H = H0.dense();
  require_hermitian(H, 1e-10);

  const auto& basis1 = traceless_basis(d1);
  const auto& basis2 = traceless_basis(d2);

  CoefficientMatrix cm;
  cm.C.resize(static_cast<Eigen::Index>(basis1.size()),
              static_cast<Eigen::Index>(basis2.size()));
  // tr((A_i (x) B_j) H) / (tr A_i^2 tr B_j^2) with tr A_i^2 = tr B_j^2 = 2.
  for (std::size_t i = 0; i < basis1.size(); ++i)
    for (std::size_t j = 0; j < basis2.size(); ++j)
      cm.C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::real((kron(basis1[i], basis2[j]).adjoint() * H).trace()) / 4.0;

  // Orthogonal projections onto E (x) 1, 1 (x) F and 1 (x) 1.
  const Complex tr = H.trace();
  cm.trace_part = std::real(tr) / static_cast<double>(d1 * d2);
  Eigen::MatrixXcd t2 = partial_trace_2(H, d1, d2) / static_cast<double>(d2);
  Eigen::MatrixXcd t1 = partial_trace_1(H, d1, d2) / static_cast<double>(d1);
  cm.E_loc = t2 - (t2.trace() / static_cast<double>(d1)) *
                       Eigen::MatrixXcd::Identity(d1, d1);
  cm.F_loc = t1 - (t1.trace() / static_cast<double>(d2)) *
                       Eigen::MatrixXcd::Identity(d2, d2);
  return cm;
}

Eigen::MatrixXcd assemble_coefficients(const CoefficientMatrix& cm,
                                       Eigen::Index d1, Eigen::Index d2) {
  const auto& basis1 = traceless_basis(d1);
  const auto& basis2 = traceless_basis(d2);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(d1 * d2, d1 * d2);
  for (Eigen::Index i = 0; i < cm.C.rows(); ++i)
    for (Eigen::Index j = 0; j < cm.C.cols(); ++j)
      if (cm.C(i, j) != 0.0) H += cm.C(i, j) * kron(basis1[i], basis2[j]);
  H += kron(cm.E_loc, Eigen::MatrixXcd::Identity(d2, d2));
  H += kron(Eigen::MatrixXcd::Identity(d1, d1), cm.F_loc);
  H += cm.trace_part * Eigen::MatrixXcd::Identity(d1 * d2, d1 * d2);
  return H;
}

std::vector<DiagonalTerm> diagonalize_coupling(const CouplingHamiltonian& H0) {
  CoefficientMatrix cm = coefficient_matrix(H0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cm.C,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& basis1 = traceless_basis(H0.d1());
  const auto& basis2 = traceless_basis(H0.d2());
  const double cutoff = tol::reconstruction * std::max(1.0, svd.singularValues()(0));
  std::vector<DiagonalTerm> out;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    const double w = svd.singularValues()(k);
    if (w <= cutoff) break;
    DiagonalTerm term;
    term.omega = w;
    term.A = Eigen::MatrixXcd::Zero(H0.d1(), H0.d1());
    term.B = Eigen::MatrixXcd::Zero(H0.d2(), H0.d2());
    for (Eigen::Index i = 0; i < cm.C.rows(); ++i) term.A += svd.matrixU()(i, k) * basis1[i];
    for (Eigen::Index j = 0; j < cm.C.cols(); ++j) term.B += svd.matrixV()(j, k) * basis2[j];
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<SymmetricDiagonalTerm> symmetric_diagonalize(
    const CouplingHamiltonian& H0) {
  if (H0.d1() != H0.d2())
    throw std::invalid_argument("symmetric_diagonalize requires d1 == d2");
  CoefficientMatrix cm = coefficient_matrix(H0);
  if ((cm.C - cm.C.transpose()).norm() > 1e-10 * std::max(1.0, cm.C.norm()))
    throw std::invalid_argument("coupling is not swap-symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cm.C);
  const auto& basis = traceless_basis(H0.d1());
  const double cutoff = tol::reconstruction * std::max(1.0, cm.C.norm());
  std::vector<SymmetricDiagonalTerm> out;
  // eigh is ascending; report by decreasing magnitude
  std::vector<Eigen::Index> order(static_cast<std::size_t>(es.eigenvalues().size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double ma = std::abs(es.eigenvalues()(a)), mb = std::abs(es.eigenvalues()(b));
    if (ma != mb) return ma > mb;
    return es.eigenvalues()(a) > es.eigenvalues()(b);
  });
  for (Eigen::Index k : order) {
    const double w = es.eigenvalues()(k);
    if (std::abs(w) <= cutoff) continue;
    SymmetricDiagonalTerm term;
    term.omega = w;
    term.A = Eigen::MatrixXcd::Zero(H0.d1(), H0.d1());
    for (Eigen::Index i = 0; i < cm.C.rows(); ++i)
      term.A += es.eigenvectors()(i, k) * basis[i];
    out.push_back(std::move(term));
  }
  return out;
}

Eigen::Matrix3d rotation_from_su2(const Eigen::Matrix2cd& V) {
  Eigen::Matrix2cd VVd = V * V.adjoint();
  if ((VVd - Eigen::Matrix2cd::Identity()).norm() > 1e-9)
    throw std::invalid_argument("rotation_from_su2 requires a unitary input");
  Eigen::Matrix3d R;
  const Eigen::Matrix2cd Vi = V.adjoint();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      R(i, j) = 0.5 * std::real((pauli(i) * V * pauli(j) * Vi).trace());
  return R;
}

Eigen::Matrix2cd su2_from_rotation(const Eigen::Matrix3d& R) {
  const double ct = std::clamp((R.trace() - 1.0) / 2.0, -1.0, 1.0);
  const double theta = std::acos(ct);
  if (theta < 1e-14) return Eigen::Matrix2cd::Identity();
  Eigen::Vector3d axis;
  if (M_PI - theta > 1e-6) {
    axis << R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1);
    axis /= 2.0 * std::sin(theta);
  } else {
    // Near theta = pi the antisymmetric part degenerates; use R + I.
    Eigen::Matrix3d B = (R + Eigen::Matrix3d::Identity()) / 2.0;
    Eigen::Index imax;
    B.diagonal().maxCoeff(&imax);
    axis = B.col(imax).normalized();
  }
  Eigen::Matrix2cd nP = axis(0) * pauli_x() + axis(1) * pauli_y() + axis(2) * pauli_z();
  return std::cos(theta / 2.0) * Eigen::Matrix2cd::Identity() -
         Complex(0, 1) * std::sin(theta / 2.0) * nP;
}

}  // namespace sctl
