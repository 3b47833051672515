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

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sctl {

using Complex = std::complex<double>;

namespace tol {
// Structural checks (hermiticity, unitarity, norms).
inline constexpr double structural = 1e-12;
// Reconstruction / reassembly checks.
inline constexpr double reconstruction = 1e-10;
}  // namespace tol

/// Pure state of a bipartite system C^{d1} (x) C^{d2}.  Entry (i, j) of
/// `amplitudes` is the coefficient of |i>|j>, so the matrix of amplitudes is
/// exactly the object whose singular values are the Schmidt coefficients.
struct BipartiteState {
  Eigen::MatrixXcd amplitudes;  // d1 x d2

  Eigen::Index d1() const { return amplitudes.rows(); }
  Eigen::Index d2() const { return amplitudes.cols(); }
  Eigen::Index dmin() const { return std::min(d1(), d2()); }

  double norm() const { return amplitudes.norm(); }

  /// Flattened |psi> with |i>|j> at index i*d2 + j (row-major).
  Eigen::VectorXcd vec() const {
    Eigen::MatrixXcd t = amplitudes.transpose();
    return Eigen::Map<const Eigen::VectorXcd>(t.data(), t.size());
  }

  static BipartiteState from_vec(const Eigen::VectorXcd& psi, Eigen::Index d1,
                                 Eigen::Index d2) {
    if (psi.size() != d1 * d2)
      throw std::invalid_argument("state vector size does not match dims");
    Eigen::MatrixXcd m =
        Eigen::Map<const Eigen::MatrixXcd>(psi.data(), d2, d1).transpose();
    return BipartiteState{std::move(m)};
  }

  /// Diagonal state |sigma> = sum_i sigma_i |i>|i>.
  static BipartiteState diagonal(const Eigen::VectorXd& sigma, Eigen::Index d1,
                                 Eigen::Index d2);

  void require_normalized(double eps = tol::structural) const;
};

/// Local unitary V (x) W.
struct LocalUnitary {
  Eigen::MatrixXcd V;
  Eigen::MatrixXcd W;

  static LocalUnitary identity(Eigen::Index d1, Eigen::Index d2) {
    return {Eigen::MatrixXcd::Identity(d1, d1),
            Eigen::MatrixXcd::Identity(d2, d2)};
  }
  /// Dense d1*d2 x d1*d2 matrix of V (x) W.
  Eigen::MatrixXcd dense() const;
  LocalUnitary adjoint() const { return {V.adjoint(), W.adjoint()}; }

  void require_unitary(double eps = tol::structural) const;
};

/// Coupling Hamiltonian stored as a sum of product terms A_k (x) B_k.  The
/// term list is the source of truth; the dense form is built lazily and
/// shared between copies.
class CouplingHamiltonian {
 public:
  struct Term {
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd B;
  };

  CouplingHamiltonian() = default;
  CouplingHamiltonian(Eigen::Index d1, Eigen::Index d2, std::vector<Term> terms);

  static CouplingHamiltonian product(const Eigen::MatrixXcd& A,
                                     const Eigen::MatrixXcd& B) {
    return CouplingHamiltonian(A.rows(), B.rows(), {Term{A, B}});
  }

  Eigen::Index d1() const { return d1_; }
  Eigen::Index d2() const { return d2_; }
  Eigen::Index dmin() const { return std::min(d1_, d2_); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Dense sum of A_k (x) B_k, cached on first use.
  const Eigen::MatrixXcd& dense() const;

  /// Conjugated Hamiltonian (V (x) W)^* H (V (x) W), term by term.
  CouplingHamiltonian conjugated(const LocalUnitary& u) const;

  CouplingHamiltonian scaled(double factor) const;

  void require_hermitian_terms(double eps = tol::structural) const;

 private:
  struct DenseCache {
    std::once_flag once;
    Eigen::MatrixXcd matrix;
  };

  Eigen::Index d1_ = 0;
  Eigen::Index d2_ = 0;
  std::vector<Term> terms_;
  std::shared_ptr<DenseCache> cache_ = std::make_shared<DenseCache>();
};

/// Coupling coefficients of H0 in a traceless orthonormal product-operator
/// basis, together with the split-off purely local parts:
///   H0 = sum_ij C_ij A_i (x) B_j  +  E_loc (x) 1  +  1 (x) F_loc  +  c 1 (x) 1.
struct CoefficientMatrix {
  Eigen::MatrixXd C;        // (d1^2-1) x (d2^2-1)
  Eigen::MatrixXcd E_loc;   // traceless Hermitian d1 x d1
  Eigen::MatrixXcd F_loc;   // traceless Hermitian d2 x d2
  double trace_part = 0.0;  // coefficient of 1 (x) 1
};

/// Local control Hamiltonian acting as E (x) 1 + 1 (x) F.
struct LocalHamiltonian {
  Eigen::MatrixXcd E;
  Eigen::MatrixXcd F;

  static LocalHamiltonian zero(Eigen::Index d1, Eigen::Index d2) {
    return {Eigen::MatrixXcd::Zero(d1, d1), Eigen::MatrixXcd::Zero(d2, d2)};
  }
  /// Dense d1*d2 x d1*d2 form E (x) 1 + 1 (x) F.
  Eigen::MatrixXcd dense() const;
};

/// Kronecker product with row-major index convention (i*d2 + j).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

bool is_hermitian(const Eigen::MatrixXcd& M, double eps = tol::structural);
void require_hermitian(const Eigen::MatrixXcd& M, double eps = tol::structural);

}  // namespace sctl
