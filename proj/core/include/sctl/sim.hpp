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

#include "sctl/reduced.hpp"
#include "sctl/types.hpp"

#include <functional>

namespace sctl {

struct SimulationResult {
  Eigen::VectorXd times;
  std::vector<Eigen::VectorXcd> states;
  std::vector<Eigen::VectorXd> singular_values;  // Weyl-projected track

  const Eigen::VectorXcd& final_state() const { return states.back(); }
  const Eigen::VectorXd& final_singular_values() const {
    return singular_values.back();
  }
};

/// Piecewise-constant Hamiltonian schedule on [0, T); gaps evolve freely
/// (H = 0).  Entries must be Hermitian.
struct HamiltonianSchedule {
  struct Segment {
    double t_start = 0.0;
    double t_end = 0.0;
    Eigen::MatrixXcd H;
  };
  std::vector<Segment> segments;

  static HamiltonianSchedule constant(const Eigen::MatrixXcd& H, double T) {
    return {{Segment{0.0, T, H}}};
  }
};

/// Unitary evolution of the bipartite state under a piecewise-constant
/// schedule, using exact matrix-exponential steps (one Hermitian
/// eigendecomposition per segment).  Records the state and Weyl-projected
/// singular values on the sampling grid.
SimulationResult schrodinger_integrate(const BipartiteState& psi0,
                                       const HamiltonianSchedule& schedule,
                                       double T, double dt,
                                       WeylChamber chamber = WeylChamber::zxy);

/// Evolution under H(t) = base + coeff(t) * direction using a 4th-order
/// commutator-free Magnus scheme (two exponentials per step at the
/// Gauss-Legendre nodes).
SimulationResult schrodinger_integrate_timedep(
    const BipartiteState& psi0, const Eigen::MatrixXcd& base,
    const Eigen::MatrixXcd& direction, const std::function<double(double)>& coeff,
    double T, double dt = 1e-3, WeylChamber chamber = WeylChamber::zxy);

/// Time at which the great-circle solution from |33> reaches the maximally
/// entangled state: sqrt(2) * arccos(1/sqrt(3)).
double qutrit_time_star();

/// The rotated-frame coupling factors of the equidistant-qutrit protocol:
/// V^*AV = [[0,0,1],[0,0,1],[1,1,0]]/sqrt(2) and
/// W^*BW = [[0,0,-i],[0,0,-i],[i,i,0]]/sqrt(2).
const Eigen::Matrix3cd& qutrit_coupling_a();
const Eigen::Matrix3cd& qutrit_coupling_b();

/// Embedded Pauli-y on levels (1, 2) of a qutrit.
const Eigen::Matrix3cd& qutrit_py();

/// A local unitary U = V (x) W turning a rank-one equidistant coupling
/// A (x) B (spectra scaled to (1, 0, -1)) into the protocol frame above.
LocalUnitary qutrit_protocol_frame(const Eigen::Matrix3cd& A,
                                   const Eigen::Matrix3cd& B);

enum class DetourMode { state_dependent, time_dependent, constant };

/// The detour protocol around the sigma_x = sigma_y degeneracy: evolves in
/// the rotated frame under a (x) b plus the local control
/// (c/(2 sqrt2 eps)) (P'_y (x) 1 + 1 (x) P'_y), where c is sigma_z for the
/// state-dependent mode, sqrt(1-eps^2) cos(t/sqrt2) for the time-dependent
/// mode, and 1 for the constant mode.  The state/time-dependent modes start
/// on the shifted circle; the constant mode starts at |33>.  T defaults to
/// qutrit_time_star().
SimulationResult epsilon_protocol(double eps, DetourMode mode, double T = -1.0,
                                  double dt = 1e-3);

/// Distance of the constant-mode final singular values from the maximally
/// entangled point: || sing(psi(T*)) - (1,1,1)/sqrt(3) ||_2.
double cost_C(double eps);

/// sqrt(3) C(1/(2 sqrt2 x)) (2 sqrt2 x - 1); nearly periodic in x.
double transformed_cost(double x);

struct EpsilonMinimaConstants {
  double x0 = 0.0048;
  double dx = 2.3252;
};

/// eps_k = 1 / (2 sqrt2 (x0 + k dx)); integer k >= 1 sits near local minima
/// of cost_C, half-integer k near local maxima.  Throws if the result lies
/// outside (0, 1).
double epsilon_minimum(double k, const EpsilonMinimaConstants& c = {});

/// Re-fits (x0, dx) from this implementation's own cost curve by locating
/// the local minima of transformed_cost on [x_lo, x_hi] with parabolic
/// refinement and fitting a line through their positions.
EpsilonMinimaConstants fit_epsilon_minima(double x_lo = 1.5, double x_hi = 16.0,
                                          int grid = 4000);

struct CostCurve {
  Eigen::VectorXd epsilons;
  Eigen::VectorXd costs;
  Eigen::VectorXd xs;           // 1/(2 sqrt2 eps)
  Eigen::VectorXd transformed;  // transformed_cost(x)
};

/// Log-spaced sweep of cost_C over [eps_min, eps_max]; deterministic, and
/// independent runs may be distributed over `jobs` threads.
CostCurve sweep_cost(double eps_min, double eps_max, int n, int jobs = 1);

struct TwoQubitProtocol {
  LocalUnitary achiever;       // U realizing the anti-diagonal form
  double omega_star = 0.0;     // s1 + s2
  double duration = 0.0;       // (pi/4) / omega_star
  double local_shift = 0.0;    // C'_zz; H_c = -local_shift * identity
};

/// Steps 1-2 of the two-qubit entangling sequence for a given coupling:
/// apply the speed-limit achiever, then evolve under H0 + H_c for
/// (pi/4)/(s1+s2).  Throws if s1 + s2 vanishes (entanglement not
/// controllable).
TwoQubitProtocol two_qubit_protocol(const CouplingHamiltonian& H0);
SimulationResult lift_two_qubit_protocol(const CouplingHamiltonian& H0,
                                         double dt = 1e-2);

}  // namespace sctl
