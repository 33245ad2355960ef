// Copyright 2026 The qdistill developers.
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

#include "qdistill/states.hpp"

namespace qdistill {

// Open-system evolution of the two qubits: each one couples to its own bath
// with damping rate gamma and mean thermal photon number nbar. nbar = 0 is
// the vacuum. The lowering operator takes the excited |+> to the ground |->,
// so the vacuum steady state is |--><--|.

struct BathParams {
  double gamma = 1.0;  // decay rate, > 0
  double nbar = 0.0;   // mean thermal photon number, >= 0
};

/// The three real functions that parametrize the thermally evolved singlet
/// (see thermal_solution). Stored against dimensionless time tau = gamma*t.
/// At tau = 0 they are (a, c, d) = (-1, -1, 0); for nbar = 0 they reduce to
/// a = -exp(-tau), c = 1 - 2 exp(-tau), d = exp(-tau) - 1.
struct ThermalCoeffs {
  double a = 0.0;
  double c = 0.0;
  double d = 0.0;
  double tau = 0.0;
};

/// Singlet evolved under vacuum damping:
///   rho(t) = (1 - e^{-gamma t}) |--><--| + e^{-gamma t} |Phi-><Phi-|.
/// Its concurrence is e^{-gamma t}.
DensityMatrix vacuum_solution(double t, double gamma);

ThermalCoeffs thermal_coeffs(double t, const BathParams& bath);

/// Singlet evolved under two thermal baths, in closed form:
///   diag( (1+c)/4 + d/2, (1-c)/4, (1-c)/4, (1+c)/4 - d/2 )
/// with the middle coherence a/2. Reduces to vacuum_solution at nbar = 0.
/// A PSD failure here means the coefficient formulas were transcribed wrong,
/// so it raises std::runtime_error rather than an input-validation error.
DensityMatrix thermal_solution(double t, const BathParams& bath);

/// The closed-form concurrence shortcut max{0, -a - (1/4) sqrt((1+c)^2-4d^2)}
/// for the thermally evolved singlet. Kept verbatim as an audit value: the
/// sqrt prefactor disagrees with the X-state concurrence of the actual matrix
/// (which carries 1/2), and `audit` reports the divergence. At nbar = 0 the
/// sqrt vanishes identically and both agree at e^{-tau}. Not used as the
/// library's concurrence anywhere; Wootters on the matrix is authoritative.
double closed_form_c1(double t, const BathParams& bath);

/// Right-hand side of the master equation
///   drho/dt = gamma/2 sum_k [ (n+1)(2 s_k rho s_k+ - s_k+ s_k rho - rho s_k+ s_k)
///                           +  n  (2 s_k+ rho s_k - s_k s_k+ rho - rho s_k s_k+) ]
/// over k in {A, B}. The result is traceless and Hermitian.
Matrix4 lindblad_rhs(const DensityMatrix& rho, const BathParams& bath);

/// Step size giving ~1e-10 local error: 1e-4 / (gamma (1 + 2 nbar)).
double default_rk4_dt(const BathParams& bath);

/// Classical fixed-step RK4 on the matrix ODE, used as the independent
/// numerical check of the closed-form solutions. Trace, Hermiticity and
/// positivity are monitored every 100 steps; the final state is symmetrized
/// ((rho + rho^dag)/2) and revalidated. Raises std::runtime_error with a
/// smaller-dt hint when the trajectory degrades.
DensityMatrix integrate_rk4(const DensityMatrix& rho0, const BathParams& bath,
                            double t_end, double dt);

/// Closed-form description of one distillation round on two thermal copies,
/// kept verbatim for the audit report. p1..p4 are the eigenvalues of the
/// thermal state,
///   p1 = (1+c)/4 + d/2   (|++>)      p2 = (1+c)/4 - d/2   (|-->)
///   p3 = (1-c)/4 + a/2   (Phi+)      p4 = (1-c)/4 - a/2   (Phi-),
/// p = 2 p1 p2 + (p3-p4)^2/2 is the shortcut success probability and
/// c2 = (p3-p4)^2/(2p) - p1 p2 / p the shortcut distilled concurrence.
/// Exact simulation gives 2 p1 p2 + (p3+p4)^2/2 for the success probability
/// and a doubled p1 p2 term in the concurrence; the two coincide only where
/// p3 = 0 (nbar = 0, or tau = 0). run_protocol is authoritative and `audit`
/// quantifies the gap.
struct DistilledClosedForms {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0, p4 = 0.0;
  double p = 0.0;
  double c2 = 0.0;
};

DistilledClosedForms closed_form_distilled(double t, const BathParams& bath);

}  // namespace qdistill
