// Copyright 2026 The fsscomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FSSCOMP_METRICS_HPP
#define FSSCOMP_METRICS_HPP

#include <complex>

#include <Eigen/Dense>

#include "fsscomp/source.hpp"

namespace fsscomp {

/// Index of a polarization pair in the (HH, HV, VH, VV) basis.
inline int pair_index(Pol p1, Pol p2) { return 2 * static_cast<int>(p1) + static_cast<int>(p2); }

inline constexpr int kHH = 0;
inline constexpr int kHV = 1;
inline constexpr int kVH = 2;
inline constexpr int kVV = 3;

/// Two-photon polarization density matrix after tracing out positions.
struct PolDensityMatrix {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

    std::complex<double> operator()(int i, int j) const { return rho(i, j); }

    /// Throws NumericalError unless Hermitian within herm_tol, unit trace
    /// within trace_tol and eigenvalues >= -eig_tol.
    void check_valid(double herm_tol = 1e-12, double trace_tol = 1e-9,
                     double eig_tol = 1e-10) const;
};

/// rho_ij = sum over branches with pair i, j of  integral psi_i conj(psi_j),
/// evaluated with the closed-form wedge integrals.
PolDensityMatrix polarization_density_matrix(const TwoPhotonState &state);

/// Normalized HH-VV coherence of the uncorrected cascade: 1 / (1 + i omega_s / gamma).
std::complex<double> coherence_closed_form(double omega_s, double gamma);

/// Overlap with (|HH> + |VV>)/sqrt(2); with optimize_phase, the maximum over
/// (|HH> + e^{i phi}|VV>)/sqrt(2).
double fidelity_phi_plus(const PolDensityMatrix &rho, bool optimize_phase);

/// Wootters concurrence.
double concurrence(const PolDensityMatrix &rho);

/// Applies the same local unitary diag(1, e^{i theta}) on photon 1 and/or 2.
PolDensityMatrix rotate_local_phase(const PolDensityMatrix &rho, int photon, double theta);

}  // namespace fsscomp

#endif
