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

#include "fsscomp/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fsscomp/errors.hpp"
#include "fsscomp/overlap.hpp"

namespace fsscomp {

void PolDensityMatrix::check_valid(double herm_tol, double trace_tol, double eig_tol) const {
    const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asym > herm_tol) {
        throw NumericalError("density matrix is not Hermitian (deviation " +
                             std::to_string(asym) + ")");
    }
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr - 1.0) > trace_tol) {
        std::ostringstream msg;
        msg << "density matrix trace " << tr << " differs from 1";
        throw NumericalError(msg.str());
    }
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigen solver failed on density matrix");
    }
    if (solver.eigenvalues().minCoeff() < -eig_tol) {
        throw NumericalError("density matrix has a negative eigenvalue");
    }
}

PolDensityMatrix polarization_density_matrix(const TwoPhotonState &state) {
    PolDensityMatrix out;
    for (const auto &a : state.branches) {
        for (const auto &b : state.branches) {
            out.rho(pair_index(a.pol1, a.pol2), pair_index(b.pol1, b.pol2)) += branch_overlap(a, b);
        }
    }
    // The closed form is Hermitian up to rounding; make it exact.
    out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
    out.check_valid();
    return out;
}

std::complex<double> coherence_closed_form(double omega_s, double gamma) {
    return 1.0 / std::complex<double>{1.0, omega_s / gamma};
}

double fidelity_phi_plus(const PolDensityMatrix &m, bool optimize_phase) {
    const double diag = 0.5 * (m(kHH, kHH).real() + m(kVV, kVV).real());
    if (optimize_phase) {
        return std::clamp(diag + std::abs(m(kHH, kVV)), 0.0, 1.0);
    }
    return std::clamp(diag + m(kHH, kVV).real(), 0.0, 1.0);
}

// Eigenvalues of rho below this fraction of the largest are round-off.
constexpr double kRankTolerance = 1e-14;

double concurrence(const PolDensityMatrix &m) {
    // sigma_y (x) sigma_y in the HH, HV, VH, VV basis.
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd herm = 0.5 * (m.rho + m.rho.adjoint());

    // rho = W W^dagger; the lambdas are the singular values of W^T (yy) W.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(herm);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigen solver failed in concurrence");
    }
    const Eigen::Vector4d eig = solver.eigenvalues();
    const double floor = kRankTolerance * std::max(eig.maxCoeff(), 0.0);
    Eigen::Vector4d root;
    for (int i = 0; i < 4; ++i) {
        root(i) = eig(i) > floor ? std::sqrt(eig(i)) : 0.0;
    }
    const Eigen::Matrix4cd w = solver.eigenvectors() * root.asDiagonal();
    const Eigen::Matrix4cd tau = w.transpose() * yy * w;
    const Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) {
        lambda[i] = svd.singularValues()(i);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

PolDensityMatrix rotate_local_phase(const PolDensityMatrix &m, int photon, double theta) {
    Eigen::Vector4cd phases;
    for (int i = 0; i < 4; ++i) {
        const int bit = photon == 1 ? (i >> 1) & 1 : i & 1;
        phases(i) = bit ? std::polar(1.0, theta) : std::complex<double>{1.0, 0.0};
    }
    PolDensityMatrix out;
    out.rho = phases.asDiagonal() * m.rho * phases.conjugate().asDiagonal();
    return out;
}

}  // namespace fsscomp
