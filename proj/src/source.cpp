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

#include "fsscomp/source.hpp"

#include <cmath>
#include <sstream>

#include "fsscomp/errors.hpp"
#include "fsscomp/overlap.hpp"
#include "fsscomp/units.hpp"

namespace fsscomp {

double DotParams::omega_s() const { return wavenumber_to_angular_frequency(k_s); }

double DotParams::coherence_length() const { return kConstants.c / gamma; }

void DotParams::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidArgument("dot: decay rate gamma must be positive");
    }
    if (!(k_h1 > 0.0) || !(k_h2 > 0.0) || !std::isfinite(k_h1) || !std::isfinite(k_h2)) {
        throw InvalidArgument("dot: photon wavenumbers must be positive");
    }
    if (!(k_s >= 0.0) || !std::isfinite(k_s)) {
        throw InvalidArgument(
            "dot: fine-structure splitting must be >= 0 (swap the H/V labels for a negative "
            "splitting)");
    }
}

std::vector<std::string> DotParams::warnings() const {
    std::vector<std::string> out;
    if (k_s > 1e-3 * k_h1) {
        std::ostringstream msg;
        msg << "dot: k_S / k_H1 = " << k_s / k_h1 << " exceeds 1e-3";
        out.push_back(msg.str());
    }
    return out;
}

DotParams DotParams::from_energies(double photon1_ev, double photon2_ev, double gamma,
                                   double fss_ev) {
    DotParams dot{gamma, energy_to_wavenumber(photon1_ev), energy_to_wavenumber(photon2_ev),
                  energy_to_wavenumber(fss_ev)};
    dot.validate();
    return dot;
}

DotParams DotParams::defaults() { return from_energies(1.3980, 1.4000, 1e9, kMicroElectronVolt); }

std::complex<double> TwoPhotonBranch::value(double x1, double x2) const {
    if (!wedge.contains(x1, x2)) {
        return {0.0, 0.0};
    }
    const std::complex<double> exponent{env1 * x1 + env2 * x2,
                                        phase0 + kappa1 * x1 + kappa2 * x2};
    return amp * std::exp(exponent);
}

void TwoPhotonBranch::check_integrable() const {
    if (!(env1 > 0.0) || !(env2 > 0.0) || !(wedge.s1 > 0.0) || !(wedge.s2 > 0.0)) {
        throw InvalidArgument("branch is not square integrable over its wedge");
    }
}

std::complex<double> spectral_amplitude(double omega1, double omega2, Pol path,
                                        const DotParams &dot) {
    const double gamma = dot.gamma;
    const double omega0 = wavenumber_to_angular_frequency(dot.k_0());
    const double omega_exciton =
        wavenumber_to_angular_frequency(path == Pol::H ? dot.k_h2 : dot.k_v2());
    using cplx = std::complex<double>;
    const double prefactor = std::sqrt(2.0) * gamma / (2.0 * kPi);
    // Split the detunings to keep the large carrier frequencies from cancelling late.
    const double pair_detuning = (omega1 - omega0) + omega2;
    return prefactor / (cplx{pair_detuning, gamma} * cplx{omega2 - omega_exciton, 0.5 * gamma});
}

namespace {

TwoPhotonState make_pair(const DotParams &dot, Pol first_pol1, Pol first_pol2, Pol second_pol1,
                         Pol second_pol2) {
    dot.validate();
    const double envelope = dot.gamma / (2.0 * kConstants.c);
    const double amplitude = dot.gamma / kConstants.c;
    TwoPhotonBranch first{first_pol1, first_pol2, {amplitude, 0.0}, envelope, envelope, 0.0,
                          dot.k_h1,   dot.k_h2,   Wedge{}};
    TwoPhotonBranch second{second_pol1, second_pol2, {amplitude, 0.0}, envelope, envelope, 0.0,
                           dot.k_v1(),  dot.k_v2(),  Wedge{}};
    TwoPhotonState state{{first, second}};
    const double norm = state_norm(state);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw NumericalError("initial state norm deviates from 1: " + std::to_string(norm));
    }
    return state;
}

}  // namespace

TwoPhotonState initial_state(const DotParams &dot) {
    return make_pair(dot, Pol::H, Pol::H, Pol::V, Pol::V);
}

TwoPhotonState initial_state_flipped(const DotParams &dot) {
    return make_pair(dot, Pol::V, Pol::H, Pol::H, Pol::V);
}

TwoPhotonState flip_photon(const TwoPhotonState &state, int photon) {
    if (photon != 1 && photon != 2) {
        throw InvalidArgument("photon index must be 1 or 2");
    }
    TwoPhotonState out = state;
    for (auto &branch : out.branches) {
        Pol &p = photon == 1 ? branch.pol1 : branch.pol2;
        p = flipped(p);
    }
    return out;
}

}  // namespace fsscomp
