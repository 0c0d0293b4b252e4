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

#include "fsscomp/units.hpp"

#include <cmath>
#include <string>

#include "fsscomp/errors.hpp"

namespace fsscomp {

double energy_to_angular_frequency(double energy_ev) {
    return energy_ev * kConstants.q_e / kConstants.hbar;
}

double angular_frequency_to_wavenumber(double omega) { return omega / kConstants.c; }

double wavenumber_to_angular_frequency(double k) { return k * kConstants.c; }

double energy_to_wavenumber(double energy_ev) {
    return angular_frequency_to_wavenumber(energy_to_angular_frequency(energy_ev));
}

double CellParams::phase_sensitivity(double wavelength) const {
    return 2.0 * kPi * refractive_index() * eta * thickness / wavelength;
}

CellParams make_cell(double eta, double thickness, double v0) {
    if (!std::isfinite(eta)) {
        throw InvalidArgument("cell: eta must be finite");
    }
    if (!(thickness > 0.0) || !std::isfinite(thickness)) {
        throw InvalidArgument("cell: thickness must be positive, got " + std::to_string(thickness));
    }
    if (!(v0 > 0.0) || v0 > kConstants.c) {
        throw InvalidArgument("cell: v0 must lie in (0, c], got " + std::to_string(v0));
    }
    return CellParams{eta, thickness, v0};
}

CellParams cell_from_datasheet(double alpha, double wavelength, double n0, double thickness) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("datasheet: alpha must be finite and >= 0");
    }
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw InvalidArgument("datasheet: wavelength must be positive");
    }
    if (!(n0 >= 1.0) || !std::isfinite(n0)) {
        throw InvalidArgument("datasheet: refractive index n0 must be >= 1");
    }
    if (!(thickness > 0.0) || !std::isfinite(thickness)) {
        throw InvalidArgument("datasheet: thickness must be positive");
    }
    const double eta = alpha * wavelength / (2.0 * kPi * n0 * thickness);
    return make_cell(eta, thickness, kConstants.c / n0);
}

}  // namespace fsscomp
