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

#ifndef FSSCOMP_UNITS_HPP
#define FSSCOMP_UNITS_HPP

// Physical constants and unit conversions. Everything inside the library is
// SI (m, s, rad, V); eV, nm, ns and V/ns appear only at the I/O boundary.

namespace fsscomp {

struct PhysicalConstants {
    double c = 2.99792458e8;        // m/s
    double hbar = 1.054571817e-34;  // J s
    double q_e = 1.602176634e-19;   // C
};

inline constexpr PhysicalConstants kConstants{};
inline constexpr double kSpeedOfLight = kConstants.c;
inline constexpr double kPi = 3.14159265358979323846;

/// Refractive index assumed when a datasheet does not give one.
inline constexpr double kDefaultRefractiveIndex = 1.5;

inline constexpr double kMicroElectronVolt = 1e-6;  // eV
inline constexpr double kNanosecond = 1e-9;         // s
inline constexpr double kNanometer = 1e-9;          // m
inline constexpr double kMillimeter = 1e-3;         // m
inline constexpr double kVoltPerNanosecond = 1e9;   // V/s

/// E * q_e / hbar.
double energy_to_angular_frequency(double energy_ev);
/// omega / c (vacuum).
double angular_frequency_to_wavenumber(double omega);
double wavenumber_to_angular_frequency(double k);
/// Vacuum wavenumber of a photon of the given energy.
double energy_to_wavenumber(double energy_ev);

/// Pockels cell as seen by the vertically polarized mode: v(t) = v0 / (1 + eta V(t)).
struct CellParams {
    double eta = 0.0;        // 1/V
    double thickness = 0.0;  // m
    double v0 = 0.0;         // m/s

    /// eta * s / v0, in s/V. The only combination that enters the transforms.
    double delay_coefficient() const { return eta * thickness / v0; }
    double refractive_index() const { return kConstants.c / v0; }
    /// Phase sensitivity alpha (rad/V) at the given wavelength, inverse of cell_from_datasheet.
    double phase_sensitivity(double wavelength) const;

    bool operator==(const CellParams &) const = default;
};

/// Validates and builds a cell from its model parameters.
/// Throws InvalidArgument unless s > 0, 0 < v0 <= c and eta is finite.
CellParams make_cell(double eta, double thickness, double v0);

/// Builds a cell from a datasheet phase sensitivity using n0 eta s = alpha lambda / (2 pi)
/// and v0 = c / n0. Throws InvalidArgument on alpha < 0, lambda <= 0, n0 < 1 or s <= 0.
CellParams cell_from_datasheet(double alpha, double wavelength, double n0, double thickness);

}  // namespace fsscomp

#endif
