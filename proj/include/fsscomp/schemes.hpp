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

#ifndef FSSCOMP_SCHEMES_HPP
#define FSSCOMP_SCHEMES_HPP

#include <string>
#include <utility>
#include <vector>

#include "fsscomp/eom.hpp"
#include "fsscomp/metrics.hpp"
#include "fsscomp/source.hpp"
#include "fsscomp/units.hpp"

namespace fsscomp {

/// Two cells, one per photon, driven with opposite ramps.
struct Scheme1Config {
    DotParams dot = DotParams::defaults();
    CellParams cell1;
    CellParams cell2;
    double lead_in1 = 0.5;  // L1, m
    double lead_in2 = 0.5;  // L2, m
    double offset1 = 0.0;   // a1, V
    double offset2 = 0.0;   // a2, V
    // Ramp-start difference t2 - t1, s. The output state carries exactly this
    // offset; the density matrix averages over a zero-mean Gaussian spread of
    // start differences with this RMS.
    double delta_t = 0.0;
    double rate1_scale = 1.0;
    double rate2_scale = 1.0;
    // Radius of the region (in units of c / gamma) used for residual maxima.
    double support_lengths = 1.0;

    void validate() const;
};

/// Photon 1 is polarization-flipped; both photons cross one cell under V(t) = b t.
struct Scheme2Config {
    DotParams dot = DotParams::defaults();
    CellParams cell;
    double lead_in1 = 0.5;
    double lead_in2 = 0.5;
    double rate_scale = 1.0;
    double support_lengths = 1.0;

    void validate() const;
};

struct CorrectionReport {
    TwoPhotonState out_state;
    double rate1 = 0.0;  // V/s
    double rate2 = 0.0;  // V/s
    // Position-dependent phase coefficients of the second branch relative to the first, rad/m.
    double residual_kappa1 = 0.0;
    double residual_kappa2 = 0.0;
    // Relative branch phase at the origin, wrapped to (-pi, pi] and unwrapped.
    double constant_phase = 0.0;
    double constant_phase_unwrapped = 0.0;
    // max |(|branch2| / |branch1|) - 1| over the support.
    double amp_ratio_epsilon = 0.0;
    // max |residual_kappa1 x1 + residual_kappa2 x2| over the support, rad.
    double max_residual_phase = 0.0;
    PolDensityMatrix rho;
    double fidelity_raw = 0.0;
    double fidelity_opt = 0.0;
    double concurrence = 0.0;
    std::vector<std::string> warnings;
};

/// Ramp rates (b1, b2) that map k_V1 -> k_H1 and k_V2 -> k_H2.
/// Throws UncorrectableCell if either cell has eta == 0.
std::pair<double, double> scheme1_ramp_rates(const DotParams &dot, const CellParams &cell1,
                                             const CellParams &cell2);

/// Ramp seen by photon `photon` for a realized start difference `mismatch`
/// (t2 - t1). Both ramps start at or before the reference time.
RampProfile scheme1_ramp(const Scheme1Config &cfg, int photon, double rate, double mismatch);

/// Output state of scheme 1 for the given rates and realized start difference.
TwoPhotonState scheme1_output_state(const Scheme1Config &cfg, double rate1, double rate2,
                                    double mismatch);

CorrectionReport scheme1_run(const Scheme1Config &cfg);

/// Relative HH/VV phase left by exact rates, evaluated from the closed-form
/// expression in (a_i, b_i, L_i); a_i includes the start-time offsets of cfg.delta_t.
double scheme1_constant_phase_unwrapped(const Scheme1Config &cfg, double rate1, double rate2);
double scheme1_constant_phase(const Scheme1Config &cfg, double rate1, double rate2);

/// max over the ordered-emission triangle 0 >= x1 >= x2 >= -radius of
/// |(|b2(x)| / |b1(x)|) - 1| for a two-branch state.
double amplitude_ratio_epsilon(const TwoPhotonState &state, double radius);
/// Same region, max |dk1 x1 + dk2 x2| with dk the branch kappa difference.
double max_residual_phase(const TwoPhotonState &state, double radius);

/// k_H dl (exp(eta b s / v0) - 1).
double path_fluctuation_phase(double delta_l, double k_h, const CellParams &cell, double rate);

/// c k_S dt.
double ramp_mismatch_phase(double delta_t, const DotParams &dot);

/// b = (v0 / eta s) ln(k_H1 / k_V1). Throws UncorrectableCell if eta == 0.
double scheme2_ramp_rate(const DotParams &dot, const CellParams &cell);

CorrectionReport scheme2_run(const Scheme2Config &cfg);

/// |b| * duration. Throws InvalidArgument unless duration > 0.
double required_max_voltage(double rate, double duration);

/// Per-cell rate when `cells` identical cells in series share one frequency shift.
double series_cell_rate(double rate, int cells);

}  // namespace fsscomp

#endif
