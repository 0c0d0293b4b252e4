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

#ifndef FSSCOMP_RUNNER_HPP
#define FSSCOMP_RUNNER_HPP

// Run configuration, scenario execution and CSV rendering. Units in the
// configuration are the convenient ones named by each key's suffix; they are
// converted to SI when the physics configs are built.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsscomp/schemes.hpp"

namespace fsscomp {

inline constexpr const char *kVersion = "1.0.0";

struct DotSpec {
    double photon1_energy_ev = 1.3980;
    double photon2_energy_ev = 1.4000;
    double gamma_per_s = 1e9;
    double fss_uev = 1.0;
    bool operator==(const DotSpec &) const = default;
};

struct CellSpec {
    enum class Form { Datasheet, Direct };
    Form form = Form::Datasheet;
    // datasheet form
    double alpha_rad_per_v = 0.052;
    double wavelength_nm = 830.0;
    double n0 = kDefaultRefractiveIndex;
    // both forms
    double thickness_m = 0.02;
    // direct form
    double eta_per_v = 0.0;
    double v0_m_per_s = 0.0;
    bool operator==(const CellSpec &) const = default;
};

struct SchemeSpec {
    int id = 1;
    double L1_m = 0.5;
    double L2_m = 0.5;
    double a1_v = 0.0;
    double a2_v = 0.0;
    double delta_t_ns = 0.0;
    double delta_l1_mm = 0.0;
    double delta_l2_mm = 0.0;
    double b1_scale = 1.0;
    double b2_scale = 1.0;
    double support_coherence_lengths = 1.0;
    bool operator==(const SchemeSpec &) const = default;
};

struct SweepSpec {
    std::string parameter;
    double from = 0.0;
    double to = 0.0;
    int steps = 2;
    bool log_spacing = false;
    bool operator==(const SweepSpec &) const = default;
};

struct OutputSpec {
    std::string path;
    std::string format = "csv";
    bool operator==(const OutputSpec &) const = default;
};

struct FeasibilitySpec {
    double ramp_duration_ns = 5.0;
    int series_cells = 1;
    bool operator==(const FeasibilitySpec &) const = default;
};

struct OracleSpec {
    int grid_points = 1 << 14;
    int dm_grid_points = 2048;
    bool operator==(const OracleSpec &) const = default;
};

struct RunConfig {
    DotSpec dot;
    CellSpec cell;
    std::optional<CellSpec> cell2;
    SchemeSpec scheme;
    std::optional<SweepSpec> sweep;
    OutputSpec output;
    FeasibilitySpec feasibility;
    OracleSpec oracle;
    bool operator==(const RunConfig &) const = default;
};

/// Sweepable parameter names.
const std::vector<std::string> &sweep_parameters();

/// Strict JSON parse: unknown keys, wrong types and out-of-range values throw ConfigError.
RunConfig parse_config(std::string_view json_text);
/// Fully resolved configuration as pretty-printed JSON; parse_config inverts it.
std::string config_to_json(const RunConfig &cfg);
/// Copy of cfg with one sweep parameter set (in its configuration unit).
RunConfig with_parameter(const RunConfig &cfg, const std::string &parameter, double value);
/// Sweep sample points.
std::vector<double> sweep_values(const SweepSpec &sweep);

DotParams build_dot(const RunConfig &cfg);
CellParams build_cell(const CellSpec &spec);
Scheme1Config build_scheme1(const RunConfig &cfg);
Scheme2Config build_scheme2(const RunConfig &cfg);

struct ResultRow {
    std::string parameter = "none";
    double value = 0.0;
    double fidelity_raw = 0.0;
    double fidelity_opt = 0.0;
    double concurrence = 0.0;
    double constant_phase_rad = 0.0;
    double residual_kappa1 = 0.0;
    double residual_kappa2 = 0.0;
    double epsilon_amp = 0.0;
    double b1_v_per_ns = 0.0;
    double b2_v_per_ns = 0.0;
    double max_voltage_v = 0.0;
    std::vector<std::string> warnings;
};

/// Runs the configured scheme once (no sweep).
ResultRow run_simulation(const RunConfig &cfg);
/// One row per sweep step, in sweep order, computed on up to `jobs` threads.
std::vector<ResultRow> run_sweep(const RunConfig &cfg, int jobs);

/// CSV with a '#' header carrying the tool version and resolved configuration.
std::string render_csv(const RunConfig &cfg, const std::string &command,
                       const std::vector<ResultRow> &rows);

struct FeasibilityReport {
    double fss_angular_frequency = 0.0;  // rad/s
    double fss_frequency_mhz = 0.0;      // omega_s / 2 pi
    double delay_coefficient = 0.0;      // eta s / v0, s/V
    double b1_v_per_ns = 0.0;
    double b2_v_per_ns = 0.0;
    double scheme2_b_v_per_ns = 0.0;
    double ramp_duration_ns = 0.0;
    double max_voltage_v = 0.0;
    int series_cells = 1;
    double per_cell_rate_v_per_ns = 0.0;
    double per_cell_max_voltage_v = 0.0;
};

FeasibilityReport run_feasibility(const RunConfig &cfg);

struct OracleCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct OracleCheckReport {
    std::vector<OracleCheck> checks;
    bool passed() const;
};

/// Closed-form vs brute-force comparisons for the configured scheme.
OracleCheckReport run_oracle_check(const RunConfig &cfg, double scale_corruption = 1.0);

}  // namespace fsscomp

#endif
