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

#include "fsscomp/schemes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fsscomp/errors.hpp"
#include "fsscomp/numerics.hpp"

namespace fsscomp {
namespace {

constexpr int kJitterNodes = 48;
// Ramps starting more than this many coherence times early trigger a warning.
constexpr double kCoverageBudget = 30.0;

void require_nonnegative(double value, const char *what) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw InvalidArgument(std::string(what) + " must be finite and >= 0");
    }
}

void require_correctable(const CellParams &cell, const char *which) {
    if (cell.eta == 0.0) {
        throw UncorrectableCell(std::string(which) +
                                " has eta == 0 and cannot shift the V frequency");
    }
}

// Start times (t1, t2) relative to the reference time for a realized mismatch t2 - t1.
std::pair<double, double> start_times(double mismatch) {
    const double t1 = -std::max(0.0, mismatch);
    return {t1, t1 + mismatch};
}

std::array<double, 3> branch_mismatch_at_vertices(const TwoPhotonState &state, double radius,
                                                  bool amplitude) {
    if (state.branches.size() != 2) {
        throw InvalidArgument("residual analysis needs a two-branch state");
    }
    const TwoPhotonBranch &a = state.branches[0];
    const TwoPhotonBranch &b = state.branches[1];
    const std::array<std::pair<double, double>, 3> vertices{
        {{0.0, 0.0}, {0.0, -radius}, {-radius, -radius}}};
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto [x1, x2] = vertices[i];
        if (amplitude) {
            const double log_ratio = std::log(std::abs(b.amp)) - std::log(std::abs(a.amp)) +
                                     (b.env1 - a.env1) * x1 + (b.env2 - a.env2) * x2;
            out[i] = std::abs(std::expm1(log_ratio));
        } else {
            out[i] = std::abs((b.kappa1 - a.kappa1) * x1 + (b.kappa2 - a.kappa2) * x2);
        }
    }
    return out;
}

void fill_residuals(CorrectionReport &report, double radius) {
    const TwoPhotonBranch &a = report.out_state.branches.at(0);
    const TwoPhotonBranch &b = report.out_state.branches.at(1);
    report.residual_kappa1 = b.kappa1 - a.kappa1;
    report.residual_kappa2 = b.kappa2 - a.kappa2;
    report.constant_phase_unwrapped = b.phase0 - a.phase0;
    report.constant_phase = numerics::wrap_phase(report.constant_phase_unwrapped);
    report.amp_ratio_epsilon = amplitude_ratio_epsilon(report.out_state, radius);
    report.max_residual_phase = max_residual_phase(report.out_state, radius);
}

void fill_figures_of_merit(CorrectionReport &report) {
    report.fidelity_raw = fidelity_phi_plus(report.rho, false);
    report.fidelity_opt = fidelity_phi_plus(report.rho, true);
    report.concurrence = concurrence(report.rho);
}

}  // namespace

void Scheme1Config::validate() const {
    dot.validate();
    make_cell(cell1.eta, cell1.thickness, cell1.v0);
    make_cell(cell2.eta, cell2.thickness, cell2.v0);
    require_nonnegative(lead_in1, "L1");
    require_nonnegative(lead_in2, "L2");
    if (!std::isfinite(delta_t) || !std::isfinite(offset1) || !std::isfinite(offset2) ||
        !std::isfinite(rate1_scale) || !std::isfinite(rate2_scale)) {
        throw InvalidArgument("scheme 1: offsets, delta_t and rate scales must be finite");
    }
    if (!(support_lengths > 0.0)) {
        throw InvalidArgument("support length must be positive");
    }
}

void Scheme2Config::validate() const {
    dot.validate();
    make_cell(cell.eta, cell.thickness, cell.v0);
    require_nonnegative(lead_in1, "L1");
    require_nonnegative(lead_in2, "L2");
    if (!std::isfinite(rate_scale)) {
        throw InvalidArgument("scheme 2: rate scale must be finite");
    }
    if (!(support_lengths > 0.0)) {
        throw InvalidArgument("support length must be positive");
    }
}

std::pair<double, double> scheme1_ramp_rates(const DotParams &dot, const CellParams &cell1,
                                             const CellParams &cell2) {
    require_correctable(cell1, "cell 1");
    require_correctable(cell2, "cell 2");
    const double b1 = std::log1p(dot.k_s / dot.k_h1) / cell1.delay_coefficient();
    const double b2 = std::log1p(-dot.k_s / dot.k_h2) / cell2.delay_coefficient();
    return {b1, b2};
}

RampProfile scheme1_ramp(const Scheme1Config &cfg, int photon, double rate, double mismatch) {
    const auto [t1, t2] = start_times(mismatch);
    const double start = photon == 1 ? t1 : t2;
    const double offset = photon == 1 ? cfg.offset1 : cfg.offset2;
    const double lead_in = photon == 1 ? cfg.lead_in1 : cfg.lead_in2;
    // A ramp started at `start` equals one started at the reference time with a = b (t0 - start).
    return RampProfile{offset - rate * start, rate, lead_in, start};
}

TwoPhotonState scheme1_output_state(const Scheme1Config &cfg, double rate1, double rate2,
                                    double mismatch) {
    TwoPhotonState state = initial_state(cfg.dot);
    state = apply_cell(state, cfg.cell1, scheme1_ramp(cfg, 1, rate1, mismatch), 1);
    state = apply_cell(state, cfg.cell2, scheme1_ramp(cfg, 2, rate2, mismatch), 2);
    return state;
}

CorrectionReport scheme1_run(const Scheme1Config &cfg) {
    cfg.validate();
    CorrectionReport report;
    report.warnings = cfg.dot.warnings();

    const double log1 = std::log1p(cfg.dot.k_s / cfg.dot.k_h1);
    const double log2 = std::log1p(-cfg.dot.k_s / cfg.dot.k_h2);
    if (cfg.cell1.eta == 0.0) {
        report.warnings.emplace_back("cell 1 is inert (eta == 0); no correction on photon 1");
    } else {
        report.rate1 = cfg.rate1_scale * log1 / cfg.cell1.delay_coefficient();
    }
    if (cfg.cell2.eta == 0.0) {
        report.warnings.emplace_back("cell 2 is inert (eta == 0); no correction on photon 2");
    } else {
        report.rate2 = cfg.rate2_scale * log2 / cfg.cell2.delay_coefficient();
    }

    const double budget = kCoverageBudget / cfg.dot.gamma;
    if (std::abs(cfg.delta_t) > budget) {
        std::ostringstream msg;
        msg << "ramp start difference " << cfg.delta_t << " s exceeds the train duration budget "
            << budget << " s";
        report.warnings.push_back(msg.str());
    }

    report.out_state = scheme1_output_state(cfg, report.rate1, report.rate2, cfg.delta_t);
    fill_residuals(report, cfg.support_lengths * cfg.dot.coherence_length());

    if (cfg.delta_t == 0.0) {
        report.rho = polarization_density_matrix(report.out_state);
    } else {
        const auto rule = numerics::gauss_hermite(kJitterNodes);
        const double spread = std::sqrt(2.0) * std::abs(cfg.delta_t);
        Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const TwoPhotonState realized =
                scheme1_output_state(cfg, report.rate1, report.rate2, spread * rule.nodes[i]);
            sum += rule.weights[i] / std::sqrt(kPi) * polarization_density_matrix(realized).rho;
        }
        report.rho.rho = 0.5 * (sum + sum.adjoint());
        report.rho.check_valid(1e-12, 1e-8, 1e-9);
    }
    fill_figures_of_merit(report);
    return report;
}

double scheme1_constant_phase_unwrapped(const Scheme1Config &cfg, double rate1, double rate2) {
    const double c = kConstants.c;
    const auto term = [&](const CellParams &cell, const RampProfile &ramp, double k_h) {
        if (ramp.rate == 0.0 || cell.eta == 0.0) {
            return k_h * walkoff(cell, ramp);
        }
        const double growth = std::expm1(cell.delay_coefficient() * ramp.rate);
        return k_h * (c / (cell.eta * ramp.rate) + c * ramp.offset / ramp.rate + ramp.lead_in) *
                   growth -
               k_h * c * cell.thickness / cell.v0;
    };
    return term(cfg.cell1, scheme1_ramp(cfg, 1, rate1, cfg.delta_t), cfg.dot.k_h1) +
           term(cfg.cell2, scheme1_ramp(cfg, 2, rate2, cfg.delta_t), cfg.dot.k_h2);
}

double scheme1_constant_phase(const Scheme1Config &cfg, double rate1, double rate2) {
    return numerics::wrap_phase(scheme1_constant_phase_unwrapped(cfg, rate1, rate2));
}

double amplitude_ratio_epsilon(const TwoPhotonState &state, double radius) {
    const auto v = branch_mismatch_at_vertices(state, radius, true);
    return *std::max_element(v.begin(), v.end());
}

double max_residual_phase(const TwoPhotonState &state, double radius) {
    const auto v = branch_mismatch_at_vertices(state, radius, false);
    return *std::max_element(v.begin(), v.end());
}

double path_fluctuation_phase(double delta_l, double k_h, const CellParams &cell, double rate) {
    return k_h * delta_l * std::expm1(cell.delay_coefficient() * rate);
}

double ramp_mismatch_phase(double delta_t, const DotParams &dot) {
    return kConstants.c * dot.k_s * delta_t;
}

double scheme2_ramp_rate(const DotParams &dot, const CellParams &cell) {
    require_correctable(cell, "cell");
    return -std::log1p(dot.k_s / dot.k_h1) / cell.delay_coefficient();
}

CorrectionReport scheme2_run(const Scheme2Config &cfg) {
    cfg.validate();
    CorrectionReport report;
    report.warnings = cfg.dot.warnings();
    double rate = 0.0;
    if (cfg.cell.eta == 0.0) {
        report.warnings.emplace_back("cell is inert (eta == 0); no correction applied");
    } else {
        rate = cfg.rate_scale * scheme2_ramp_rate(cfg.dot, cfg.cell);
    }
    report.rate1 = rate;
    report.rate2 = rate;

    TwoPhotonState state = initial_state_flipped(cfg.dot);
    state = apply_cell(state, cfg.cell, RampProfile{0.0, rate, cfg.lead_in1, 0.0}, 1);
    state = apply_cell(state, cfg.cell, RampProfile{0.0, rate, cfg.lead_in2, 0.0}, 2);
    report.out_state = std::move(state);
    fill_residuals(report, cfg.support_lengths * cfg.dot.coherence_length());

    // Undo the photon-1 flip so the target is again (|HH> + e^{i phi}|VV>)/sqrt(2).
    report.rho = polarization_density_matrix(flip_photon(report.out_state, 1));
    fill_figures_of_merit(report);
    return report;
}

double required_max_voltage(double rate, double duration) {
    if (!(duration > 0.0)) {
        throw InvalidArgument("ramp duration must be positive");
    }
    return std::abs(rate) * duration;
}

double series_cell_rate(double rate, int cells) {
    if (cells < 1) {
        throw InvalidArgument("series chain needs at least one cell");
    }
    return rate / cells;
}

}  // namespace fsscomp
