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

#include <cmath>

#include "fsscomp/errors.hpp"
#include "fsscomp/numerics.hpp"
#include "fsscomp/overlap.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace fsscomp;
using fsscomp::testing::default_cell;
using fsscomp::testing::default_scheme1;
using fsscomp::testing::default_scheme2;

TEST(schemes, scheme1_rates) {
    const DotParams dot = DotParams::defaults();
    const CellParams cell = default_cell();
    const auto [b1, b2] = scheme1_ramp_rates(dot, cell, cell);
    const double tau = cell.delay_coefficient();
    EXPECT_NEAR(b1, std::log(dot.k_v1() / dot.k_h1) / tau, 1e-9 * b1);
    EXPECT_NEAR(b2, std::log(dot.k_v2() / dot.k_h2) / tau, 1e-9 * std::abs(b2));
    EXPECT_NEAR(b1 / kVoltPerNanosecond, 31.22, 0.01);
    EXPECT_NEAR(b2 / kVoltPerNanosecond, -31.17, 0.01);
    EXPECT_THROW(scheme1_ramp_rates(dot, make_cell(0.0, 0.02, 2e8), cell), UncorrectableCell);
    EXPECT_THROW(scheme1_ramp_rates(dot, cell, make_cell(0.0, 0.02, 2e8)), UncorrectableCell);
}

TEST(schemes, scheme1_restores_state) {
    const Scheme1Config cfg = default_scheme1();
    const CorrectionReport rep = scheme1_run(cfg);
    const double k_h1 = cfg.dot.k_h1;
    EXPECT_LT(std::abs(rep.residual_kappa1), 1e-12 * k_h1);
    EXPECT_LT(std::abs(rep.residual_kappa2), 1e-12 * k_h1);
    EXPECT_GE(rep.fidelity_opt, 1 - 1e-5);
    EXPECT_GE(rep.amp_ratio_epsilon, 1e-8);
    EXPECT_LE(rep.amp_ratio_epsilon, 1e-5);
    EXPECT_NEAR(rep.amp_ratio_epsilon, 3.57e-7, 1e-9);
    EXPECT_NEAR(rep.concurrence, 1.0, 1e-5);
    EXPECT_NEAR(state_norm(rep.out_state), 1.0, 1e-9);
    EXPECT_TRUE(rep.warnings.empty());
}

TEST(schemes, scheme1_constant_phase) {
    Scheme1Config cfg = default_scheme1();
    cfg.offset1 = 12.0;
    cfg.offset2 = -3.0;
    cfg.lead_in2 = 0.8;
    const CorrectionReport rep = scheme1_run(cfg);
    EXPECT_NEAR(rep.constant_phase_unwrapped,
                scheme1_constant_phase_unwrapped(cfg, rep.rate1, rep.rate2), 1e-6);
    EXPECT_NEAR(rep.constant_phase, numerics::wrap_phase(rep.constant_phase_unwrapped), 1e-9);
    EXPECT_NEAR(rep.fidelity_opt, 1.0, 1e-5);
}

TEST(schemes, scheme1_wider_support) {
    Scheme1Config cfg = default_scheme1();
    cfg.support_lengths = 30.0;
    const CorrectionReport rep = scheme1_run(cfg);
    EXPECT_NEAR(rep.amp_ratio_epsilon, 1.07e-5, 1e-7);
}

TEST(schemes, inert_cells) {
    Scheme1Config cfg = default_scheme1();
    cfg.cell1 = make_cell(0.0, 0.02, 2e8);
    cfg.cell2 = cfg.cell1;
    const CorrectionReport rep = scheme1_run(cfg);
    EXPECT_EQ(rep.rate1, 0.0);
    EXPECT_EQ(rep.rate2, 0.0);
    EXPECT_EQ(rep.warnings.size(), 2u);
    const double ratio = cfg.dot.omega_s() / cfg.dot.gamma;
    EXPECT_NEAR(rep.concurrence, 1 / std::sqrt(1 + ratio * ratio), 1e-9);
}

TEST(schemes, rate_detuning_degrades) {
    Scheme1Config cfg = default_scheme1();
    const double base = scheme1_run(cfg).fidelity_opt;
    cfg.rate1_scale = 1.5;
    const double off = scheme1_run(cfg).fidelity_opt;
    EXPECT_LT(off, base);
    cfg.rate1_scale = 0.0;
    cfg.rate2_scale = 0.0;
    const double ratio = cfg.dot.omega_s() / cfg.dot.gamma;
    EXPECT_NEAR(scheme1_run(cfg).concurrence, 1 / std::sqrt(1 + ratio * ratio), 1e-9);
}

TEST(schemes, path_fluctuation) {
    const Scheme1Config cfg = default_scheme1();
    const CorrectionReport base = scheme1_run(cfg);
    const double formula =
        path_fluctuation_phase(1e-3, cfg.dot.k_h1, cfg.cell1, base.rate1);
    EXPECT_GE(std::abs(formula), 1e-3);
    EXPECT_LE(std::abs(formula), 1e-2);
    EXPECT_NEAR(formula, cfg.dot.k_s * 1e-3, 1e-12);
    Scheme1Config shifted = cfg;
    shifted.lead_in1 += 1e-3;
    const double pipeline =
        scheme1_run(shifted).constant_phase_unwrapped - base.constant_phase_unwrapped;
    EXPECT_NEAR(pipeline, formula, 1e-9);
}

TEST(schemes, ramp_mismatch) {
    const Scheme1Config cfg = default_scheme1();
    const double base = scheme1_run(cfg).constant_phase_unwrapped;
    for (double dt : {1e-12, 1e-11, 1e-10, 1e-9}) {
        Scheme1Config shifted = cfg;
        shifted.delta_t = dt;
        const CorrectionReport rep = scheme1_run(shifted);
        const double formula = ramp_mismatch_phase(dt, cfg.dot);
        EXPECT_NEAR(formula, cfg.dot.omega_s() * dt, 1e-12 * formula);
        EXPECT_NEAR(std::abs(rep.constant_phase_unwrapped - base), formula, 1e-2 * formula) << dt;
    }
}

TEST(schemes, ramp_mismatch_collapse) {
    Scheme1Config cfg = default_scheme1();
    cfg.dot = DotParams::from_energies(1.398, 1.4, 1e9,
                                       2 * kPi * 1e9 * kConstants.hbar / kConstants.q_e);
    cfg.delta_t = 1e-9;
    const CorrectionReport rep = scheme1_run(cfg);
    EXPECT_LE(rep.fidelity_opt, 0.6);
    EXPECT_NO_THROW(rep.rho.check_valid(1e-12, 1e-8, 1e-9));
}

TEST(schemes, ramp_mismatch_monotone) {
    Scheme1Config cfg = default_scheme1();
    double previous = 2.0;
    for (int i = 0; i <= 10; ++i) {
        cfg.delta_t = 0.2e-9 * i;
        const double f = scheme1_run(cfg).fidelity_opt;
        EXPECT_LT(f, previous) << i;
        previous = f;
    }
}

TEST(schemes, scheme2_residual) {
    const Scheme2Config cfg = default_scheme2();
    const CorrectionReport rep = scheme2_run(cfg);
    const DotParams &dot = cfg.dot;
    EXPECT_NEAR(rep.rate1, scheme2_ramp_rate(dot, cfg.cell), 0.0);
    EXPECT_NEAR(rep.rate1 / kVoltPerNanosecond, -31.22, 0.01);
    EXPECT_LT(std::abs(rep.residual_kappa1), 1e-12 * dot.k_h1);
    const double dk = dot.k_v2() - dot.k_h1;
    EXPECT_NEAR(rep.residual_kappa2, dot.k_s * dk / dot.k_h1, 1e-6);
    EXPECT_GE(rep.max_residual_phase, 1e-4);
    EXPECT_LE(rep.max_residual_phase, 1e-2);
    EXPECT_NEAR(rep.max_residual_phase, 2.17e-3, 1e-5);
    EXPECT_GE(rep.fidelity_opt, 1 - 1e-4);
    EXPECT_LE(rep.amp_ratio_epsilon, 1e-5);
    EXPECT_NEAR(state_norm(rep.out_state), 1.0, 1e-9);
}

TEST(schemes, scheme2_inert) {
    Scheme2Config cfg = default_scheme2();
    cfg.cell = make_cell(0.0, 0.02, 2e8);
    const CorrectionReport rep = scheme2_run(cfg);
    EXPECT_EQ(rep.rate1, 0.0);
    EXPECT_EQ(rep.warnings.size(), 1u);
    EXPECT_THROW(scheme2_ramp_rate(cfg.dot, cfg.cell), UncorrectableCell);
}

TEST(schemes, fss_range) {
    Scheme1Config cfg = default_scheme1();
    for (double fss_uev : {0.0, 0.3, 1.0, 5.0, 40.0}) {
        cfg.dot = DotParams::from_energies(1.398, 1.4, 1e9, fss_uev * kMicroElectronVolt);
        const CorrectionReport rep = scheme1_run(cfg);
        EXPECT_GE(rep.fidelity_opt, 1 - 1e-4) << fss_uev;
    }
    cfg.dot = DotParams::from_energies(1.398, 1.4, 1e9, 0.0);
    EXPECT_NEAR(scheme1_run(cfg).concurrence, 1.0, 1e-6);
}

TEST(schemes, feasibility_helpers) {
    const double b = 31.2e9;
    EXPECT_NEAR(required_max_voltage(b, 5e-9), 156.0, 1e-9);
    EXPECT_NEAR(required_max_voltage(-b, 5e-9), 156.0, 1e-9);
    EXPECT_THROW(required_max_voltage(b, 0.0), InvalidArgument);
    EXPECT_NEAR(series_cell_rate(b, 2), b / 2, 0.0);
    EXPECT_THROW(series_cell_rate(b, 0), InvalidArgument);
}
