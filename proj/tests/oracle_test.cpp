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

#include "fsscomp/oracle.hpp"

#include <cmath>

#include "fsscomp/schemes.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace fsscomp;
using fsscomp::testing::default_cell;
using fsscomp::testing::default_scheme1;

namespace {

struct CorrectedPair {
    Scheme1Config cfg = default_scheme1();
    double b1 = 0;
    double b2 = 0;
    CorrectedPair() { std::tie(b1, b2) = scheme1_ramp_rates(cfg.dot, cfg.cell1, cfg.cell2); }
    RampProfile ramp1() const { return scheme1_ramp(cfg, 1, b1, 0.0); }
    RampProfile ramp2() const { return scheme1_ramp(cfg, 2, b2, 0.0); }
};

}  // namespace

TEST(oracle, numerical_transit_time_h_axis) {
    const CellParams cell = default_cell();
    const RampProfile ramp{0.0, 3e10, 0.5, 0.0};
    const double expected = cell.thickness / cell.v0;
    EXPECT_NEAR(oracle::numerical_transit_time(cell, ramp, Pol::H, -0.2), expected,
                1e-13 * expected);
}

TEST(oracle, sampled_wave_norm) {
    const ModeProfile mode{{1.0, 0.0}, 2.0, 1000.0, 0.0, 1.0, 0.0};
    const auto wave = oracle::SampledWave::sample(mode, Pol::V, 10.0, 1 << 14, 1000.0);
    EXPECT_EQ(wave.size(), 1u << 14);
    EXPECT_NEAR(wave.norm(), 0.25, 1e-3);
    EXPECT_NEAR(wave.position(wave.size() - 1), 0.0, 1e-12);
}

TEST(oracle, dominant_wavenumber) {
    const ModeProfile mode{{1.0, 0.0}, 0.5, 1.0e4 + 300.0, 0.0, 1.0, 0.0};
    const auto wave = oracle::SampledWave::sample(mode, Pol::V, 20.0, 4096, 1.0e4);
    EXPECT_NEAR(oracle::dominant_wavenumber(wave), 1.0e4 + 300.0, 2 * kPi / 20.0);
}

TEST(oracle, propagation_scales_wavenumber) {
    const CorrectedPair s;
    const double k_v1 = s.cfg.dot.k_v1();
    const ModeProfile mode{{1.0, 0.0}, s.cfg.dot.gamma / (2 * kSpeedOfLight), k_v1, 0.0, 1.0, 0.0};
    const double extent = 4 * s.cfg.dot.coherence_length();
    const auto wave = oracle::SampledWave::sample(mode, Pol::V, extent, 1 << 12, k_v1);
    const auto out = oracle::propagate_grid(wave, s.cfg.cell1, s.ramp1());
    const double expected = scale_factor(s.cfg.cell1, s.b1) * k_v1;
    EXPECT_NEAR(expected, s.cfg.dot.k_h1, 1e-6);
    EXPECT_NEAR(oracle::dominant_wavenumber(out), expected, 2 * kPi / extent);
    EXPECT_NEAR(out.norm(), wave.norm(), 1e-3 * wave.norm());
}

TEST(oracle, transform_matches_closed_form) {
    const CorrectedPair s;
    const TwoPhotonState input = initial_state(s.cfg.dot);
    const auto first = oracle::compare_transform(input, s.cfg.cell1, s.ramp1(), 1);
    EXPECT_LT(first.l2_error, 1e-4);
    EXPECT_LT(first.max_phase_error, 1e-3);
    ASSERT_EQ(first.branches.size(), 2u);
    const TwoPhotonState middle = apply_cell(input, s.cfg.cell1, s.ramp1(), 1);
    const auto second = oracle::compare_transform(middle, s.cfg.cell2, s.ramp2(), 2);
    EXPECT_LT(second.l2_error, 1e-4);
    EXPECT_LT(second.max_phase_error, 1e-3);
}

TEST(oracle, transform_with_offset_voltage) {
    CorrectedPair s;
    s.cfg.offset1 = 40.0;
    const TwoPhotonState input = initial_state(s.cfg.dot);
    const auto rep = oracle::compare_transform(input, s.cfg.cell1, s.ramp1(), 1);
    EXPECT_LT(rep.l2_error, 1e-4);
    EXPECT_LT(rep.max_phase_error, 1e-3);
}

TEST(oracle, corrupted_scale_is_detected) {
    const CorrectedPair s;
    const TwoPhotonState input = initial_state(s.cfg.dot);
    const auto rep = oracle::compare_transform(input, s.cfg.cell1, s.ramp1(), 1, 1u << 14, 1.001);
    EXPECT_GT(rep.l2_error, 1e-4);
}

TEST(oracle, inert_cell_is_exact) {
    const DotParams dot = DotParams::defaults();
    const CellParams cell = make_cell(0.0, 0.02, 2e8);
    const auto rep =
        oracle::compare_transform(initial_state(dot), cell, RampProfile{0, 3e10, 0.5, 0}, 2);
    EXPECT_LT(rep.l2_error, 1e-12);
    EXPECT_LT(rep.max_phase_error, 1e-12);
}

TEST(oracle, density_matrix_grid) {
    const CorrectedPair s;
    const TwoPhotonState input = initial_state(s.cfg.dot);
    const TwoPhotonState output = scheme1_output_state(s.cfg, s.b1, s.b2, 0.0);
    for (const TwoPhotonState *state : {&input, &output}) {
        const PolDensityMatrix grid = oracle::density_matrix_grid(*state, 2048);
        const PolDensityMatrix closed = polarization_density_matrix(*state);
        EXPECT_LT((grid.rho - closed.rho).cwiseAbs().maxCoeff(), 1e-4);
    }
}

TEST(oracle, density_matrix_grid_large_splitting) {
    DotParams dot = DotParams::defaults();
    dot.k_s = 10 * dot.gamma / kSpeedOfLight;
    const TwoPhotonState state = initial_state(dot);
    const PolDensityMatrix grid = oracle::density_matrix_grid(state, 2048);
    EXPECT_NEAR(concurrence(grid), 0.0995, 1e-3);
}
