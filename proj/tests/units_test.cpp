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

#include "fsscomp/errors.hpp"
#include "gtest/gtest.h"

using namespace fsscomp;

TEST(units, energy_to_angular_frequency) {
    EXPECT_NEAR(energy_to_angular_frequency(1e-6), 1.5192674488e9, 1e-9 * 1.5192674488e9);
    EXPECT_EQ(energy_to_angular_frequency(0.0), 0.0);
    EXPECT_NEAR(energy_to_angular_frequency(1.398) / energy_to_angular_frequency(1.4),
                1.398 / 1.4, 1e-15);
}

TEST(units, wavenumber_round_trip) {
    for (double k : {1.0, 5.0677, 7.0847e6, 1e9}) {
        EXPECT_NEAR(angular_frequency_to_wavenumber(wavenumber_to_angular_frequency(k)), k,
                    1e-15 * k);
    }
    EXPECT_NEAR(energy_to_wavenumber(1e-6), 5.0677307, 1e-6);
    EXPECT_NEAR(energy_to_wavenumber(1.398), 7.0846875e6, 1.0);
}

TEST(units, cell_from_datasheet) {
    const CellParams cell = cell_from_datasheet(0.052, 830e-9, 1.5, 0.02);
    EXPECT_NEAR(cell.v0, kSpeedOfLight / 1.5, 1e-6);
    EXPECT_NEAR(cell.refractive_index(), 1.5, 1e-15);
    EXPECT_NEAR(cell.eta * cell.thickness * 1.5, 0.052 * 830e-9 / (2 * kPi), 1e-22);
    EXPECT_NEAR(cell.delay_coefficient(), 2.2913e-17, 1e-21);
    EXPECT_NEAR(cell.phase_sensitivity(830e-9), 0.052, 1e-15);
    EXPECT_EQ(cell.thickness, 0.02);
}

TEST(units, cell_from_datasheet_zero_alpha_is_inert) {
    const CellParams cell = cell_from_datasheet(0.0, 830e-9, 1.5, 0.02);
    EXPECT_EQ(cell.eta, 0.0);
    EXPECT_EQ(cell.delay_coefficient(), 0.0);
}

TEST(units, invalid_cells) {
    EXPECT_THROW(make_cell(1e-3, 0.0, 2e8), InvalidArgument);
    EXPECT_THROW(make_cell(1e-3, 0.02, 0.0), InvalidArgument);
    EXPECT_THROW(make_cell(1e-3, 0.02, 3.1e8), InvalidArgument);
    EXPECT_THROW(make_cell(NAN, 0.02, 2e8), InvalidArgument);
    EXPECT_THROW(cell_from_datasheet(-0.1, 830e-9, 1.5, 0.02), InvalidArgument);
    EXPECT_THROW(cell_from_datasheet(0.05, 0.0, 1.5, 0.02), InvalidArgument);
    EXPECT_THROW(cell_from_datasheet(0.05, 830e-9, 0.9, 0.02), InvalidArgument);
    EXPECT_THROW(cell_from_datasheet(0.05, 830e-9, 1.5, -1.0), InvalidArgument);
    EXPECT_NO_THROW(make_cell(-1e-3, 0.02, kSpeedOfLight));
}
