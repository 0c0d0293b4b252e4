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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fsscomp/eom.hpp"
#include "fsscomp/oracle.hpp"
#include "fsscomp/overlap.hpp"
#include "fsscomp/runner.hpp"
#include "fsscomp/schemes.hpp"
#include "test_util.hpp"

using namespace fsscomp;
using fsscomp::testing::default_cell;
using fsscomp::testing::default_scheme1;
using fsscomp::testing::default_scheme2;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void check(bool ok, const char *fmt, double value) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), fmt, value);
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += buf;
        if (!ok) {
            detail += " (!)";
            passed = false;
        }
    }
};

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

Outcome scheme1_restoration() {
    Outcome out;
    const Scheme1Config cfg = default_scheme1();
    const CorrectionReport rep = scheme1_run(cfg);
    const double kappa = std::max(std::abs(rep.residual_kappa1), std::abs(rep.residual_kappa2));
    out.check(kappa < 1e-12 * cfg.dot.k_h1, "residual kappa %.2e rad/m", kappa);
    out.check(rep.fidelity_opt >= 1 - 1e-5, "1 - F_opt %.2e", 1 - rep.fidelity_opt);
    out.check(within(rep.amp_ratio_epsilon, 1e-8, 1e-5), "eps %.3e", rep.amp_ratio_epsilon);
    return out;
}

Outcome uncorrected_baseline() {
    Outcome out;
    DotParams dot = DotParams::defaults();
    const double ratio = dot.omega_s() / dot.gamma;
    const TwoPhotonState state = initial_state(dot);
    const double closed = 1.0 / std::sqrt(1 + ratio * ratio);
    const double wedge = 2 * std::abs(polarization_density_matrix(state)(kHH, kVV));
    const double grid = 2 * std::abs(oracle::density_matrix_grid(state, 2048)(kHH, kVV));
    out.check(std::abs(wedge - closed) < 1e-3, "|coh| integrals - closed %.1e", wedge - closed);
    out.check(std::abs(grid - closed) < 1e-3, "|coh| grid - closed %.1e", grid - closed);
    out.check(std::abs(grid - wedge) < 1e-3, "|coh| grid - integrals %.1e", grid - wedge);
    dot.k_s = 10 * dot.gamma / kSpeedOfLight;
    const double c10 = concurrence(polarization_density_matrix(initial_state(dot)));
    out.check(std::abs(c10 - 0.0995) <= 1e-3, "C(omega_S = 10 gamma) %.5f", c10);
    return out;
}

Outcome path_fluctuation() {
    Outcome out;
    const Scheme1Config cfg = default_scheme1();
    const CorrectionReport base = scheme1_run(cfg);
    const double formula = path_fluctuation_phase(1e-3, cfg.dot.k_h1, cfg.cell1, base.rate1);
    Scheme1Config shifted = cfg;
    shifted.lead_in1 += 1e-3;
    const double pipeline =
        scheme1_run(shifted).constant_phase_unwrapped - base.constant_phase_unwrapped;
    out.check(within(std::abs(formula), 1e-3, 1e-2), "dphi(1 mm) %.3e rad", formula);
    out.check(std::abs(pipeline - formula) <= 1e-9, "formula - pipeline %.1e rad",
              pipeline - formula);
    return out;
}

Outcome ramp_mismatch() {
    Outcome out;
    const Scheme1Config cfg = default_scheme1();
    const double base = scheme1_run(cfg).constant_phase_unwrapped;
    double worst = 0.0;
    for (double dt : {1e-12, 1e-11, 1e-10, 3e-10, 1e-9}) {
        Scheme1Config shifted = cfg;
        shifted.delta_t = dt;
        const double pipeline = std::abs(scheme1_run(shifted).constant_phase_unwrapped - base);
        const double expected = cfg.dot.omega_s() * dt;
        worst = std::max(worst, std::abs(pipeline - expected) / expected);
    }
    out.check(worst <= 1e-2, "max rel. dev. from omega_S dt %.1e", worst);
    Scheme1Config ghz = cfg;
    ghz.dot = DotParams::from_energies(1.398, 1.4, 1e9,
                                       2 * kPi * 1e9 * kConstants.hbar / kConstants.q_e);
    ghz.delta_t = 1e-9;
    const double fidelity = scheme1_run(ghz).fidelity_opt;
    out.check(fidelity < 0.6, "F_opt(1 GHz, 1 ns) %.4f", fidelity);
    return out;
}

Outcome scheme2_residual() {
    Outcome out;
    const CorrectionReport rep = scheme2_run(default_scheme2());
    out.check(within(rep.max_residual_phase, 1e-4, 1e-2), "max residual phase %.3e rad",
              rep.max_residual_phase);
    out.check(rep.fidelity_opt >= 1 - 1e-4, "1 - F_opt %.2e", 1 - rep.fidelity_opt);
    out.check(rep.amp_ratio_epsilon <= 1e-5, "|A_V/A_H| - 1 %.2e", rep.amp_ratio_epsilon);
    return out;
}

Outcome feasibility() {
    Outcome out;
    const FeasibilityReport rep = run_feasibility(RunConfig{});
    const double rate = std::max(std::abs(rep.b1_v_per_ns), std::abs(rep.b2_v_per_ns));
    out.check(within(std::abs(rep.b1_v_per_ns), 25, 35) && within(std::abs(rep.b2_v_per_ns), 25, 35),
              "|b| %.2f V/ns", rate);
    out.check(rep.max_voltage_v <= 300.0, "V_max(5 ns) %.1f V", rep.max_voltage_v);
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    for (int id : {1, 2}) {
        RunConfig cfg;
        cfg.scheme.id = id;
        cfg.oracle.grid_points = 1 << 14;
        const OracleCheckReport rep = run_oracle_check(cfg);
        double l2 = 0;
        double phase = 0;
        double dm = 0;
        for (const auto &c : rep.checks) {
            if (c.name.find("L2") != std::string::npos) {
                l2 = std::max(l2, c.value);
            } else if (c.name.find("phase") != std::string::npos) {
                phase = std::max(phase, c.value);
            } else {
                dm = std::max(dm, c.value);
            }
        }
        out.check(rep.passed() && l2 < 1e-4, id == 1 ? "scheme 1: L2 %.1e" : "scheme 2: L2 %.1e",
                  l2);
        out.check(phase < 1e-3, "phase %.1e rad", phase);
        out.check(dm < 1e-4, "rho entries %.1e", dm);
    }
    return out;
}

Outcome properties() {
    Outcome out;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const DotParams dot = DotParams::defaults();
    double norm_dev = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const CellParams cell = make_cell(1e-3 * (1 + unit(rng)), 0.01 + 0.02 * std::abs(unit(rng)),
                                          kSpeedOfLight / (1.5 + 0.8 * std::abs(unit(rng))));
        const RampProfile r1{10 * unit(rng), 5e10 * unit(rng), 0.5 + 0.4 * unit(rng), 0.0};
        const RampProfile r2{10 * unit(rng), 5e10 * unit(rng), 0.5 + 0.4 * unit(rng), 0.0};
        const TwoPhotonState s = apply_cell(apply_cell(initial_state(dot), cell, r1, 1), cell, r2, 2);
        norm_dev = std::max(norm_dev, std::abs(state_norm(s) - 1));
    }
    out.check(norm_dev <= 1e-9, "norm dev %.1e", norm_dev);

    const CellParams cell = default_cell();
    double cont = 0;
    const RampProfile flat{5.0, 0.0, 0.5, 0.0};
    for (double b : {1e-6, -1e-6}) {
        const RampProfile ramp{5.0, b, 0.5, 0.0};
        const double t0 = transit_time(cell, flat, -0.2);
        cont = std::max(cont, std::abs(transit_time(cell, ramp, -0.2) - t0) / t0);
        const double d0 = walkoff(cell, flat);
        cont = std::max(cont, std::abs(walkoff(cell, ramp) - d0) / std::abs(d0));
    }
    const double edge = 1e-3 / cell.delay_coefficient();
    const double t_lo = transit_time(cell, RampProfile{5.0, edge * (1 - 1e-9), 0.5, 0.0}, -0.2);
    const double t_hi = transit_time(cell, RampProfile{5.0, edge * (1 + 1e-9), 0.5, 0.0}, -0.2);
    cont = std::max(cont, std::abs(t_hi - t_lo) / t_lo);
    out.check(cont <= 1e-9, "b->0 rel. jump %.1e", cont);

    const double b = scheme1_ramp_rates(dot, cell, cell).first;
    double additivity = 0;
    for (int n : {2, 3, 4}) {
        double f = 1;
        for (int i = 0; i < n; ++i) {
            f *= scale_factor(cell, series_cell_rate(b, n));
        }
        additivity = std::max(additivity, std::abs(f - scale_factor(cell, b)));
    }
    out.check(additivity <= 1e-14, "series f dev %.1e", additivity);

    DotParams wide = dot;
    wide.k_s *= 3;
    const PolDensityMatrix rho = polarization_density_matrix(initial_state(wide));
    double lu = 0;
    for (double theta : {0.4, 1.7, -2.9}) {
        lu = std::max(lu, std::abs(concurrence(rotate_local_phase(rho, 1, theta)) - concurrence(rho)));
        lu = std::max(lu, std::abs(concurrence(rotate_local_phase(rho, 2, theta)) - concurrence(rho)));
    }
    out.check(lu <= 1e-9, "LU concurrence dev %.1e", lu);

    RunConfig sweep;
    sweep.sweep = SweepSpec{"delta_t", 0.0, 1.0, 6, false};
    const bool same = render_csv(sweep, "sweep", run_sweep(sweep, 1)) ==
                      render_csv(sweep, "sweep", run_sweep(sweep, 4));
    out.check(same, "CSV reruns identical %.0f", same ? 1.0 : 0.0);
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"1 scheme-1 restoration", scheme1_restoration},
        {"2 uncorrected baseline", uncorrected_baseline},
        {"3 path-length fluctuation", path_fluctuation},
        {"4 ramp start mismatch", ramp_mismatch},
        {"5 scheme-2 residual", scheme2_residual},
        {"6 feasibility numbers", feasibility},
        {"7 oracle equivalence", oracle_equivalence},
        {"8 property suites", properties},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception &e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        failures += outcome.passed ? 0 : 1;
        std::printf("%s  %-28s %s\n", outcome.passed ? "PASS" : "FAIL", name,
                    outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
