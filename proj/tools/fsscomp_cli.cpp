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

// fsscomp command-line tool.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fsscomp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPhysics = 3;

int exit_code(fss_status status) {
    switch (status) {
        case FSS_OK:
            return kExitOk;
        case FSS_TOLERANCE_FAILURE:
            return kExitTolerance;
        case FSS_CONFIG_ERROR:
        case FSS_INVALID_ARGUMENT:
            return kExitConfig;
        default:
            return kExitPhysics;
    }
}

int report_failure(fss_status status) {
    std::cerr << "fsscomp: " << fss_last_error() << "\n";
    return exit_code(status);
}

struct Options {
    std::string config_path;
    std::string output_path;
    int jobs = 1;
    bool print_config = false;
    double corrupt_scale = 1.0;
};

struct ConfigHandle {
    fss_config *ptr = nullptr;
    ~ConfigHandle() { fss_config_free(ptr); }
};

fss_status load_config(const Options &opts, ConfigHandle &cfg) {
    if (opts.config_path.empty()) {
        return fss_config_default(&cfg.ptr);
    }
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) {
        std::cerr << "fsscomp: cannot read config file '" << opts.config_path << "'\n";
        return FSS_CONFIG_ERROR;
    }
    std::ostringstream text;
    text << in.rdbuf();
    const fss_status status = fss_config_parse(text.str().c_str(), &cfg.ptr);
    if (status != FSS_OK) {
        std::cerr << "fsscomp: " << opts.config_path << ": " << fss_last_error() << "\n";
    }
    return status;
}

std::string take_string(char *s) {
    std::string out(s);
    fss_string_free(s);
    return out;
}

bool write_atomically(const std::string &path, const std::string &content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            return false;
        }
        out << content;
        if (!out.flush()) {
            return false;
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        return false;
    }
    return true;
}

int emit_csv(const Options &opts, const fss_config *cfg, const fss_result *result,
             const std::string &command) {
    char *raw = nullptr;
    const fss_status status = fss_result_csv(result, cfg, command.c_str(), &raw);
    if (status != FSS_OK) {
        return report_failure(status);
    }
    const std::string csv = take_string(raw);
    std::string path = opts.output_path;
    if (path.empty()) {
        path = fss_config_output_path(cfg);
    }
    if (path.empty()) {
        std::cout << csv;
    } else if (!write_atomically(path, csv)) {
        std::cerr << "fsscomp: cannot write '" << path << "'\n";
        return kExitPhysics;
    }
    for (std::size_t i = 0; i < fss_result_warning_count(result); ++i) {
        std::cerr << "warning: " << fss_result_warning(result, i) << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const Options &opts, const fss_config *cfg) {
    if (fss_config_has_sweep(cfg)) {
        std::cerr << "fsscomp: config error, field 'sweep': simulate takes a config without a sweep block\n";
        return kExitConfig;
    }
    fss_result *result = nullptr;
    const fss_status status = fss_simulate(cfg, &result);
    if (status != FSS_OK) {
        return report_failure(status);
    }
    int code = emit_csv(opts, cfg, result, "simulate");
    fss_result_row row{};
    if (code == kExitOk && fss_result_row_at(result, 0, &row) == FSS_OK) {
        std::printf("# summary\n");
        std::printf("#   ramp rates       b1 = %.6g V/ns, b2 = %.6g V/ns\n", row.b1_v_per_ns,
                    row.b2_v_per_ns);
        std::printf("#   fidelity         raw = %.12f, phase-optimized = %.12f\n",
                    row.fidelity_raw, row.fidelity_opt);
        std::printf("#   concurrence      %.12f\n", row.concurrence);
        std::printf("#   constant phase   %.6g rad\n", row.constant_phase_rad);
        std::printf("#   residual kappa   %.3e, %.3e rad/m\n", row.residual_kappa1,
                    row.residual_kappa2);
        std::printf("#   amplitude eps    %.3e\n", row.epsilon_amp);
        std::printf("#   max voltage      %.6g V\n", row.max_voltage_v);
    }
    fss_result_free(result);
    return code;
}

int cmd_sweep(const Options &opts, const fss_config *cfg) {
    if (!fss_config_has_sweep(cfg)) {
        std::cerr << "fsscomp: config error, field 'sweep': sweep block required\n";
        return kExitConfig;
    }
    fss_result *result = nullptr;
    const fss_status status = fss_sweep(cfg, opts.jobs, &result);
    if (status != FSS_OK) {
        return report_failure(status);
    }
    const int code = emit_csv(opts, cfg, result, "sweep");
    fss_result_free(result);
    return code;
}

int cmd_feasibility(const fss_config *cfg) {
    fss_feasibility_report rep{};
    const fss_status status = fss_feasibility(cfg, &rep);
    if (status != FSS_OK) {
        return report_failure(status);
    }
    std::printf("fine-structure splitting  omega_S = %.6e rad/s (%.2f MHz)\n",
                rep.fss_angular_frequency, rep.fss_frequency_mhz);
    std::printf("delay coefficient         eta s / v0 = %.6e s/V\n", rep.delay_coefficient);
    std::printf("scheme 1 ramp rates       b1 = %.4f V/ns, b2 = %.4f V/ns\n", rep.b1_v_per_ns,
                rep.b2_v_per_ns);
    std::printf("scheme 2 ramp rate        b = %.4f V/ns\n", rep.scheme2_b_v_per_ns);
    std::printf("ramp duration             %.4g ns\n", rep.ramp_duration_ns);
    std::printf("max voltage               %.2f V\n", rep.max_voltage_v);
    std::printf("series cells              %d\n", rep.series_cells);
    std::printf("per-cell rate             %.4f V/ns\n", rep.per_cell_rate_v_per_ns);
    std::printf("per-cell max voltage      %.2f V\n", rep.per_cell_max_voltage_v);
    return kExitOk;
}

int cmd_oracle_check(const Options &opts, const fss_config *cfg) {
    fss_oracle_report *report = nullptr;
    const fss_status status = fss_oracle_check(cfg, opts.corrupt_scale, &report);
    if (report == nullptr) {
        return report_failure(status);
    }
    for (std::size_t i = 0; i < fss_oracle_report_size(report); ++i) {
        fss_oracle_entry e{};
        fss_oracle_report_entry(report, i, &e);
        std::printf("%-26s %.3e  (tolerance %.0e)  %s\n", e.name, e.value, e.tolerance,
                    e.passed ? "PASS" : "FAIL");
        if (!e.passed) {
            std::fprintf(stderr, "oracle check failed: %s = %.3e >= %.0e\n", e.name, e.value,
                         e.tolerance);
        }
    }
    fss_oracle_report_free(report);
    return exit_code(status);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"fsscomp: fine-structure splitting compensation with Pockels-cell ramps"};
    app.set_version_flag("--version", std::string(fss_version()));
    app.require_subcommand(1);

    Options opts;
    app.add_option("--config", opts.config_path, "JSON configuration file");
    app.add_option("--output", opts.output_path, "CSV output path (default: stdout)");
    app.add_option("--jobs", opts.jobs, "Concurrent sweep steps")->check(CLI::PositiveNumber);
    app.add_flag("--print-config", opts.print_config, "Print the resolved configuration and exit");
    app.add_option("--corrupt-scale-factor", opts.corrupt_scale)->group("");

    auto *simulate = app.add_subcommand("simulate", "Run the configured scheme once");
    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter");
    auto *feasibility = app.add_subcommand("feasibility", "Required ramp rates and voltages");
    auto *oracle = app.add_subcommand("oracle-check", "Compare closed forms against brute force");
    for (auto *sub : {simulate, sweep, feasibility, oracle}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    ConfigHandle cfg;
    const fss_status status = load_config(opts, cfg);
    if (status != FSS_OK) {
        return exit_code(status);
    }
    if (opts.print_config) {
        char *raw = nullptr;
        if (fss_config_to_json(cfg.ptr, &raw) != FSS_OK) {
            return report_failure(FSS_INTERNAL_ERROR);
        }
        std::cout << take_string(raw);
        return kExitOk;
    }

    if (simulate->parsed()) {
        return cmd_simulate(opts, cfg.ptr);
    }
    if (sweep->parsed()) {
        return cmd_sweep(opts, cfg.ptr);
    }
    if (feasibility->parsed()) {
        return cmd_feasibility(cfg.ptr);
    }
    return cmd_oracle_check(opts, cfg.ptr);
}
