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

#include "fsscomp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <string>

#include "fsscomp/errors.hpp"
#include "fsscomp/runner.hpp"

struct fss_config {
    fsscomp::RunConfig cfg;
};

struct fss_result {
    std::vector<fsscomp::ResultRow> rows;
    std::vector<std::string> warnings;
};

struct fss_oracle_report {
    fsscomp::OracleCheckReport report;
};

namespace {

thread_local std::string last_error;

template <typename F>
fss_status guarded(F &&body) {
    try {
        last_error.clear();
        return body();
    } catch (const fsscomp::ConfigError &e) {
        last_error = e.what();
        return FSS_CONFIG_ERROR;
    } catch (const fsscomp::PhysicsError &e) {
        last_error = e.what();
        return FSS_PHYSICS_ERROR;
    } catch (const fsscomp::NumericalError &e) {
        last_error = e.what();
        return FSS_NUMERICAL_ERROR;
    } catch (const fsscomp::InvalidArgument &e) {
        last_error = e.what();
        return FSS_INVALID_ARGUMENT;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return FSS_INTERNAL_ERROR;
    } catch (const std::exception &e) {
        last_error = e.what();
        return FSS_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return FSS_INTERNAL_ERROR;
    }
}

fss_status null_argument(const char *what) {
    last_error = std::string("null argument: ") + what;
    return FSS_INVALID_ARGUMENT;
}

char *duplicate(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fss_result *make_result(std::vector<fsscomp::ResultRow> rows) {
    auto *result = new fss_result{std::move(rows), {}};
    std::set<std::string> seen;
    for (const auto &row : result->rows) {
        for (const auto &w : row.warnings) {
            if (seen.insert(w).second) {
                result->warnings.push_back(w);
            }
        }
    }
    return result;
}

}  // namespace

extern "C" {

const char *fss_version(void) { return fsscomp::kVersion; }

const char *fss_last_error(void) { return last_error.c_str(); }

void fss_string_free(char *s) { std::free(s); }

fss_status fss_config_default(fss_config **out) {
    if (out == nullptr) {
        return null_argument("out");
    }
    return guarded([&] {
        *out = new fss_config{};
        return FSS_OK;
    });
}

fss_status fss_config_parse(const char *json_text, fss_config **out) {
    if (json_text == nullptr || out == nullptr) {
        return null_argument("json_text/out");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new fss_config{fsscomp::parse_config(json_text)};
        return FSS_OK;
    });
}

void fss_config_free(fss_config *cfg) { delete cfg; }

fss_status fss_config_to_json(const fss_config *cfg, char **out) {
    if (cfg == nullptr || out == nullptr) {
        return null_argument("cfg/out");
    }
    return guarded([&] {
        *out = duplicate(fsscomp::config_to_json(cfg->cfg));
        return FSS_OK;
    });
}

const char *fss_config_output_path(const fss_config *cfg) {
    return cfg == nullptr ? "" : cfg->cfg.output.path.c_str();
}

int fss_config_has_sweep(const fss_config *cfg) {
    return cfg != nullptr && cfg->cfg.sweep.has_value() ? 1 : 0;
}

fss_status fss_simulate(const fss_config *cfg, fss_result **out) {
    if (cfg == nullptr || out == nullptr) {
        return null_argument("cfg/out");
    }
    *out = nullptr;
    return guarded([&] {
        *out = make_result({fsscomp::run_simulation(cfg->cfg)});
        return FSS_OK;
    });
}

fss_status fss_sweep(const fss_config *cfg, int jobs, fss_result **out) {
    if (cfg == nullptr || out == nullptr) {
        return null_argument("cfg/out");
    }
    *out = nullptr;
    if (jobs < 1) {
        last_error = "jobs must be >= 1";
        return FSS_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out = make_result(fsscomp::run_sweep(cfg->cfg, jobs));
        return FSS_OK;
    });
}

void fss_result_free(fss_result *result) { delete result; }

size_t fss_result_size(const fss_result *result) {
    return result == nullptr ? 0 : result->rows.size();
}

fss_status fss_result_row_at(const fss_result *result, size_t index, fss_result_row *out) {
    if (result == nullptr || out == nullptr) {
        return null_argument("result/out");
    }
    if (index >= result->rows.size()) {
        last_error = "row index out of range";
        return FSS_INVALID_ARGUMENT;
    }
    const auto &r = result->rows[index];
    *out = fss_result_row{r.parameter.c_str(), r.value,           r.fidelity_raw,
                          r.fidelity_opt,      r.concurrence,     r.constant_phase_rad,
                          r.residual_kappa1,   r.residual_kappa2, r.epsilon_amp,
                          r.b1_v_per_ns,       r.b2_v_per_ns,     r.max_voltage_v};
    return FSS_OK;
}

size_t fss_result_warning_count(const fss_result *result) {
    return result == nullptr ? 0 : result->warnings.size();
}

const char *fss_result_warning(const fss_result *result, size_t index) {
    if (result == nullptr || index >= result->warnings.size()) {
        return nullptr;
    }
    return result->warnings[index].c_str();
}

fss_status fss_result_csv(const fss_result *result, const fss_config *cfg, const char *command,
                          char **out) {
    if (result == nullptr || cfg == nullptr || out == nullptr) {
        return null_argument("result/cfg/out");
    }
    return guarded([&] {
        *out = duplicate(
            fsscomp::render_csv(cfg->cfg, command == nullptr ? "" : command, result->rows));
        return FSS_OK;
    });
}

fss_status fss_feasibility(const fss_config *cfg, fss_feasibility_report *out) {
    if (cfg == nullptr || out == nullptr) {
        return null_argument("cfg/out");
    }
    return guarded([&] {
        const auto r = fsscomp::run_feasibility(cfg->cfg);
        *out = fss_feasibility_report{r.fss_angular_frequency, r.fss_frequency_mhz,
                                      r.delay_coefficient,     r.b1_v_per_ns,
                                      r.b2_v_per_ns,           r.scheme2_b_v_per_ns,
                                      r.ramp_duration_ns,      r.max_voltage_v,
                                      r.series_cells,          r.per_cell_rate_v_per_ns,
                                      r.per_cell_max_voltage_v};
        return FSS_OK;
    });
}

fss_status fss_oracle_check(const fss_config *cfg, double scale_corruption,
                            fss_oracle_report **out) {
    if (cfg == nullptr || out == nullptr) {
        return null_argument("cfg/out");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new fss_oracle_report{fsscomp::run_oracle_check(cfg->cfg, scale_corruption)};
        if (!(*out)->report.passed()) {
            last_error = "oracle check outside tolerance";
            return FSS_TOLERANCE_FAILURE;
        }
        return FSS_OK;
    });
}

void fss_oracle_report_free(fss_oracle_report *report) { delete report; }

size_t fss_oracle_report_size(const fss_oracle_report *report) {
    return report == nullptr ? 0 : report->report.checks.size();
}

fss_status fss_oracle_report_entry(const fss_oracle_report *report, size_t index,
                                   fss_oracle_entry *out) {
    if (report == nullptr || out == nullptr) {
        return null_argument("report/out");
    }
    if (index >= report->report.checks.size()) {
        last_error = "entry index out of range";
        return FSS_INVALID_ARGUMENT;
    }
    const auto &c = report->report.checks[index];
    *out = fss_oracle_entry{c.name.c_str(), c.value, c.tolerance, c.passed ? 1 : 0};
    return FSS_OK;
}

}  // extern "C"
