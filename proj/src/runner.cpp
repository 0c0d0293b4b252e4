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

#include "fsscomp/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "fsscomp/errors.hpp"
#include "fsscomp/oracle.hpp"
#include "json.hpp"

namespace fsscomp {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int line_of(std::string_view text, std::size_t offset) {
    if (offset == std::string_view::npos) {
        return 0;
    }
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Best-effort source line of "section"."key".
int locate(std::string_view text, const std::string &section, const std::string &key) {
    std::size_t from = 0;
    if (!section.empty()) {
        from = text.find("\"" + section + "\"");
        if (from == std::string_view::npos) {
            return 0;
        }
        if (key.empty()) {
            return line_of(text, from);
        }
    }
    return line_of(text, text.find("\"" + key + "\"", from));
}

class Section {
   public:
    Section(std::string_view text, const json &root, std::string name,
            std::set<std::string> allowed)
        : text_(text), name_(std::move(name)) {
        if (!root.contains(name_)) {
            return;
        }
        node_ = &root.at(name_);
        if (!node_->is_object()) {
            fail("", "must be an object");
        }
        for (const auto &item : node_->items()) {
            if (!allowed.count(item.key())) {
                fail(item.key(), "unknown key");
            }
        }
    }

    bool present() const { return node_ != nullptr; }
    bool has(const std::string &key) const { return node_ != nullptr && node_->contains(key); }

    void number(const std::string &key, double &out) const {
        if (!has(key)) {
            return;
        }
        const json &v = node_->at(key);
        if (!v.is_number()) {
            fail(key, "expected a number");
        }
        out = v.get<double>();
        if (!std::isfinite(out)) {
            fail(key, "must be finite");
        }
    }

    void integer(const std::string &key, int &out) const {
        if (!has(key)) {
            return;
        }
        const json &v = node_->at(key);
        if (!v.is_number_integer()) {
            fail(key, "expected an integer");
        }
        out = v.get<int>();
    }

    void string(const std::string &key, std::string &out) const {
        if (!has(key)) {
            return;
        }
        const json &v = node_->at(key);
        if (!v.is_string()) {
            fail(key, "expected a string");
        }
        out = v.get<std::string>();
    }

    void require(bool ok, const std::string &key, const std::string &what) const {
        if (!ok) {
            fail(key, what);
        }
    }

    [[noreturn]] void fail(const std::string &key, const std::string &what) const {
        const std::string field = key.empty() ? name_ : name_ + "." + key;
        const int line = locate(text_, name_, key);
        std::ostringstream msg;
        msg << "config error";
        if (line > 0) {
            msg << " at line " << line;
        }
        msg << ", field '" << field << "': " << what;
        throw ConfigError(field, line, msg.str());
    }

   private:
    std::string_view text_;
    std::string name_;
    const json *node_ = nullptr;
};

CellSpec parse_cell(std::string_view text, const json &root, const std::string &name) {
    const Section sec(text, root, name,
                      {"alpha_rad_per_v", "wavelength_nm", "n0", "thickness_m", "eta_per_v",
                       "v0_m_per_s"});
    CellSpec cell;
    const bool direct = sec.has("eta_per_v") || sec.has("v0_m_per_s");
    if (direct) {
        cell.form = CellSpec::Form::Direct;
        sec.require(!sec.has("alpha_rad_per_v") && !sec.has("wavelength_nm") && !sec.has("n0"),
                    "eta_per_v", "direct form (eta_per_v, v0_m_per_s) cannot mix datasheet keys");
        sec.require(sec.has("eta_per_v"), "eta_per_v", "direct form requires eta_per_v");
        sec.require(sec.has("v0_m_per_s"), "v0_m_per_s", "direct form requires v0_m_per_s");
        sec.number("eta_per_v", cell.eta_per_v);
        sec.number("v0_m_per_s", cell.v0_m_per_s);
        sec.number("thickness_m", cell.thickness_m);
        sec.require(cell.v0_m_per_s > 0.0 && cell.v0_m_per_s <= kConstants.c, "v0_m_per_s",
                    "must lie in (0, c]");
    } else {
        sec.number("alpha_rad_per_v", cell.alpha_rad_per_v);
        sec.number("wavelength_nm", cell.wavelength_nm);
        sec.number("n0", cell.n0);
        sec.number("thickness_m", cell.thickness_m);
        sec.require(cell.alpha_rad_per_v >= 0.0, "alpha_rad_per_v", "must be >= 0");
        sec.require(cell.wavelength_nm > 0.0, "wavelength_nm", "must be positive");
        sec.require(cell.n0 >= 1.0, "n0", "must be >= 1");
    }
    sec.require(cell.thickness_m > 0.0, "thickness_m", "must be positive");
    return cell;
}

void write_cell(ordered_json &out, const CellSpec &cell) {
    if (cell.form == CellSpec::Form::Direct) {
        out["eta_per_v"] = cell.eta_per_v;
        out["v0_m_per_s"] = cell.v0_m_per_s;
        out["thickness_m"] = cell.thickness_m;
    } else {
        out["alpha_rad_per_v"] = cell.alpha_rad_per_v;
        out["wavelength_nm"] = cell.wavelength_nm;
        out["n0"] = cell.n0;
        out["thickness_m"] = cell.thickness_m;
    }
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

}  // namespace

const std::vector<std::string> &sweep_parameters() {
    static const std::vector<std::string> names{"delta_l1", "delta_l2", "delta_t",  "fss_uev",
                                                "b1_scale", "b2_scale", "L1",       "L2"};
    return names;
}

RunConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const int line = line_of(text, std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size()));
        throw ConfigError("", line,
                          "config error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("", 1, "config error at line 1: top level must be an object");
    }
    static const std::set<std::string> sections{"dot",    "cell",        "cell2",  "scheme",
                                                "sweep",  "output",      "feasibility",
                                                "oracle"};
    for (const auto &item : root.items()) {
        if (!sections.count(item.key())) {
            const int line = locate(text, "", item.key());
            throw ConfigError(item.key(), line,
                              "config error at line " + std::to_string(line) + ", field '" +
                                  item.key() + "': unknown key");
        }
    }

    RunConfig cfg;
    {
        const Section sec(text, root, "dot",
                          {"photon1_energy_ev", "photon2_energy_ev", "gamma_per_s", "fss_uev"});
        sec.number("photon1_energy_ev", cfg.dot.photon1_energy_ev);
        sec.number("photon2_energy_ev", cfg.dot.photon2_energy_ev);
        sec.number("gamma_per_s", cfg.dot.gamma_per_s);
        sec.number("fss_uev", cfg.dot.fss_uev);
        sec.require(cfg.dot.photon1_energy_ev > 0.0, "photon1_energy_ev", "must be positive");
        sec.require(cfg.dot.photon2_energy_ev > 0.0, "photon2_energy_ev", "must be positive");
        sec.require(cfg.dot.gamma_per_s > 0.0, "gamma_per_s", "must be positive");
        sec.require(cfg.dot.fss_uev >= 0.0, "fss_uev",
                    "must be >= 0 (swap H/V labels for a negative splitting)");
    }
    cfg.cell = parse_cell(text, root, "cell");
    if (root.contains("cell2")) {
        cfg.cell2 = parse_cell(text, root, "cell2");
    }
    {
        const Section sec(text, root, "scheme",
                          {"id", "L1_m", "L2_m", "a1_v", "a2_v", "delta_t_ns", "delta_l1_mm",
                           "delta_l2_mm", "b1_scale", "b2_scale", "support_coherence_lengths"});
        SchemeSpec &s = cfg.scheme;
        sec.integer("id", s.id);
        sec.number("L1_m", s.L1_m);
        sec.number("L2_m", s.L2_m);
        sec.number("a1_v", s.a1_v);
        sec.number("a2_v", s.a2_v);
        sec.number("delta_t_ns", s.delta_t_ns);
        sec.number("delta_l1_mm", s.delta_l1_mm);
        sec.number("delta_l2_mm", s.delta_l2_mm);
        sec.number("b1_scale", s.b1_scale);
        sec.number("b2_scale", s.b2_scale);
        sec.number("support_coherence_lengths", s.support_coherence_lengths);
        sec.require(s.id == 1 || s.id == 2, "id", "scheme id must be 1 or 2");
        sec.require(s.L1_m >= 0.0, "L1_m", "must be >= 0");
        sec.require(s.L2_m >= 0.0, "L2_m", "must be >= 0");
        sec.require(s.support_coherence_lengths > 0.0, "support_coherence_lengths",
                    "must be positive");
    }
    if (root.contains("sweep")) {
        const Section sec(text, root, "sweep", {"parameter", "from", "to", "steps", "spacing"});
        SweepSpec sw;
        std::string spacing = "linear";
        sec.require(sec.has("parameter"), "parameter", "required");
        sec.require(sec.has("from") && sec.has("to"), "from", "'from' and 'to' are required");
        sec.string("parameter", sw.parameter);
        sec.number("from", sw.from);
        sec.number("to", sw.to);
        sec.integer("steps", sw.steps);
        sec.string("spacing", spacing);
        const auto &names = sweep_parameters();
        sec.require(std::find(names.begin(), names.end(), sw.parameter) != names.end(),
                    "parameter", "unknown sweep parameter '" + sw.parameter + "'");
        sec.require(sw.steps >= 2, "steps", "must be >= 2");
        sec.require(spacing == "linear" || spacing == "log", "spacing",
                    "must be 'linear' or 'log'");
        sw.log_spacing = spacing == "log";
        sec.require(!sw.log_spacing || (sw.from > 0.0 && sw.to > 0.0), "spacing",
                    "log spacing needs positive bounds");
        cfg.sweep = sw;
    }
    {
        const Section sec(text, root, "output", {"path", "format"});
        sec.string("path", cfg.output.path);
        sec.string("format", cfg.output.format);
        sec.require(cfg.output.format == "csv", "format", "only 'csv' is supported");
    }
    {
        const Section sec(text, root, "feasibility", {"ramp_duration_ns", "series_cells"});
        sec.number("ramp_duration_ns", cfg.feasibility.ramp_duration_ns);
        sec.integer("series_cells", cfg.feasibility.series_cells);
        sec.require(cfg.feasibility.ramp_duration_ns > 0.0, "ramp_duration_ns",
                    "must be positive");
        sec.require(cfg.feasibility.series_cells >= 1, "series_cells", "must be >= 1");
    }
    {
        const Section sec(text, root, "oracle", {"grid_points", "dm_grid_points"});
        sec.integer("grid_points", cfg.oracle.grid_points);
        sec.integer("dm_grid_points", cfg.oracle.dm_grid_points);
        sec.require(cfg.oracle.grid_points >= 64, "grid_points", "must be >= 64");
        sec.require(cfg.oracle.dm_grid_points >= 512, "dm_grid_points", "must be >= 512");
    }
    return cfg;
}

std::string config_to_json(const RunConfig &cfg) {
    ordered_json out;
    out["dot"]["photon1_energy_ev"] = cfg.dot.photon1_energy_ev;
    out["dot"]["photon2_energy_ev"] = cfg.dot.photon2_energy_ev;
    out["dot"]["gamma_per_s"] = cfg.dot.gamma_per_s;
    out["dot"]["fss_uev"] = cfg.dot.fss_uev;
    write_cell(out["cell"], cfg.cell);
    if (cfg.cell2) {
        write_cell(out["cell2"], *cfg.cell2);
    }
    auto &s = out["scheme"];
    s["id"] = cfg.scheme.id;
    s["L1_m"] = cfg.scheme.L1_m;
    s["L2_m"] = cfg.scheme.L2_m;
    s["a1_v"] = cfg.scheme.a1_v;
    s["a2_v"] = cfg.scheme.a2_v;
    s["delta_t_ns"] = cfg.scheme.delta_t_ns;
    s["delta_l1_mm"] = cfg.scheme.delta_l1_mm;
    s["delta_l2_mm"] = cfg.scheme.delta_l2_mm;
    s["b1_scale"] = cfg.scheme.b1_scale;
    s["b2_scale"] = cfg.scheme.b2_scale;
    s["support_coherence_lengths"] = cfg.scheme.support_coherence_lengths;
    if (cfg.sweep) {
        auto &w = out["sweep"];
        w["parameter"] = cfg.sweep->parameter;
        w["from"] = cfg.sweep->from;
        w["to"] = cfg.sweep->to;
        w["steps"] = cfg.sweep->steps;
        w["spacing"] = cfg.sweep->log_spacing ? "log" : "linear";
    }
    out["output"]["path"] = cfg.output.path;
    out["output"]["format"] = cfg.output.format;
    out["feasibility"]["ramp_duration_ns"] = cfg.feasibility.ramp_duration_ns;
    out["feasibility"]["series_cells"] = cfg.feasibility.series_cells;
    out["oracle"]["grid_points"] = cfg.oracle.grid_points;
    out["oracle"]["dm_grid_points"] = cfg.oracle.dm_grid_points;
    return out.dump(2) + "\n";
}

RunConfig with_parameter(const RunConfig &cfg, const std::string &parameter, double value) {
    RunConfig out = cfg;
    if (parameter == "delta_l1") {
        out.scheme.delta_l1_mm = value;
    } else if (parameter == "delta_l2") {
        out.scheme.delta_l2_mm = value;
    } else if (parameter == "delta_t") {
        out.scheme.delta_t_ns = value;
    } else if (parameter == "fss_uev") {
        out.dot.fss_uev = value;
    } else if (parameter == "b1_scale") {
        out.scheme.b1_scale = value;
    } else if (parameter == "b2_scale") {
        out.scheme.b2_scale = value;
    } else if (parameter == "L1") {
        out.scheme.L1_m = value;
    } else if (parameter == "L2") {
        out.scheme.L2_m = value;
    } else {
        throw ConfigError("sweep.parameter", 0, "unknown sweep parameter '" + parameter + "'");
    }
    return out;
}

std::vector<double> sweep_values(const SweepSpec &sweep) {
    std::vector<double> values(static_cast<std::size_t>(sweep.steps));
    for (int i = 0; i < sweep.steps; ++i) {
        const double frac = static_cast<double>(i) / (sweep.steps - 1);
        values[i] = sweep.log_spacing ? sweep.from * std::pow(sweep.to / sweep.from, frac)
                                      : sweep.from + (sweep.to - sweep.from) * frac;
    }
    values.back() = sweep.to;
    return values;
}

DotParams build_dot(const RunConfig &cfg) {
    return DotParams::from_energies(cfg.dot.photon1_energy_ev, cfg.dot.photon2_energy_ev,
                                    cfg.dot.gamma_per_s, cfg.dot.fss_uev * kMicroElectronVolt);
}

CellParams build_cell(const CellSpec &spec) {
    if (spec.form == CellSpec::Form::Direct) {
        return make_cell(spec.eta_per_v, spec.thickness_m, spec.v0_m_per_s);
    }
    return cell_from_datasheet(spec.alpha_rad_per_v, spec.wavelength_nm * kNanometer, spec.n0,
                               spec.thickness_m);
}

Scheme1Config build_scheme1(const RunConfig &cfg) {
    Scheme1Config out;
    out.dot = build_dot(cfg);
    out.cell1 = build_cell(cfg.cell);
    out.cell2 = cfg.cell2 ? build_cell(*cfg.cell2) : out.cell1;
    out.lead_in1 = cfg.scheme.L1_m + cfg.scheme.delta_l1_mm * kMillimeter;
    out.lead_in2 = cfg.scheme.L2_m + cfg.scheme.delta_l2_mm * kMillimeter;
    out.offset1 = cfg.scheme.a1_v;
    out.offset2 = cfg.scheme.a2_v;
    out.delta_t = cfg.scheme.delta_t_ns * kNanosecond;
    out.rate1_scale = cfg.scheme.b1_scale;
    out.rate2_scale = cfg.scheme.b2_scale;
    out.support_lengths = cfg.scheme.support_coherence_lengths;
    return out;
}

Scheme2Config build_scheme2(const RunConfig &cfg) {
    Scheme2Config out;
    out.dot = build_dot(cfg);
    out.cell = build_cell(cfg.cell);
    out.lead_in1 = cfg.scheme.L1_m + cfg.scheme.delta_l1_mm * kMillimeter;
    out.lead_in2 = cfg.scheme.L2_m + cfg.scheme.delta_l2_mm * kMillimeter;
    out.rate_scale = cfg.scheme.b1_scale;
    out.support_lengths = cfg.scheme.support_coherence_lengths;
    return out;
}

ResultRow run_simulation(const RunConfig &cfg) {
    const CorrectionReport report =
        cfg.scheme.id == 1 ? scheme1_run(build_scheme1(cfg)) : scheme2_run(build_scheme2(cfg));
    ResultRow row;
    row.fidelity_raw = report.fidelity_raw;
    row.fidelity_opt = report.fidelity_opt;
    row.concurrence = report.concurrence;
    row.constant_phase_rad = report.constant_phase;
    row.residual_kappa1 = report.residual_kappa1;
    row.residual_kappa2 = report.residual_kappa2;
    row.epsilon_amp = report.amp_ratio_epsilon;
    row.b1_v_per_ns = report.rate1 / kVoltPerNanosecond;
    row.b2_v_per_ns = report.rate2 / kVoltPerNanosecond;
    row.max_voltage_v =
        required_max_voltage(std::max(std::abs(report.rate1), std::abs(report.rate2)),
                             cfg.feasibility.ramp_duration_ns * kNanosecond);
    row.warnings = report.warnings;
    return row;
}

std::vector<ResultRow> run_sweep(const RunConfig &cfg, int jobs) {
    if (!cfg.sweep) {
        throw ConfigError("sweep", 0, "config error, field 'sweep': sweep block required");
    }
    const std::vector<double> values = sweep_values(*cfg.sweep);
    const std::size_t count = values.size();
    std::vector<ResultRow> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = run_simulation(with_parameter(cfg, cfg.sweep->parameter, values[i]));
                rows[i].parameter = cfg.sweep->parameter;
                rows[i].value = values[i];
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::clamp(jobs, 1, static_cast<int>(count));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

std::string render_csv(const RunConfig &cfg, const std::string &command,
                       const std::vector<ResultRow> &rows) {
    std::ostringstream out;
    out << "# fsscomp " << kVersion << "\n";
    out << "# command: " << command << "\n";
    std::istringstream config(config_to_json(cfg));
    for (std::string line; std::getline(config, line);) {
        out << "# " << line << "\n";
    }
    out << "parameter,value,fidelity_raw,fidelity_opt,concurrence,constant_phase_rad,"
           "residual_kappa1,residual_kappa2,epsilon_amp,b1_v_per_ns,b2_v_per_ns,max_voltage_v\n";
    for (const auto &r : rows) {
        out << r.parameter;
        for (const double v : {r.value, r.fidelity_raw, r.fidelity_opt, r.concurrence,
                               r.constant_phase_rad, r.residual_kappa1, r.residual_kappa2,
                               r.epsilon_amp, r.b1_v_per_ns, r.b2_v_per_ns, r.max_voltage_v}) {
            out << ',' << format_number(v);
        }
        out << "\n";
    }
    return out.str();
}

FeasibilityReport run_feasibility(const RunConfig &cfg) {
    const Scheme1Config s1 = build_scheme1(cfg);
    const auto [b1, b2] = scheme1_ramp_rates(s1.dot, s1.cell1, s1.cell2);
    FeasibilityReport rep;
    rep.fss_angular_frequency = s1.dot.omega_s();
    rep.fss_frequency_mhz = rep.fss_angular_frequency / (2.0 * kPi) / 1e6;
    rep.delay_coefficient = s1.cell1.delay_coefficient();
    rep.b1_v_per_ns = b1 / kVoltPerNanosecond;
    rep.b2_v_per_ns = b2 / kVoltPerNanosecond;
    rep.scheme2_b_v_per_ns = scheme2_ramp_rate(s1.dot, s1.cell1) / kVoltPerNanosecond;
    rep.ramp_duration_ns = cfg.feasibility.ramp_duration_ns;
    const double duration = cfg.feasibility.ramp_duration_ns * kNanosecond;
    const double rate = std::max(std::abs(b1), std::abs(b2));
    rep.max_voltage_v = required_max_voltage(rate, duration);
    rep.series_cells = cfg.feasibility.series_cells;
    const double per_cell = series_cell_rate(rate, rep.series_cells);
    rep.per_cell_rate_v_per_ns = per_cell / kVoltPerNanosecond;
    rep.per_cell_max_voltage_v = required_max_voltage(per_cell, duration);
    return rep;
}

bool OracleCheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck &c) { return c.passed; });
}

namespace {

constexpr double kTransformL2Tolerance = 1e-4;
constexpr double kTransformPhaseTolerance = 1e-3;
constexpr double kDensityTolerance = 1e-4;

void add_check(OracleCheckReport &rep, std::string name, double value, double tolerance) {
    rep.checks.push_back(OracleCheck{std::move(name), value, tolerance, value < tolerance});
}

double max_entry_difference(const PolDensityMatrix &a, const PolDensityMatrix &b) {
    return (a.rho - b.rho).cwiseAbs().maxCoeff();
}

}  // namespace

OracleCheckReport run_oracle_check(const RunConfig &cfg, double scale_corruption) {
    OracleCheckReport rep;
    TwoPhotonState input;
    CellParams cell1;
    CellParams cell2;
    RampProfile ramp1;
    RampProfile ramp2;
    if (cfg.scheme.id == 1) {
        const Scheme1Config s1 = build_scheme1(cfg);
        const CorrectionReport report = scheme1_run(s1);
        input = initial_state(s1.dot);
        cell1 = s1.cell1;
        cell2 = s1.cell2;
        ramp1 = scheme1_ramp(s1, 1, report.rate1, s1.delta_t);
        ramp2 = scheme1_ramp(s1, 2, report.rate2, s1.delta_t);
    } else {
        const Scheme2Config s2 = build_scheme2(cfg);
        const CorrectionReport report = scheme2_run(s2);
        input = initial_state_flipped(s2.dot);
        cell1 = cell2 = s2.cell;
        ramp1 = RampProfile{0.0, report.rate1, s2.lead_in1, 0.0};
        ramp2 = RampProfile{0.0, report.rate2, s2.lead_in2, 0.0};
    }
    const auto n = static_cast<std::size_t>(cfg.oracle.grid_points);
    const auto first = oracle::compare_transform(input, cell1, ramp1, 1, n, scale_corruption);
    add_check(rep, "transform photon 1 L2", first.l2_error, kTransformL2Tolerance);
    add_check(rep, "transform photon 1 phase", first.max_phase_error, kTransformPhaseTolerance);
    const TwoPhotonState middle = apply_cell(input, cell1, ramp1, 1);
    const auto second = oracle::compare_transform(middle, cell2, ramp2, 2, n, scale_corruption);
    add_check(rep, "transform photon 2 L2", second.l2_error, kTransformL2Tolerance);
    add_check(rep, "transform photon 2 phase", second.max_phase_error, kTransformPhaseTolerance);

    const TwoPhotonState output = apply_cell(middle, cell2, ramp2, 2);
    const int grid = cfg.oracle.dm_grid_points;
    add_check(rep, "density matrix input",
              max_entry_difference(oracle::density_matrix_grid(input, grid),
                                   polarization_density_matrix(input)),
              kDensityTolerance);
    add_check(rep, "density matrix output",
              max_entry_difference(oracle::density_matrix_grid(output, grid),
                                   polarization_density_matrix(output)),
              kDensityTolerance);
    return rep;
}

}  // namespace fsscomp
