// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "esd/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "esd/entanglement.hpp"
#include "esd/errors.hpp"

namespace esd::cli {

namespace {

constexpr double kValidateTol = 1e-12;
const std::vector<double> kValidateTimes{0.0, 0.5, 1.0, 2.0, 10.0};

std::string format_p(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

std::string curve_label(const NoiseModel& model) {
    if (model.kind() == NoiseKind::GeneralizedAmplitudeDamping) return "N(p=" + format_p(*model.p()) + ")";
    return "N(" + model.label() + ")";
}

// CSV target: a file when a path is given, otherwise the fallback stream.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
        to_file_ = true;
    }
    bool ok() const { return !to_file_ || file_.is_open(); }
    std::ostream& stream(std::ostream& fallback) { return to_file_ ? file_ : fallback; }
    bool flush_ok() {
        if (!to_file_) return true;
        file_.flush();
        return static_cast<bool>(file_);
    }

private:
    bool to_file_ = false;
    std::ofstream file_;
};

int emit_csv(const RunConfig& config, const std::vector<std::string>& labels,
             const std::vector<NegativitySeries>& series, std::ostream& out, std::ostream& err) {
    Sink sink(config.output_path);
    if (!sink.ok()) {
        err << "error: cannot open output file '" << config.output_path << "'\n";
        return kExitUsage;
    }
    write_csv(sink.stream(out), labels, series);
    if (!sink.flush_ok()) {
        err << "error: failed writing '" << config.output_path << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_validate(std::ostream& out) {
    struct Family {
        NoiseModel model;
        int dim;
    };
    std::vector<Family> families;
    for (int dim : {2, 3}) {
        families.push_back({NoiseModel::amplitude_damping(), dim});
        families.push_back({NoiseModel::phase_damping(), dim});
        for (double p : kFigurePValues) families.push_back({NoiseModel::generalized_amplitude_damping(p), dim});
        families.push_back({NoiseModel::depolarizing(), dim});
    }

    int failures = 0;
    int checks = 0;
    for (const auto& family : families) {
        // Qubit channels act on the qubit of a 2x3 state, qutrit channels on a 3x3 state.
        const Dims dims{family.dim, 3};
        const auto initial = to_density(max_entangled(dims));
        for (double t : kValidateTimes) {
            ++checks;
            const auto channel = kraus_set(family.model, family.dim, t);
            const double defect = completeness_defect(channel);
            bool ok = defect <= kValidateTol;
            std::string state_note = "state ok";
            try {
                (void)apply_local(channel, initial, Side::First);
            } catch (const NumericalError& e) {
                ok = false;
                state_note = std::string("state invalid: ") + e.what();
            }
            if (!ok) ++failures;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3e", defect);
            out << (ok ? "ok   " : "FAIL ") << family.model.label() << " dim=" << family.dim
                << " gamma_t=" << format_number(t) << " completeness_defect=" << buf << ' ' << state_note
                << '\n';
        }
    }
    out << "validate: " << (checks - failures) << "/" << checks << " checks passed\n";
    return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& column_labels,
               const std::vector<NegativitySeries>& series) {
    if (series.empty() || column_labels.size() != series.size()) {
        throw std::invalid_argument("write_csv: one label per series required");
    }
    const std::size_t rows = series.front().samples.size();
    for (const auto& s : series) {
        if (s.samples.size() != rows) throw std::invalid_argument("write_csv: series lengths differ");
    }
    os << "gamma_t";
    for (const auto& label : column_labels) os << ',' << label;
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        os << format_number(series.front().samples[r].gamma_t);
        for (const auto& s : series) os << ',' << format_number(s.samples[r].negativity);
        os << '\n';
    }
}

FigureData figure_data(int figure, double t_max, std::size_t steps) {
    FigureData data;
    switch (figure) {
        case 1:
        case 3: {
            const Dims dims = figure == 1 ? Dims{2, 3} : Dims{3, 3};
            data.series = gad_p_scan(dims, kFigurePValues, t_max, steps);
            break;
        }
        case 2:
        case 4: {
            const Dims dims = figure == 2 ? Dims{2, 3} : Dims{3, 3};
            data.series = compare({NoiseModel::depolarizing(), NoiseModel::generalized_amplitude_damping(0.5)},
                                  dims, t_max, steps);
            break;
        }
        default: throw UsageError("figure must be 1, 2, 3 or 4");
    }
    for (const auto& s : data.series) data.labels.push_back(curve_label(s.model));
    return data;
}

void check_config(const RunConfig& config) {
    require_supported(config.dims);
    if (config.command == Command::Sweep || config.command == Command::Esd) {
        if (!config.model) throw UsageError("--model is required");
        const bool gad = *config.model == NoiseKind::GeneralizedAmplitudeDamping;
        if (gad && !config.p) throw UsageError("--p is required for gad");
        if (!gad && config.p) throw UsageError("--p only applies to gad");
        if (config.p && !(*config.p >= 0.0 && *config.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
        if (config.dims.a > config.dims.b) throw UsageError("dims must have the smaller side first");
    }
    if (config.command == Command::Figure && (config.figure < 1 || config.figure > 4)) {
        throw UsageError("figure must be 1, 2, 3 or 4");
    }
    if (config.command != Command::Validate) {
        if (!(config.t_max > 0.0) || !std::isfinite(config.t_max)) throw UsageError("t_max must be > 0");
        if (config.command != Command::Esd && config.steps < 2) throw UsageError("steps must be >= 2");
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        check_config(config);
        switch (config.command) {
            case Command::Sweep: {
                const auto model = NoiseModel::make(*config.model, config.p);
                auto series = sweep(model, config.dims, config.side, config.t_max, config.steps);
                return emit_csv(config, {curve_label(model)}, {std::move(series)}, out, err);
            }
            case Command::Esd: {
                const auto model = NoiseModel::make(*config.model, config.p);
                const auto result = esd_time(model, config.dims, config.side, config.t_max);
                if (result.verdict == EsdVerdict::FiniteTime) {
                    char buf[48];
                    std::snprintf(buf, sizeof buf, "FiniteTime %.8f", *result.time);
                    out << buf << '\n';
                } else {
                    out << "Asymptotic -\n";
                }
                if (result.verdict == EsdVerdict::FiniteTime && !result.ppt_certifies_separability) {
                    err << "note: zero negativity does not certify separability for " << config.dims.to_string()
                        << " states\n";
                }
                return kExitOk;
            }
            case Command::Validate: return run_validate(out);
            case Command::Figure: {
                auto data = figure_data(config.figure, config.t_max, config.steps);
                return emit_csv(config, data.labels, data.series, out, err);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement decay of maximally entangled qubit-qutrit and qutrit-qutrit states under one-sided noise"};
    app.require_subcommand(1);

    RunConfig config;
    std::string model_text;
    std::string dims_text = "2x3";
    std::string side_text = "first";
    std::optional<double> p;
    std::optional<double> t_max;
    std::optional<std::size_t> steps;

    auto add_model_flags = [&](CLI::App* sub) {
        sub->add_option("--model", model_text, "ad | pd | gad | depolarizing")->required();
        sub->add_option("--dims", dims_text, "2x2 | 2x3 | 3x3")->capture_default_str();
        sub->add_option("--side", side_text, "subsystem the noise acts on: first | second")->capture_default_str();
        sub->add_option("--p", p, "GAD mixing probability in [0, 1]");
        sub->add_option("--t-max", t_max, "end of the gamma_t interval");
    };

    auto* sweep_cmd = app.add_subcommand("sweep", "Negativity on a uniform gamma_t grid, as CSV");
    add_model_flags(sweep_cmd);
    sweep_cmd->add_option("--steps", steps, "number of grid points (>= 2)");
    sweep_cmd->add_option("--out", config.output_path, "output CSV path (default stdout)");

    auto* esd_cmd = app.add_subcommand("esd", "Detect entanglement sudden death; prints '<verdict> <time-or-dash>'");
    add_model_flags(esd_cmd);

    app.add_subcommand("validate", "Check completeness and output validity of every Kraus family");

    auto* figure_cmd = app.add_subcommand("figure", "CSV with the curves of figure 1, 2, 3 or 4");
    figure_cmd->add_option("number", config.figure, "figure number")->required();
    figure_cmd->add_option("--t-max", t_max, "end of the gamma_t interval");
    figure_cmd->add_option("--steps", steps, "number of grid points (>= 2)");
    figure_cmd->add_option("--out", config.output_path, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; everything else is a usage error.
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sweep_cmd) {
            config.command = Command::Sweep;
        } else if (*esd_cmd) {
            config.command = Command::Esd;
        } else if (*figure_cmd) {
            config.command = Command::Figure;
        } else {
            config.command = Command::Validate;
        }
        if (config.command == Command::Sweep || config.command == Command::Esd) {
            config.model = parse_noise_kind(model_text);
            config.dims = Dims::parse(dims_text);
            config.side = parse_side(side_text);
            config.p = p;
        }
        config.t_max = t_max.value_or(config.command == Command::Esd ? kAsymptoticHorizon : kFigureTMax);
        config.steps = steps.value_or(kFigureSteps);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace esd::cli
