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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "esd/channels.hpp"
#include "esd/dynamics.hpp"
#include "esd/states.hpp"

namespace esd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Command { Sweep, Esd, Validate, Figure };

struct RunConfig {
    Command command = Command::Sweep;
    std::optional<NoiseKind> model;
    Dims dims{2, 3};
    Side side = Side::First;
    std::optional<double> p;
    double t_max = kFigureTMax;
    std::size_t steps = kFigureSteps;
    /// Empty or "-" writes to stdout.
    std::string output_path;
    /// Figure number in 1..4 (figure command only).
    int figure = 0;
};

/// Thrown for flag combinations that parse but make no sense together.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws UsageError when fields are inconsistent with the command.
void check_config(const RunConfig& config);

/// Executes a checked config. Returns one of the kExit* codes; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// printf "%.12g"; every number in CSV output goes through this.
std::string format_number(double x);

/// Header plus one row per grid point; all series must share a grid.
void write_csv(std::ostream& os, const std::vector<std::string>& column_labels,
               const std::vector<NegativitySeries>& series);

/// Curves for figure 1..4: GAD p-scans (1 on 2x3, 3 on 3x3) or depolarizing vs
/// GAD(p=0.5) (2 on 2x3, 4 on 3x3). Labels and series are returned in column order.
struct FigureData {
    std::vector<std::string> labels;
    std::vector<NegativitySeries> series;
};
FigureData figure_data(int figure, double t_max, std::size_t steps);

/// p values used for the GAD p-scan figures.
inline const std::vector<double> kFigurePValues{0.0, 0.25, 0.5, 0.75, 1.0};

}  // namespace esd::cli
