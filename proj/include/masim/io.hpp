// SPDX-License-Identifier: Apache-2.0
//
// masim - movable-antenna channel modeling and simulation library
// Copyright (C) 2026 masim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Output artifacts. All CSVs are UTF-8 with '\n' newlines, a header row,
// floats at 17 significant digits, and rows sorted by the sweep variable
// then the scheme name, so reruns are byte-identical.

#ifndef MASIM_IO_HPP
#define MASIM_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "masim/experiment.hpp"

namespace masim
{

/// "%.17g" rendering used everywhere a float reaches a file.
std::string format_float(double v);

/// `sweep_value,scheme,mean,stderr` rows (sorted copy).
void write_rows_csv(const std::filesystem::path &path, std::vector<RunResult> rows);

/// `x,y,gain` rows of a gain grid in row-major order.
void write_grid_csv(const std::filesystem::path &path, const GainGrid &grid);

void write_meta_json(const std::filesystem::path &path, const ExperimentConfig &config,
                     double runtime_seconds);

void write_samples_json(const std::filesystem::path &path, const ExperimentConfig &config,
                        const std::vector<RunResult> &rows);

struct ExperimentFiles
{
    std::filesystem::path csv;
    std::filesystem::path meta;
    std::filesystem::path analytic; // empty when not emitted
    std::filesystem::path samples;  // empty when not emitted
};

/// Run the configured experiment and write `<experiment>.csv`,
/// `<experiment>.meta.json` and, where applicable, `<experiment>.analytic.csv`
/// and `<experiment>.samples.json` under `out_dir`.
ExperimentFiles run_experiment_to_files(const ExperimentConfig &config,
                                        const std::filesystem::path &out_dir);

} // namespace masim

#endif
