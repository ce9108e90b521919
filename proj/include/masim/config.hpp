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
// Declarative experiment description. The on-disk form is a flat JSON
// object; unknown keys are rejected and every violation names the field.

#ifndef MASIM_CONFIG_HPP
#define MASIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "masim/sampler.hpp"

namespace masim
{

enum class ExperimentKind
{
    field_map,
    sweep_region,
    sweep_paths,
    power_ratio,
    cdf,
    correlation,
    period,
    bounds
};

const char *to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string &name);

struct ExperimentConfig
{
    ExperimentKind experiment = ExperimentKind::sweep_region;

    int l_r = 2;
    double sigma2 = 1.0;
    double region_side = 10.0;
    double grid_step = 0.05; // lambda / 20
    int n_realizations = 1000;
    std::uint64_t seed = 0;

    // Baselines. m = 0 means auto: floor(2 A + 1) antennas span the region.
    int as_m = 0;
    int dbf_m = 0;
    BaselineArray::Geometry geometry = BaselineArray::Geometry::linear_x;
    std::vector<std::string> schemes = {"MA", "FPA", "AS", "DBF"};

    // Experiment-specific lists.
    std::vector<double> region_sizes = {1, 2, 4, 8, 16};   // sweep-region, power-ratio, bounds
    std::vector<int> path_counts = {1, 2, 3, 4, 5, 6, 7, 8}; // sweep-paths
    std::vector<double> rho_values = {2, 10, 100};           // power-ratio
    std::vector<int> t_values = {2, 4, 8, 16, 32, 64, 128, 256, 512}; // period
    std::vector<double> d_values = {0.1, 0.25, 0.5, 1.0};    // correlation
    int p = 8;         // grid density for the upper harmonic bound
    int t_points = 400; // analytic-curve grid size
    bool emit_samples = false;

    // Deterministic field for field-map (per-path amplitude/phase/angles).
    std::vector<double> amplitudes;
    std::vector<double> phases;
    std::vector<double> thetas;
    std::vector<double> phis;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Parse and validate a flat JSON config document. Throws config_error
/// naming the offending field.
ExperimentConfig parse_config(const std::string &text);

/// JSON echo of a config (defaults applied); parse_config(serialize) is the
/// identity.
std::string serialize_config(const ExperimentConfig &config);

/// Resolved antenna count for a baseline at region side `a`: the configured
/// m, or floor(2 a + 1) when m = 0.
int resolve_baseline_m(int configured, double region_side);

} // namespace masim

#endif
