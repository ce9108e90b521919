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
// Monte Carlo experiment engines behind the CLI. Realizations are
// independent work items: realization i always draws from the Philox stream
// (seed, i) and results are reduced in realization order, so every engine is
// bit-reproducible for any OpenMP thread count.

#ifndef MASIM_EXPERIMENT_HPP
#define MASIM_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "masim/config.hpp"
#include "masim/grid_scan.hpp"
#include "masim/sampler.hpp"

namespace masim
{

/// One curve point of an experiment: per-realization scalar outcomes
/// (relative SNR gain, gain, CDF value, ...) with their mean.
struct RunResult
{
    double sweep_value = 0.0;
    std::string scheme;
    std::vector<double> samples; // empty for analytic rows
    double mean = 0.0;
    double std_err = 0.0;
};

/// Right-continuous empirical CDF of a sample set.
class EmpiricalCdf
{
  public:
    explicit EmpiricalCdf(std::vector<double> samples);

    /// Fraction of samples <= t.
    double operator()(double t) const;

    const std::vector<double> &sorted() const noexcept { return sorted_; }

  private:
    std::vector<double> sorted_;
};

struct ExperimentOutput
{
    std::vector<RunResult> rows;          // main CSV rows (all experiments but field-map)
    std::optional<GainGrid> grid;         // field-map only
    std::vector<RunResult> analytic;      // standalone analytic-curve rows
    std::vector<RunResult> sample_carriers; // rows whose samples feed the JSON dump
};

/// Relative SNR gain of one realization outcome: the scheme SNR divided by
/// the expected reference SNR p_t sigma2 / delta2, i.e. gain / sigma2.
inline double relative_gain(double gain, double sigma2) { return gain / sigma2; }

/// sweep-region, sweep-paths and power-ratio engines.
std::vector<RunResult> run_sweep(const ExperimentConfig &config);

/// Analytic + empirical CDF of the MA maximum gain on a shared t-grid.
ExperimentOutput run_cdf_experiment(const ExperimentConfig &config);

/// Monte Carlo spatial correlation against sigma2 * sinc(2d).
std::vector<RunResult> run_correlation_experiment(const ExperimentConfig &config);

/// Mean maximum gain within one quantized period vs. a 10x window, per
/// quantization resolution T.
std::vector<RunResult> run_period_experiment(const ExperimentConfig &config);

/// Mean MA gain per region size against the harmonic order-statistic bounds.
std::vector<RunResult> run_bounds_experiment(const ExperimentConfig &config);

/// Deterministic gain map of a configured field.
GainGrid run_field_map(const ExperimentConfig &config);

/// Tabulated closed forms for overlay plotting (cdf, bounds, correlation).
std::vector<RunResult> analytic_curves(const ExperimentConfig &config);

/// Dispatch on config.experiment; fills every applicable output member.
ExperimentOutput run_experiment(const ExperimentConfig &config);

} // namespace masim

#endif
