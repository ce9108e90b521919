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

#include "masim/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>

#include "masim/deterministic.hpp"
#include "masim/stochastic.hpp"

namespace masim
{

namespace
{

// Exceptions may not cross an OpenMP region; capture the first one and
// rethrow it after the loop.
class FirstError
{
  public:
    template <typename F> void guard(F &&body) noexcept
    {
        try
        {
            body();
        }
        catch (...)
        {
            const std::lock_guard<std::mutex> lock(mutex_);
            if (!error_)
                error_ = std::current_exception();
        }
    }

    void rethrow_if_any()
    {
        if (error_)
            std::rethrow_exception(error_);
    }

  private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

void finalize_stats(RunResult &r)
{
    const std::size_t n = r.samples.size();
    if (n == 0)
        return;
    double sum = 0.0;
    for (double x : r.samples)
        sum += x;
    r.mean = sum / static_cast<double>(n);
    if (n > 1)
    {
        double ss = 0.0;
        for (double x : r.samples)
            ss += (x - r.mean) * (x - r.mean);
        r.std_err = std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
    }
}

RunResult analytic_row(double sweep_value, std::string scheme, double value)
{
    RunResult r;
    r.sweep_value = sweep_value;
    r.scheme = std::move(scheme);
    r.mean = value;
    return r;
}

bool scheme_enabled(const ExperimentConfig &cfg, const char *name)
{
    return std::find(cfg.schemes.begin(), cfg.schemes.end(), name) != cfg.schemes.end();
}

// One Monte Carlo sweep point: the per-scheme relative-gain samples.
// Realization i draws from stream (seed, i) regardless of the sweep point,
// so nested regions search identical channels.
std::vector<RunResult> run_sweep_point(const ExperimentConfig &cfg, const ChannelSampler &sampler,
                                       double region_side, double sweep_value,
                                       const std::string &scheme_suffix)
{
    const Region region = Region::centered_square(region_side);
    const bool want_ma = scheme_enabled(cfg, "MA");
    const bool want_fpa = scheme_enabled(cfg, "FPA");
    const bool want_as = scheme_enabled(cfg, "AS");
    const bool want_dbf = scheme_enabled(cfg, "DBF");

    const BaselineArray as_array{cfg.geometry, resolve_baseline_m(cfg.as_m, region_side)};
    const BaselineArray dbf_array{cfg.geometry, resolve_baseline_m(cfg.dbf_m, region_side)};

    const int n = cfg.n_realizations;
    std::vector<double> ma(want_ma ? n : 0), fpa(want_fpa ? n : 0), as_(want_as ? n : 0),
        dbf(want_dbf ? n : 0);

    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        err.guard([&, i] {
            PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(i));
            const ChannelField field = sample_channel(sampler, rng);
            if (want_ma)
                ma[i] = relative_gain(ma_max_gain(field, region, cfg.grid_step), cfg.sigma2);
            if (want_fpa)
                fpa[i] = relative_gain(fpa_gain(field), cfg.sigma2);
            if (want_as)
                as_[i] = relative_gain(as_gain(field, as_array), cfg.sigma2);
            if (want_dbf)
                dbf[i] = relative_gain(dbf_gain(field, dbf_array), cfg.sigma2);
        });
    err.rethrow_if_any();

    std::vector<RunResult> rows;
    auto push = [&](const char *name, std::vector<double> &&samples) {
        RunResult r;
        r.sweep_value = sweep_value;
        r.scheme = name + scheme_suffix;
        r.samples = std::move(samples);
        finalize_stats(r);
        rows.push_back(std::move(r));
    };
    if (want_ma)
        push("MA", std::move(ma));
    if (want_fpa)
        push("FPA", std::move(fpa));
    if (want_as)
        push("AS", std::move(as_));
    if (want_dbf)
        push("DBF", std::move(dbf));
    return rows;
}

} // namespace

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
{
    if (sorted_.empty())
        throw std::domain_error("empirical CDF needs at least one sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double t) const
{
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), t);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<RunResult> run_sweep(const ExperimentConfig &cfg)
{
    std::vector<RunResult> rows;
    switch (cfg.experiment)
    {
    case ExperimentKind::sweep_region:
    {
        const ChannelSampler sampler{cfg.l_r, cfg.sigma2, {}, cfg.seed};
        for (double a : cfg.region_sizes)
        {
            auto point = run_sweep_point(cfg, sampler, a, a, "");
            rows.insert(rows.end(), std::make_move_iterator(point.begin()),
                        std::make_move_iterator(point.end()));
        }
        break;
    }
    case ExperimentKind::sweep_paths:
    {
        for (int l : cfg.path_counts)
        {
            const ChannelSampler sampler{l, cfg.sigma2, {}, cfg.seed};
            auto point = run_sweep_point(cfg, sampler, cfg.region_side, static_cast<double>(l), "");
            rows.insert(rows.end(), std::make_move_iterator(point.begin()),
                        std::make_move_iterator(point.end()));
        }
        break;
    }
    case ExperimentKind::power_ratio:
    {
        if (cfg.l_r != 2)
            throw config_error("l_r", "power-ratio experiment requires l_r = 2");
        for (double rho : cfg.rho_values)
        {
            const ChannelSampler sampler{2, cfg.sigma2, {rho, 1.0}, cfg.seed};
            char suffix[48];
            std::snprintf(suffix, sizeof(suffix), "(rho=%g)", rho);
            for (double a : cfg.region_sizes)
            {
                auto point = run_sweep_point(cfg, sampler, a, a, suffix);
                rows.insert(rows.end(), std::make_move_iterator(point.begin()),
                            std::make_move_iterator(point.end()));
            }
        }
        break;
    }
    default:
        throw config_error("experiment", "run_sweep handles sweep-region, sweep-paths, power-ratio");
    }
    return rows;
}

ExperimentOutput run_cdf_experiment(const ExperimentConfig &cfg)
{
    const ChannelSampler sampler{cfg.l_r, cfg.sigma2, {}, cfg.seed};
    const Region region = Region::centered_square(cfg.region_side);
    const int n = cfg.n_realizations;

    std::vector<double> max_gain(n);
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        err.guard([&, i] {
            PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(i));
            const ChannelField field = sample_channel(sampler, rng);
            max_gain[i] = ma_max_gain(field, region, cfg.grid_step);
        });
    err.rethrow_if_any();

    RunResult carrier;
    carrier.sweep_value = cfg.region_side;
    carrier.scheme = "MA";
    carrier.samples = max_gain;
    finalize_stats(carrier);

    const EmpiricalCdf emp(std::move(max_gain));
    const RayleighSumModel model{cfg.l_r, cfg.sigma2};
    auto analytic_cdf = [&](double t) {
        if (cfg.l_r == 1)
            return cdf_one(t, model);
        if (cfg.l_r == 2)
            return cdf_two(t, model);
        if (cfg.l_r == 3)
            return cdf_three_approx(t, model);
        return cdf_multi_ub_approx(t, model);
    };

    ExperimentOutput out;
    const double t_max = 5.0 * cfg.sigma2 * cfg.l_r;
    for (int j = 0; j < cfg.t_points; ++j)
    {
        const double t = t_max * j / (cfg.t_points - 1);
        out.rows.push_back(analytic_row(t, "analytic", analytic_cdf(t)));
        RunResult e = analytic_row(t, "empirical", emp(t));
        e.std_err = std::sqrt(e.mean * (1.0 - e.mean) / n);
        out.rows.push_back(std::move(e));
    }
    out.sample_carriers.push_back(std::move(carrier));
    return out;
}

std::vector<RunResult> run_correlation_experiment(const ExperimentConfig &cfg)
{
    const ChannelSampler sampler{cfg.l_r, cfg.sigma2, {}, cfg.seed};
    const int n = cfg.n_realizations;
    const std::size_t nd = cfg.d_values.size();

    std::vector<double> prod(static_cast<std::size_t>(n) * nd);
    FirstError err;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        err.guard([&, i] {
            PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(i));
            const ChannelField field = sample_channel(sampler, rng);
            cdouble h0 = 0.0;
            for (const auto &b : field.eprv)
                h0 += b;
            for (std::size_t j = 0; j < nd; ++j)
            {
                // Both points sit on the y axis, separated by d.
                cdouble hd = 0.0;
                for (std::size_t l = 0; l < field.paths(); ++l)
                    hd += field.eprv[l] *
                          unit_phasor(-cfg.d_values[j] * field.virtual_aoas[l].vartheta);
                prod[static_cast<std::size_t>(i) * nd + j] = std::real(std::conj(hd) * h0);
            }
        });
    err.rethrow_if_any();

    std::vector<RunResult> rows;
    for (std::size_t j = 0; j < nd; ++j)
    {
        const double d = cfg.d_values[j];
        rows.push_back(analytic_row(d, "analytic", spatial_correlation(d, cfg.sigma2)));
        RunResult e;
        e.sweep_value = d;
        e.scheme = "empirical";
        e.samples.resize(n);
        for (int i = 0; i < n; ++i)
            e.samples[i] = prod[static_cast<std::size_t>(i) * nd + j];
        finalize_stats(e);
        rows.push_back(std::move(e));
    }
    return rows;
}

std::vector<RunResult> run_period_experiment(const ExperimentConfig &cfg)
{
    const ChannelSampler sampler{cfg.l_r, cfg.sigma2, {}, cfg.seed};
    const int n = cfg.n_realizations;

    std::vector<RunResult> rows;
    for (int t_res : cfg.t_values)
    {
        std::vector<double> inside(n), extended(n);
        FirstError err;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            err.guard([&, i] {
                PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(i));
                const ChannelField field = sample_channel(sampler, rng);
                std::vector<double> varphi(field.paths());
                for (std::size_t l = 0; l < field.paths(); ++l)
                    varphi[l] = field.virtual_aoas[l].varphi;
                const PeriodEstimate est = quantized_period_x(varphi, t_res);
                // All quantized AoAs equal: both windows collapse to x = 0.
                const double x = est.constant_along_x ? 0.0 : est.period_x;
                inside[i] = scan_line_max(field, -x / 2.0, x / 2.0, 0.0, cfg.grid_step);
                extended[i] = scan_line_max(field, -5.0 * x, 5.0 * x, 0.0, cfg.grid_step);
            });
        err.rethrow_if_any();
        RunResult rin;
        rin.sweep_value = t_res;
        rin.scheme = "period-window";
        rin.samples = std::move(inside);
        finalize_stats(rin);
        rows.push_back(std::move(rin));

        RunResult rext;
        rext.sweep_value = t_res;
        rext.scheme = "extended-window";
        rext.samples = std::move(extended);
        finalize_stats(rext);
        rows.push_back(std::move(rext));
    }
    return rows;
}

std::vector<RunResult> run_bounds_experiment(const ExperimentConfig &cfg)
{
    const ChannelSampler sampler{cfg.l_r, cfg.sigma2, {}, cfg.seed};
    std::vector<RunResult> rows;
    for (double a : cfg.region_sizes)
    {
        const Region region = Region::centered_square(a);
        const int n = cfg.n_realizations;
        std::vector<double> gain(n);
        FirstError err;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            err.guard([&, i] {
                PhiloxStream rng(cfg.seed, static_cast<std::uint64_t>(i));
                const ChannelField field = sample_channel(sampler, rng);
                gain[i] = relative_gain(ma_max_gain(field, region, cfg.grid_step), cfg.sigma2);
            });
        err.rethrow_if_any();
        RunResult ma;
        ma.sweep_value = a;
        ma.scheme = "MA";
        ma.samples = std::move(gain);
        finalize_stats(ma);
        rows.push_back(std::move(ma));

        const RegionDiscretization disc(a, cfg.p);
        const HarmonicBounds hb = infinite_path_bounds(disc, 1.0);
        rows.push_back(analytic_row(a, "lower-bound", hb.lower));
        rows.push_back(analytic_row(a, "upper-bound", hb.upper));
    }
    return rows;
}

GainGrid run_field_map(const ExperimentConfig &cfg)
{
    ChannelField field;
    for (std::size_t l = 0; l < cfg.amplitudes.size(); ++l)
    {
        field.eprv.push_back(std::polar(cfg.amplitudes[l], cfg.phases[l]));
        field.virtual_aoas.push_back(virtual_aoa(PhysicalAngles{cfg.thetas[l], cfg.phis[l]}));
    }
    return scan_gain_grid(field, Region::centered_square(cfg.region_side), cfg.grid_step);
}

std::vector<RunResult> analytic_curves(const ExperimentConfig &cfg)
{
    std::vector<RunResult> rows;
    switch (cfg.experiment)
    {
    case ExperimentKind::cdf:
    {
        const RayleighSumModel model{cfg.l_r, cfg.sigma2};
        const double t_max = 5.0 * cfg.sigma2 * cfg.l_r;
        for (int j = 0; j < cfg.t_points; ++j)
        {
            const double t = t_max * j / (cfg.t_points - 1);
            double f;
            if (cfg.l_r == 1)
                f = cdf_one(t, model);
            else if (cfg.l_r == 2)
                f = cdf_two(t, model);
            else if (cfg.l_r == 3)
                f = cdf_three_approx(t, model);
            else
                f = cdf_multi_ub_approx(t, model);
            rows.push_back(analytic_row(t, "analytic", f));
        }
        break;
    }
    case ExperimentKind::bounds:
        for (double a : cfg.region_sizes)
        {
            const RegionDiscretization disc(a, cfg.p);
            const HarmonicBounds hb = infinite_path_bounds(disc, cfg.sigma2);
            rows.push_back(analytic_row(a, "lower-bound", hb.lower));
            rows.push_back(analytic_row(a, "upper-bound", hb.upper));
        }
        break;
    case ExperimentKind::correlation:
        for (int j = 0; j < cfg.t_points; ++j)
        {
            const double d = 2.0 * j / (cfg.t_points - 1);
            rows.push_back(analytic_row(d, "analytic", spatial_correlation(d, cfg.sigma2)));
        }
        break;
    default:
        break;
    }
    return rows;
}

ExperimentOutput run_experiment(const ExperimentConfig &cfg)
{
    ExperimentOutput out;
    switch (cfg.experiment)
    {
    case ExperimentKind::field_map:
        out.grid = run_field_map(cfg);
        break;
    case ExperimentKind::sweep_region:
    case ExperimentKind::sweep_paths:
    case ExperimentKind::power_ratio:
        out.rows = run_sweep(cfg);
        break;
    case ExperimentKind::cdf:
        out = run_cdf_experiment(cfg);
        break;
    case ExperimentKind::correlation:
        out.rows = run_correlation_experiment(cfg);
        break;
    case ExperimentKind::period:
        out.rows = run_period_experiment(cfg);
        break;
    case ExperimentKind::bounds:
        out.rows = run_bounds_experiment(cfg);
        break;
    }
    if (out.analytic.empty())
        out.analytic = analytic_curves(cfg);
    return out;
}

} // namespace masim
