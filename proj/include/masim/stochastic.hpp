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
// Closed-form stochastic performance of the receive MA under i.i.d. CSCG
// path responses: expected maximum channel gains, SNR-gain ratios, exact and
// approximate CDFs, outage probabilities, the sinc spatial correlation, and
// the order-statistic bounds for the isotropic infinite-path regime.

#ifndef MASIM_STOCHASTIC_HPP
#define MASIM_STOCHASTIC_HPP

#include <cstdint>

namespace masim
{

/// i.i.d. receive path responses b_l ~ CN(0, sigma2 / l_r).
struct RayleighSumModel
{
    int l_r = 1;         // receive path count, >= 1
    double sigma2 = 1.0; // total average power, > 0
};

/// Square receive region of side `a` wavelengths, discretized at `p` grid
/// points per wavelength. n_lb counts positions spaced by half a wavelength
/// (treated as independent); n_ub counts all grid cells.
struct RegionDiscretization
{
    double a = 0.0;
    int p = 2;
    long n_lb = 1;
    long n_ub = 1;

    RegionDiscretization(double side, int density);
};

struct ExpectedGain
{
    double value = 0.0;
    bool is_exact = true; // exact for l_r <= 3, upper bound beyond
};

enum class CdfKind
{
    one,
    two,
    three_approx,
    multi_ub_approx
};

/// Expected channel gain at the reference point: sigma2 for every path count.
double expected_gain_reference(const RayleighSumModel &model);

/// Expected maximum channel gain over an unbounded region:
/// [1 + (l_r - 1) pi / 4] sigma2, exact for l_r <= 3.
ExpectedGain expected_max_gain(const RayleighSumModel &model);

/// Expected maximum gain normalized by the reference gain.
ExpectedGain relative_snr_gain(const RayleighSumModel &model);

/// Exact CDF of the single-path gain |b_1|^2.
double cdf_one(double t, const RayleighSumModel &model);

/// Exact CDF of the two-path maximum gain (|b_1| + |b_2|)^2.
double cdf_two(double t, const RayleighSumModel &model);

/// Small-argument approximation of the three-path maximum-gain CDF.
double cdf_three_approx(double t, const RayleighSumModel &model);

/// Small-argument approximation of the CDF of (sum_l |b_l|)^2 for any l_r.
double cdf_multi_ub_approx(double t, const RayleighSumModel &model);

/// Outage probability: the selected CDF evaluated at delta2 gamma_th / p_t.
double outage_probability(double p_t, double delta2, double gamma_th, const RayleighSumModel &model,
                          CdfKind which);

/// Spatial correlation of the isotropic infinite-path channel at separation
/// d wavelengths: sigma2 * sinc(2 d), with sinc(u) = sin(pi u) / (pi u).
double spatial_correlation(double d, double sigma2);

struct HarmonicBounds
{
    double lower = 0.0;
    double upper = 0.0;
};

/// Expected-maximum-gain bounds for the infinite-path channel: partial
/// harmonic sums sigma2 * H_{n_lb} and sigma2 * H_{n_ub}.
HarmonicBounds infinite_path_bounds(const RegionDiscretization &disc, double sigma2);

struct CdfBounds
{
    double lb_cdf = 0.0; // CDF of the lower bound on the max gain
    double ub_cdf = 0.0; // CDF of the upper bound on the max gain
};

/// (1 - e^{-t/sigma2})^{n_lb} and (1 - e^{-t/sigma2})^{n_ub}.
CdfBounds cdf_infinite_bounds(double t, const RegionDiscretization &disc, double sigma2);

/// Gaussian tail probability Q(t) via the complementary error function.
double gaussian_q(double t);

/// Partial harmonic sum H_n = sum_{k=1}^{n} 1/k.
double harmonic_number(long n);

} // namespace masim

#endif
