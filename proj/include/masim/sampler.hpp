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
// Randomized channel generation and the per-realization scheme gains (MA
// exhaustive search, fixed antenna, antenna selection, MRC beamforming).

#ifndef MASIM_SAMPLER_HPP
#define MASIM_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "masim/channel.hpp"
#include "masim/grid_scan.hpp"
#include "masim/rng.hpp"

namespace masim
{

/// Describes the random channel ensemble: i.i.d. CSCG path responses with
/// total power sigma2, optionally weighted per path (the weights are
/// normalized so the variances still sum to sigma2).
struct ChannelSampler
{
    int l_r = 2;
    double sigma2 = 1.0;
    std::vector<double> power_ratios; // empty = equal power per path
    std::uint64_t seed = 0;

    std::vector<double> path_variances() const;
};

/// Draw one channel: b_l ~ CN(0, var_l); AoAs from the half-space cosine
/// density via the exact inverse transform (sin(theta) uniform on [-1, 1],
/// azimuth uniform on [-pi/2, pi/2]). Draw order per path: b, then
/// vartheta, then phi.
ChannelField sample_channel(const ChannelSampler &sampler, PhiloxStream &rng);

/// Fixed antenna array for the AS/DBF baselines, spaced exactly half a
/// wavelength and centered on the origin.
struct BaselineArray
{
    enum class Geometry
    {
        linear_x,
        square
    };

    Geometry geometry = Geometry::linear_x;
    int m = 1;

    std::vector<Position> positions() const;
};

/// Highest gain found by exhaustive search over the region.
double ma_max_gain(const ChannelField &field, const Region &region, double step);

/// Gain of a fixed antenna at the reference point.
double fpa_gain(const ChannelField &field);

/// Best single antenna out of the array.
double as_gain(const ChannelField &field, const BaselineArray &array);

/// MRC post-combining SNR numerator: sum of the per-branch gains.
double dbf_gain(const ChannelField &field, const BaselineArray &array);

} // namespace masim

#endif
