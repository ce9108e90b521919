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

#include "masim/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace masim
{

std::vector<double> ChannelSampler::path_variances() const
{
    if (l_r < 1)
        throw std::domain_error("path count must be at least 1");
    if (sigma2 <= 0.0)
        throw std::domain_error("sigma2 must be positive");
    if (power_ratios.empty())
        return std::vector<double>(l_r, sigma2 / l_r);

    if (static_cast<int>(power_ratios.size()) != l_r)
        throw dimension_error("power_ratios length does not match path count");
    double total = 0.0;
    for (double w : power_ratios)
    {
        if (w < 0.0)
            throw std::domain_error("power ratios must be nonnegative");
        total += w;
    }
    if (total <= 0.0)
        throw std::domain_error("power ratios must have positive sum");
    std::vector<double> vars(l_r);
    for (int l = 0; l < l_r; ++l)
        vars[l] = sigma2 * power_ratios[l] / total;
    return vars;
}

ChannelField sample_channel(const ChannelSampler &sampler, PhiloxStream &rng)
{
    const std::vector<double> vars = sampler.path_variances();
    constexpr double half_pi = 1.57079632679489661923;

    ChannelField field;
    field.eprv.reserve(vars.size());
    field.virtual_aoas.reserve(vars.size());
    for (double var : vars)
    {
        field.eprv.push_back(rng.next_cscg(var));
        const double vartheta = rng.next_uniform(-1.0, 1.0);
        const double phi = rng.next_uniform(-half_pi, half_pi);
        const double cos_theta = std::sqrt(std::max(0.0, 1.0 - vartheta * vartheta));
        field.virtual_aoas.push_back(VirtualAngles{cos_theta * std::sin(phi), vartheta});
    }
    return field;
}

std::vector<Position> BaselineArray::positions() const
{
    if (m < 1)
        throw std::domain_error("antenna count must be at least 1");
    constexpr double spacing = 0.5;
    std::vector<Position> pos;
    pos.reserve(m);
    if (geometry == Geometry::linear_x)
    {
        const double origin = -spacing * (m - 1) / 2.0;
        for (int i = 0; i < m; ++i)
            pos.push_back(Position{origin + spacing * i, 0.0});
    }
    else
    {
        const int k = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m))));
        if (k * k != m)
            throw std::domain_error("square array needs a perfect-square antenna count");
        const double origin = -spacing * (k - 1) / 2.0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                pos.push_back(Position{origin + spacing * i, origin + spacing * j});
    }
    return pos;
}

double ma_max_gain(const ChannelField &field, const Region &region, double step)
{
    return scan_gain_grid(field, region, step).max_value;
}

double fpa_gain(const ChannelField &field)
{
    return channel_gain(field, Position{0.0, 0.0});
}

double as_gain(const ChannelField &field, const BaselineArray &array)
{
    double best = 0.0;
    bool first = true;
    for (const Position &p : array.positions())
    {
        const double g = channel_gain(field, p);
        if (first || g > best)
        {
            best = g;
            first = false;
        }
    }
    return best;
}

double dbf_gain(const ChannelField &field, const BaselineArray &array)
{
    double total = 0.0;
    for (const Position &p : array.positions())
        total += channel_gain(field, p);
    return total;
}

} // namespace masim
