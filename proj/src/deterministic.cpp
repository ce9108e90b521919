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

#include "masim/deterministic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace masim
{

namespace
{

constexpr double kDegeneracyEps = 1e-12;

void require_paths(const ChannelField &field, std::size_t n, const char *op)
{
    if (field.paths() != n)
        throw arity_error(std::string(op) + " requires a field with exactly " + std::to_string(n) +
                          " paths");
}

// omega_{m,n}(r) = 2 pi [x (varphi_m - varphi_n) + y (vartheta_m - vartheta_n)] + mu_n - mu_m
double omega(const ChannelField &f, std::size_t m, std::size_t n, const Position &r)
{
    const double dph = f.virtual_aoas[m].varphi - f.virtual_aoas[n].varphi;
    const double dth = f.virtual_aoas[m].vartheta - f.virtual_aoas[n].vartheta;
    return kTwoPi * (r.x * dph + r.y * dth) + std::arg(f.eprv[n]) - std::arg(f.eprv[m]);
}

struct ThreePathGeometry
{
    double dph12, dph13, dth12, dth13;
    double xi1, xi2;
};

ThreePathGeometry three_path_geometry(const ChannelField &f)
{
    require_paths(f, 3, "three-path analysis");
    ThreePathGeometry g;
    g.dph12 = f.virtual_aoas[0].varphi - f.virtual_aoas[1].varphi;
    g.dph13 = f.virtual_aoas[0].varphi - f.virtual_aoas[2].varphi;
    g.dth12 = f.virtual_aoas[0].vartheta - f.virtual_aoas[1].vartheta;
    g.dth13 = f.virtual_aoas[0].vartheta - f.virtual_aoas[2].vartheta;
    g.xi1 = g.dph12 * g.dth13 - g.dph13 * g.dth12;
    g.xi2 = g.dth12 * g.dph13 - g.dth13 * g.dph12;
    if (std::abs(g.xi1) < kDegeneracyEps || std::abs(g.xi2) < kDegeneracyEps)
        throw collinear_angles_error("three-path virtual AoAs are affinely dependent");
    return g;
}

} // namespace

double gain_two_path(const ChannelField &field, const Position &r)
{
    require_paths(field, 2, "gain_two_path");
    const double a1 = std::abs(field.eprv[0]);
    const double a2 = std::abs(field.eprv[1]);
    return a1 * a1 + a2 * a2 + 2.0 * a1 * a2 * std::cos(omega(field, 0, 1, r));
}

std::array<double, 2> gradient_two_path(const ChannelField &field, const Position &r)
{
    require_paths(field, 2, "gradient_two_path");
    const double a1 = std::abs(field.eprv[0]);
    const double a2 = std::abs(field.eprv[1]);
    const double g = -2.0 * kTwoPi * a1 * a2 * std::sin(omega(field, 0, 1, r));
    return {g * (field.virtual_aoas[0].varphi - field.virtual_aoas[1].varphi),
            g * (field.virtual_aoas[0].vartheta - field.virtual_aoas[1].vartheta)};
}

double gain_three_path(const ChannelField &field, const Position &r)
{
    require_paths(field, 3, "gain_three_path");
    const double a1 = std::abs(field.eprv[0]);
    const double a2 = std::abs(field.eprv[1]);
    const double a3 = std::abs(field.eprv[2]);
    return a1 * a1 + a2 * a2 + a3 * a3 + 2.0 * a1 * a2 * std::cos(omega(field, 0, 1, r)) +
           2.0 * a1 * a3 * std::cos(omega(field, 0, 2, r)) +
           2.0 * a2 * a3 * std::cos(omega(field, 1, 2, r));
}

double max_gain_bound(const ChannelField &field)
{
    if (field.paths() < 1)
        throw dimension_error("field needs at least one path");
    double s = 0.0;
    for (const auto &b : field.eprv)
        s += std::abs(b);
    return s * s;
}

Position MaxLineFamily::point_on_line(int k, double t) const
{
    const double n2 = dvarphi * dvarphi + dvartheta * dvartheta;
    const double n = std::sqrt(n2);
    const double c = offset(k);
    return Position{c * dvarphi / n2 - t * dvartheta / n, c * dvartheta / n2 + t * dvarphi / n};
}

MaxLineFamily max_line_family(const ChannelField &field)
{
    require_paths(field, 2, "max_line_family");
    MaxLineFamily fam;
    fam.dvarphi = field.virtual_aoas[0].varphi - field.virtual_aoas[1].varphi;
    fam.dvartheta = field.virtual_aoas[0].vartheta - field.virtual_aoas[1].vartheta;
    const double n = std::hypot(fam.dvarphi, fam.dvartheta);
    if (n < kDegeneracyEps)
        throw degenerate_geometry_error("identical virtual AoAs: gain is constant, no line family");
    fam.phase_cycles = (std::arg(field.eprv[1]) - std::arg(field.eprv[0])) / kTwoPi;
    fam.spacing = 1.0 / n;
    return fam;
}

Position max_points_three(const ChannelField &field, int k1, int k2)
{
    const ThreePathGeometry g = three_path_geometry(field);
    const double mu1 = std::arg(field.eprv[0]);
    const double mu2 = std::arg(field.eprv[1]);
    const double mu3 = std::arg(field.eprv[2]);
    const double p1 = k1 * kTwoPi + mu1 - mu2;
    const double p2 = k2 * kTwoPi + mu1 - mu3;
    return Position{(p1 * g.dth13 - p2 * g.dth12) / (kTwoPi * g.xi1),
                    (p1 * g.dph13 - p2 * g.dph12) / (kTwoPi * g.xi2)};
}

AdjacentMaxDistances adjacent_max_distances_three(const ChannelField &field)
{
    const ThreePathGeometry g = three_path_geometry(field);
    AdjacentMaxDistances d;
    d.d1 = std::hypot(g.dth12 / g.xi1, g.dph12 / g.xi2);
    d.d2 = std::hypot(g.dth13 / g.xi1, g.dph13 / g.xi2);
    d.diameter = std::hypot(d.d1, d.d2);
    return d;
}

Position period_vector_three(const ChannelField &field, int k12, int k13)
{
    const ThreePathGeometry g = three_path_geometry(field);
    return Position{(k12 * g.dth13 - k13 * g.dth12) / g.xi1, (k12 * g.dph13 - k13 * g.dph12) / g.xi2};
}

PeriodEstimate quantized_period_x(std::span<const double> varphi, int resolution)
{
    if (resolution < 2)
        throw std::domain_error("quantization resolution T must be at least 2");
    if (varphi.size() < 2)
        throw dimension_error("quantized period needs at least two virtual AoAs");

    // Nearest grid index for Delta_t = -1 + (2t - 1)/T, clamped to 1..T.
    std::vector<long> idx;
    idx.reserve(varphi.size());
    for (double v : varphi)
    {
        long t = std::llround((v + 1.0) * resolution / 2.0 + 0.5);
        t = std::clamp(t, 1L, static_cast<long>(resolution));
        idx.push_back(t);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    PeriodEstimate est;
    est.resolution = resolution;
    if (idx.size() < 2)
    {
        est.constant_along_x = true;
        return est;
    }
    long g = 0;
    for (std::size_t i = 1; i < idx.size(); ++i)
        g = std::gcd(g, idx[i] - idx[i - 1]);
    est.tau_star = static_cast<int>(g);
    est.period_x = static_cast<double>(resolution) / (2.0 * g);
    return est;
}

Position gradient_ascent_search(const ChannelField &field, const Region &region, Position start,
                                double step0, int iters)
{
    constexpr double h = 1e-5;
    constexpr double min_step = 1e-8;

    Position pos = region.clamp(start);
    double best = channel_gain(field, pos);
    double step = step0;

    for (int it = 0; it < iters && step >= min_step; ++it)
    {
        const double gx = (channel_gain(field, {pos.x + h, pos.y}) -
                           channel_gain(field, {pos.x - h, pos.y})) /
                          (2.0 * h);
        const double gy = (channel_gain(field, {pos.x, pos.y + h}) -
                           channel_gain(field, {pos.x, pos.y - h})) /
                          (2.0 * h);
        const double norm = std::hypot(gx, gy);
        if (norm == 0.0)
            break;
        const Position cand = region.clamp({pos.x + step * gx / norm, pos.y + step * gy / norm});
        const double g = channel_gain(field, cand);
        // Improvement must clear the FP noise floor, or constant fields walk.
        if (g > best + 1e-14 * best)
        {
            pos = cand;
            best = g;
        }
        else
        {
            step *= 0.5;
        }
    }
    return pos;
}

} // namespace masim
