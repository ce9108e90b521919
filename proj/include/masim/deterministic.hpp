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
// Closed-form analysis of the channel-gain field for a fixed EPRV and fixed
// virtual AoAs: two- and three-path structure, gradients, maximum lines and
// points, adjacent-maximum spacing, and the quantized-AoA period.

#ifndef MASIM_DETERMINISTIC_HPP
#define MASIM_DETERMINISTIC_HPP

#include <array>
#include <span>

#include "masim/channel.hpp"

namespace masim
{

/// Two-path closed form: |b1|^2 + |b2|^2 + 2|b1||b2| cos(omega_12(r)).
double gain_two_path(const ChannelField &field, const Position &r);

/// Analytic gradient (d|h|^2/dx, d|h|^2/dy) of the two-path gain.
std::array<double, 2> gradient_two_path(const ChannelField &field, const Position &r);

/// Three-path closed form (pairwise cosine expansion).
double gain_three_path(const ChannelField &field, const Position &r);

/// Triangle-inequality bound (sum_l |b_l|)^2 on the gain, attained on the
/// maximum lines/points when the region is large enough.
double max_gain_bound(const ChannelField &field);

/// Family of parallel lines on which the two-path gain attains its bound.
/// Line k is the locus  x * dvarphi + y * dvartheta = offset(k).
struct MaxLineFamily
{
    double dvarphi = 0.0;   // varphi_1 - varphi_2
    double dvartheta = 0.0; // vartheta_1 - vartheta_2
    double phase_cycles = 0.0; // (mu_2 - mu_1) / (2 pi)
    double spacing = 0.0;      // distance between adjacent lines, wavelengths

    double offset(int k) const { return static_cast<double>(k) - phase_cycles; }

    /// Point on line k at signed arc length t from the foot of the normal.
    Position point_on_line(int k, double t) const;
};

MaxLineFamily max_line_family(const ChannelField &field);

/// Intersection of the k1-th and k2-th maximum lines of the three-path field.
Position max_points_three(const ChannelField &field, int k1, int k2);

struct AdjacentMaxDistances
{
    double d1 = 0.0;       // spacing of the k2 lattice direction
    double d2 = 0.0;       // spacing of the k1 lattice direction
    double diameter = 0.0; // sqrt(d1^2 + d2^2); region diameter that guarantees attainment
};

AdjacentMaxDistances adjacent_max_distances_three(const ChannelField &field);

/// Translation vector that leaves the three-path gain field invariant, for
/// the chosen integer pair (k12, k13).
Position period_vector_three(const ChannelField &field, int k12, int k13);

/// Gain period along the x axis for virtual AoAs quantized at resolution T.
struct PeriodEstimate
{
    double period_x = 0.0; // wavelengths; 0 when the gain is constant along x
    int resolution = 0;    // T
    int tau_star = 0;      // gcd of the quantized index differences; 0 if constant
    bool constant_along_x = false;
};

/// Quantize each varphi onto the grid {-1 + (2t - 1)/T}, then derive the
/// period T/(2 tau*) from the gcd of the index differences.
PeriodEstimate quantized_period_x(std::span<const double> varphi, int resolution);

/// Numerical-gradient hill climb inside `region` with backtracking step
/// halving; degrades to returning `start` on flat fields.
Position gradient_ascent_search(const ChannelField &field, const Region &region, Position start,
                                double step0, int iters);

} // namespace masim

#endif
