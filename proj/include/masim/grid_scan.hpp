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
// Exhaustive gain-field scans. Two kernels compute the same lattice:
//
//   serial_reference  - one channel_gain() call per lattice point; slow,
//                       obviously correct, kept for testing.
//   parallel          - OpenMP over x-rows with a per-path phasor recurrence
//                       along y inside each row. Rows are reduced in index
//                       order, so the result is identical for any worker
//                       count.
//
// tools/bench_grid_scan compares the two.

#ifndef MASIM_GRID_SCAN_HPP
#define MASIM_GRID_SCAN_HPP

#include <cstddef>
#include <vector>

#include "masim/channel.hpp"

namespace masim
{

/// Sampled gain surface over a region with its maximum and argmax.
struct GainGrid
{
    Region region;
    double step = 0.0;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<double> values; // row-major, values[ix * ny + iy]
    Position argmax;
    double max_value = 0.0;

    double value(std::size_t ix, std::size_t iy) const { return values[ix * ny + iy]; }
    Position point(std::size_t ix, std::size_t iy) const
    {
        return Position{region.x_min + static_cast<double>(ix) * step,
                        region.y_min + static_cast<double>(iy) * step};
    }
};

enum class ScanMode
{
    serial_reference,
    parallel
};

inline constexpr std::size_t kDefaultCellCap = 100000000;

/// Sample channel_gain on the inclusive lattice {x_min, x_min+step, ...} x
/// {y_min, ...}. Ties in the maximum go to the smallest (ix, iy) index.
GainGrid scan_gain_grid(const ChannelField &field, const Region &region, double step,
                        ScanMode mode = ScanMode::parallel, std::size_t cell_cap = kDefaultCellCap);

/// Maximum gain on a 1-D segment y = y0, x in [x_min, x_max], sampled at
/// `step` (inclusive lattice). Serial; used by the period experiment.
double scan_line_max(const ChannelField &field, double x_min, double x_max, double y0, double step);

} // namespace masim

#endif
