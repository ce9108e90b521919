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

#include "masim/grid_scan.hpp"

#include <cmath>

namespace masim
{

namespace
{

// Inclusive lattice point count along one axis; tolerant of the usual
// floating-point shortfall in (max - min) / step.
std::size_t lattice_count(double lo, double hi, double step)
{
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1.0 + 1e-9));
}

// One x-row: gains for all iy. Phasors advance by a constant per-path
// factor, one complex multiply per path per point instead of an exp. The
// magnitude drift after n steps is about n * eps, well below the test
// tolerances for any realistic row length.
void scan_row_recurrence(const ChannelField &field, double x, double y_min, double step,
                         std::size_t ny, double *row)
{
    const std::size_t paths = field.paths();
    thread_local std::vector<cdouble> w;
    thread_local std::vector<cdouble> u;
    w.resize(paths);
    u.resize(paths);
    for (std::size_t l = 0; l < paths; ++l)
    {
        const VirtualAngles &v = field.virtual_aoas[l];
        w[l] = field.eprv[l] * unit_phasor(-(x * v.varphi + y_min * v.vartheta));
        u[l] = unit_phasor(-step * v.vartheta);
    }
    for (std::size_t iy = 0; iy < ny; ++iy)
    {
        cdouble acc = 0.0;
        for (std::size_t l = 0; l < paths; ++l)
        {
            acc += w[l];
            w[l] *= u[l];
        }
        row[iy] = std::norm(acc);
    }
}

} // namespace

GainGrid scan_gain_grid(const ChannelField &field, const Region &region, double step, ScanMode mode,
                        std::size_t cell_cap)
{
    if (field.eprv.size() != field.virtual_aoas.size())
        throw dimension_error("EPRV and virtual AoA lists differ in length");
    if (step <= 0.0)
        throw std::domain_error("grid step must be positive");
    if (region.x_min > region.x_max || region.y_min > region.y_max)
        throw std::domain_error("empty region");

    GainGrid grid;
    grid.region = region;
    grid.step = step;
    grid.nx = lattice_count(region.x_min, region.x_max, step);
    grid.ny = lattice_count(region.y_min, region.y_max, step);
    if (grid.nx > cell_cap || grid.ny > cell_cap || grid.nx * grid.ny > cell_cap)
        throw resource_error("grid of " + std::to_string(grid.nx) + " x " + std::to_string(grid.ny) +
                             " cells exceeds the cap of " + std::to_string(cell_cap));
    grid.values.resize(grid.nx * grid.ny);

    if (mode == ScanMode::serial_reference)
    {
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
            for (std::size_t iy = 0; iy < grid.ny; ++iy)
                grid.values[ix * grid.ny + iy] = channel_gain(field, grid.point(ix, iy));
    }
    else
    {
        const long n_rows = static_cast<long>(grid.nx);
#pragma omp parallel for schedule(static)
        for (long ix = 0; ix < n_rows; ++ix)
        {
            const double x = region.x_min + static_cast<double>(ix) * step;
            scan_row_recurrence(field, x, region.y_min, step, grid.ny,
                                grid.values.data() + static_cast<std::size_t>(ix) * grid.ny);
        }
    }

    // Index-ordered max: first strictly greater value wins, so the argmax is
    // the smallest (ix, iy) attaining max_value regardless of worker count.
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.values.size(); ++i)
        if (grid.values[i] > grid.values[best])
            best = i;
    grid.max_value = grid.values[best];
    grid.argmax = grid.point(best / grid.ny, best % grid.ny);
    return grid;
}

double scan_line_max(const ChannelField &field, double x_min, double x_max, double y0, double step)
{
    if (step <= 0.0)
        throw std::domain_error("grid step must be positive");
    if (x_min > x_max)
        throw std::domain_error("empty segment");

    const std::size_t n = lattice_count(x_min, x_max, step);
    const std::size_t paths = field.paths();
    thread_local std::vector<cdouble> w;
    thread_local std::vector<cdouble> u;
    w.resize(paths);
    u.resize(paths);
    for (std::size_t l = 0; l < paths; ++l)
    {
        const VirtualAngles &v = field.virtual_aoas[l];
        w[l] = field.eprv[l] * unit_phasor(-(x_min * v.varphi + y0 * v.vartheta));
        u[l] = unit_phasor(-step * v.varphi);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        cdouble acc = 0.0;
        for (std::size_t l = 0; l < paths; ++l)
        {
            acc += w[l];
            w[l] *= u[l];
        }
        best = std::max(best, std::norm(acc));
    }
    return best;
}

} // namespace masim
