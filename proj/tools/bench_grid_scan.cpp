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
// Compares the serial reference scan (one exp per lattice point) with the
// OpenMP recurrence kernel on the same fields, and reports the worst
// max-value disagreement.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "masim/grid_scan.hpp"
#include "masim/rng.hpp"
#include "masim/sampler.hpp"

using namespace masim;

namespace
{

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_case(int paths, double side, double step, int repeats)
{
    const ChannelSampler sampler{paths, 1.0, {}, 42};
    const Region region = Region::centered_square(side);

    double serial_s = 0.0, parallel_s = 0.0, worst = 0.0;
    std::size_t cells = 0;
    for (int i = 0; i < repeats; ++i)
    {
        PhiloxStream rng(sampler.seed, static_cast<std::uint64_t>(i));
        const ChannelField field = sample_channel(sampler, rng);

        auto t0 = std::chrono::steady_clock::now();
        const GainGrid ref = scan_gain_grid(field, region, step, ScanMode::serial_reference);
        serial_s += seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const GainGrid par = scan_gain_grid(field, region, step, ScanMode::parallel);
        parallel_s += seconds_since(t0);

        worst = std::max(worst, std::abs(ref.max_value - par.max_value));
        cells = ref.nx * ref.ny;
    }
    std::printf("L=%-4d A=%-5.1f step=%-5.3f cells=%-9zu serial %8.3f s   openmp %8.3f s   "
                "speedup %5.2fx   |dmax| %.3e\n",
                paths, side, step, cells, serial_s, parallel_s, serial_s / parallel_s, worst);
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif
    bench_case(2, 10.0, 0.05, 20);
    bench_case(5, 10.0, 0.05, 10);
    bench_case(50, 10.0, 0.05, 4);
    bench_case(200, 20.0, 0.05, 2);
    return 0;
}
