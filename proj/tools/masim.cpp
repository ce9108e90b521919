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
// masim <experiment> --config <path> [--seed N] [--out DIR] [--threads K]
//
// Runs one experiment and writes <experiment>.csv plus <experiment>.meta.json
// into the output directory. --threads only changes how fast the answer
// arrives, never the bytes of the answer.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "masim/io.hpp"
#include "masim/version.hpp"

namespace
{

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw masim::io_error("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"movable-antenna channel model experiments"};
    app.set_version_flag("--version", MASIM_VERSION);

    std::string experiment;
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;

    app.add_option("experiment", experiment,
                   "field-map | sweep-region | sweep-paths | power-ratio | cdf | correlation | "
                   "period | bounds")
        ->required();
    app.add_option("--config", config_path, "JSON config file (flat object; see README)");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", seed, "override the root seed")->each([&](const std::string &) {
        seed_given = true;
    });
    app.add_option("--threads", threads, "OpenMP worker count (0 = library default)");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    try
    {
        masim::ExperimentConfig config =
            masim::parse_config(config_path.empty() ? "{}" : read_file(config_path));
        config.experiment = masim::experiment_from_string(experiment);
        if (seed_given)
            config.seed = seed;

        const masim::ExperimentFiles files = masim::run_experiment_to_files(config, out_dir);
        std::cout << "wrote " << files.csv.string() << '\n';
        std::cout << "wrote " << files.meta.string() << '\n';
        if (!files.analytic.empty())
            std::cout << "wrote " << files.analytic.string() << '\n';
        if (!files.samples.empty())
            std::cout << "wrote " << files.samples.string() << '\n';
        return 0;
    }
    catch (const masim::config_error &e)
    {
        std::cerr << e.what() << '\n';
        return 1;
    }
    catch (const masim::resource_error &e)
    {
        std::cerr << "resource error: " << e.what() << '\n';
        return 2;
    }
    catch (const masim::io_error &e)
    {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
