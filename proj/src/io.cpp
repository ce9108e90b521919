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

#include "masim/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "masim/version.hpp"

namespace masim
{

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_float(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace
{

std::ofstream open_out(const fs::path &path)
{
    std::ofstream out(path, std::ios::binary); // binary keeps '\n' on every platform
    if (!out)
        throw io_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void close_or_throw(std::ofstream &out, const fs::path &path)
{
    out.flush();
    if (!out)
        throw io_error("short write to '" + path.string() + "'");
}

} // namespace

void write_rows_csv(const fs::path &path, std::vector<RunResult> rows)
{
    std::stable_sort(rows.begin(), rows.end(), [](const RunResult &a, const RunResult &b) {
        if (a.sweep_value != b.sweep_value)
            return a.sweep_value < b.sweep_value;
        return a.scheme < b.scheme;
    });
    std::ofstream out = open_out(path);
    out << "sweep_value,scheme,mean,stderr\n";
    for (const RunResult &r : rows)
        out << format_float(r.sweep_value) << ',' << r.scheme << ',' << format_float(r.mean) << ','
            << format_float(r.std_err) << '\n';
    close_or_throw(out, path);
}

void write_grid_csv(const fs::path &path, const GainGrid &grid)
{
    std::ofstream out = open_out(path);
    out << "x,y,gain\n";
    for (std::size_t ix = 0; ix < grid.nx; ++ix)
        for (std::size_t iy = 0; iy < grid.ny; ++iy)
        {
            const Position p = grid.point(ix, iy);
            out << format_float(p.x) << ',' << format_float(p.y) << ','
                << format_float(grid.value(ix, iy)) << '\n';
        }
    close_or_throw(out, path);
}

void write_meta_json(const fs::path &path, const ExperimentConfig &config, double runtime_seconds)
{
    json meta;
    meta["version"] = MASIM_VERSION;
    meta["experiment"] = to_string(config.experiment);
    meta["seed"] = config.seed;
    meta["runtime_seconds"] = runtime_seconds;
    meta["config"] = json::parse(serialize_config(config));
    std::ofstream out = open_out(path);
    out << meta.dump(2) << '\n';
    close_or_throw(out, path);
}

void write_samples_json(const fs::path &path, const ExperimentConfig &config,
                        const std::vector<RunResult> &rows)
{
    json doc;
    doc["version"] = MASIM_VERSION;
    doc["config"] = json::parse(serialize_config(config));
    json results = json::array();
    for (const RunResult &r : rows)
    {
        if (r.samples.empty())
            continue;
        json entry;
        entry["sweep_value"] = r.sweep_value;
        entry["scheme"] = r.scheme;
        entry["mean"] = r.mean;
        entry["stderr"] = r.std_err;
        entry["samples"] = r.samples;
        results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    std::ofstream out = open_out(path);
    out << doc.dump() << '\n';
    close_or_throw(out, path);
}

ExperimentFiles run_experiment_to_files(const ExperimentConfig &config, const fs::path &out_dir)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec && !fs::is_directory(out_dir))
        throw io_error("cannot create output directory '" + out_dir.string() + "'");

    const auto start = std::chrono::steady_clock::now();
    const ExperimentOutput result = run_experiment(config);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::string stem = to_string(config.experiment);
    ExperimentFiles files;
    files.csv = out_dir / (stem + ".csv");
    files.meta = out_dir / (stem + ".meta.json");

    if (result.grid)
        write_grid_csv(files.csv, *result.grid);
    else
        write_rows_csv(files.csv, result.rows);
    write_meta_json(files.meta, config, runtime);

    if (!result.analytic.empty())
    {
        files.analytic = out_dir / (stem + ".analytic.csv");
        write_rows_csv(files.analytic, result.analytic);
    }
    if (config.emit_samples)
    {
        std::vector<RunResult> carriers = result.rows;
        carriers.insert(carriers.end(), result.sample_carriers.begin(),
                        result.sample_carriers.end());
        files.samples = out_dir / (stem + ".samples.json");
        write_samples_json(files.samples, config, carriers);
    }
    return files;
}

} // namespace masim
