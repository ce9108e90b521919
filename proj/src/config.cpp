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

#include "masim/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "masim/errors.hpp"

namespace masim
{

using nlohmann::json;

namespace
{

const std::set<std::string> kKnownKeys = {
    "experiment", "l_r",          "sigma2",     "region_side", "grid_step",  "n_realizations",
    "seed",       "as_m",         "dbf_m",      "geometry",    "schemes",    "region_sizes",
    "path_counts", "rho_values",  "t_values",   "d_values",    "p",          "t_points",
    "emit_samples", "amplitudes", "phases",     "thetas",      "phis"};

template <typename T>
void read_scalar(const json &doc, const char *key, T &out)
{
    if (!doc.contains(key))
        return;
    try
    {
        out = doc.at(key).get<T>();
    }
    catch (const json::exception &)
    {
        throw config_error(key, "wrong type");
    }
}

template <typename T>
void read_list(const json &doc, const char *key, std::vector<T> &out)
{
    if (!doc.contains(key))
        return;
    if (!doc.at(key).is_array())
        throw config_error(key, "expected a list");
    try
    {
        out = doc.at(key).get<std::vector<T>>();
    }
    catch (const json::exception &)
    {
        throw config_error(key, "list elements have the wrong type");
    }
}

void require_positive(double v, const char *key)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw config_error(key, "must be positive");
}

void require_positive_list(const std::vector<double> &v, const char *key)
{
    for (double x : v)
        if (!(x > 0.0) || !std::isfinite(x))
            throw config_error(key, "entries must be positive");
}

} // namespace

const char *to_string(ExperimentKind kind)
{
    switch (kind)
    {
    case ExperimentKind::field_map:
        return "field-map";
    case ExperimentKind::sweep_region:
        return "sweep-region";
    case ExperimentKind::sweep_paths:
        return "sweep-paths";
    case ExperimentKind::power_ratio:
        return "power-ratio";
    case ExperimentKind::cdf:
        return "cdf";
    case ExperimentKind::correlation:
        return "correlation";
    case ExperimentKind::period:
        return "period";
    case ExperimentKind::bounds:
        return "bounds";
    }
    return "?";
}

ExperimentKind experiment_from_string(const std::string &name)
{
    for (ExperimentKind k :
         {ExperimentKind::field_map, ExperimentKind::sweep_region, ExperimentKind::sweep_paths,
          ExperimentKind::power_ratio, ExperimentKind::cdf, ExperimentKind::correlation,
          ExperimentKind::period, ExperimentKind::bounds})
        if (name == to_string(k))
            return k;
    throw config_error("experiment", "unknown experiment '" + name + "'");
}

ExperimentConfig parse_config(const std::string &text)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::exception &e)
    {
        throw config_error("<document>", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw config_error("<document>", "top level must be an object");

    // A meta.json echo carries the original config under "config".
    if (doc.contains("config") && doc.contains("version"))
        doc = doc.at("config");

    for (const auto &item : doc.items())
        if (!kKnownKeys.contains(item.key()))
            throw config_error(item.key(), "unknown key");

    ExperimentConfig cfg;
    if (doc.contains("experiment"))
    {
        if (!doc.at("experiment").is_string())
            throw config_error("experiment", "wrong type");
        cfg.experiment = experiment_from_string(doc.at("experiment").get<std::string>());
    }
    read_scalar(doc, "l_r", cfg.l_r);
    read_scalar(doc, "sigma2", cfg.sigma2);
    read_scalar(doc, "region_side", cfg.region_side);
    read_scalar(doc, "grid_step", cfg.grid_step);
    read_scalar(doc, "n_realizations", cfg.n_realizations);
    read_scalar(doc, "seed", cfg.seed);
    read_scalar(doc, "as_m", cfg.as_m);
    read_scalar(doc, "dbf_m", cfg.dbf_m);
    if (doc.contains("geometry"))
    {
        std::string g;
        read_scalar(doc, "geometry", g);
        if (g == "linear-x")
            cfg.geometry = BaselineArray::Geometry::linear_x;
        else if (g == "square")
            cfg.geometry = BaselineArray::Geometry::square;
        else
            throw config_error("geometry", "expected 'linear-x' or 'square'");
    }
    read_list(doc, "schemes", cfg.schemes);
    read_list(doc, "region_sizes", cfg.region_sizes);
    read_list(doc, "path_counts", cfg.path_counts);
    read_list(doc, "rho_values", cfg.rho_values);
    read_list(doc, "t_values", cfg.t_values);
    read_list(doc, "d_values", cfg.d_values);
    read_scalar(doc, "p", cfg.p);
    read_scalar(doc, "t_points", cfg.t_points);
    read_scalar(doc, "emit_samples", cfg.emit_samples);
    read_list(doc, "amplitudes", cfg.amplitudes);
    read_list(doc, "phases", cfg.phases);
    read_list(doc, "thetas", cfg.thetas);
    read_list(doc, "phis", cfg.phis);

    // Constraints.
    if (cfg.l_r < 1)
        throw config_error("l_r", "must be at least 1");
    require_positive(cfg.sigma2, "sigma2");
    require_positive(cfg.region_side, "region_side");
    require_positive(cfg.grid_step, "grid_step");
    if (cfg.n_realizations < 1)
        throw config_error("n_realizations", "must be at least 1");
    if (cfg.as_m < 0)
        throw config_error("as_m", "must be nonnegative (0 = auto)");
    if (cfg.dbf_m < 0)
        throw config_error("dbf_m", "must be nonnegative (0 = auto)");
    for (const auto &s : cfg.schemes)
        if (s != "MA" && s != "FPA" && s != "AS" && s != "DBF")
            throw config_error("schemes", "unknown scheme '" + s + "'");
    if (cfg.schemes.empty())
        throw config_error("schemes", "must not be empty");
    require_positive_list(cfg.region_sizes, "region_sizes");
    if (cfg.region_sizes.empty())
        throw config_error("region_sizes", "must not be empty");
    for (int l : cfg.path_counts)
        if (l < 1)
            throw config_error("path_counts", "entries must be at least 1");
    if (cfg.path_counts.empty())
        throw config_error("path_counts", "must not be empty");
    require_positive_list(cfg.rho_values, "rho_values");
    for (int t : cfg.t_values)
        if (t < 2)
            throw config_error("t_values", "entries must be at least 2");
    for (double d : cfg.d_values)
        if (d < 0.0)
            throw config_error("d_values", "entries must be nonnegative");
    if (cfg.p < 1)
        throw config_error("p", "must be at least 1");
    if (cfg.t_points < 2)
        throw config_error("t_points", "must be at least 2");

    if (cfg.experiment == ExperimentKind::field_map)
    {
        if (cfg.amplitudes.empty())
            throw config_error("amplitudes", "field-map needs per-path amplitudes");
        const std::size_t n = cfg.amplitudes.size();
        if (cfg.phases.empty())
            cfg.phases.assign(n, 0.0);
        if (cfg.phases.size() != n || cfg.thetas.size() != n || cfg.phis.size() != n)
            throw config_error("thetas", "amplitudes/phases/thetas/phis must have equal length");
        for (double a : cfg.amplitudes)
            if (a < 0.0)
                throw config_error("amplitudes", "entries must be nonnegative");
    }

    return cfg;
}

std::string serialize_config(const ExperimentConfig &cfg)
{
    json doc;
    doc["experiment"] = to_string(cfg.experiment);
    doc["l_r"] = cfg.l_r;
    doc["sigma2"] = cfg.sigma2;
    doc["region_side"] = cfg.region_side;
    doc["grid_step"] = cfg.grid_step;
    doc["n_realizations"] = cfg.n_realizations;
    doc["seed"] = cfg.seed;
    doc["as_m"] = cfg.as_m;
    doc["dbf_m"] = cfg.dbf_m;
    doc["geometry"] = cfg.geometry == BaselineArray::Geometry::linear_x ? "linear-x" : "square";
    doc["schemes"] = cfg.schemes;
    doc["region_sizes"] = cfg.region_sizes;
    doc["path_counts"] = cfg.path_counts;
    doc["rho_values"] = cfg.rho_values;
    doc["t_values"] = cfg.t_values;
    doc["d_values"] = cfg.d_values;
    doc["p"] = cfg.p;
    doc["t_points"] = cfg.t_points;
    doc["emit_samples"] = cfg.emit_samples;
    doc["amplitudes"] = cfg.amplitudes;
    doc["phases"] = cfg.phases;
    doc["thetas"] = cfg.thetas;
    doc["phis"] = cfg.phis;
    return doc.dump(2);
}

int resolve_baseline_m(int configured, double region_side)
{
    if (configured > 0)
        return configured;
    return static_cast<int>(std::floor(2.0 * region_side + 1.0));
}

} // namespace masim
