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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "masim/config.hpp"
#include "masim/io.hpp"

using namespace masim;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fresh_dir(const char *name)
{
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("config defaults and validation")
{
    SUBCASE("empty document gives all defaults")
    {
        const ExperimentConfig cfg = parse_config("{}");
        CHECK(cfg.l_r == 2);
        CHECK(cfg.sigma2 == 1.0);
        CHECK(cfg.grid_step == doctest::Approx(0.05));
        CHECK(cfg.n_realizations == 1000);
        CHECK(cfg.seed == 0);
        CHECK(cfg.experiment == ExperimentKind::sweep_region);
        CHECK(cfg == ExperimentConfig{});
    }

    SUBCASE("unknown key is rejected by name")
    {
        try
        {
            parse_config(R"({"regoin_side": 4})");
            FAIL("expected config_error");
        }
        catch (const config_error &e)
        {
            CHECK(e.field() == "regoin_side");
        }
    }

    SUBCASE("constraint violations name the field")
    {
        try
        {
            parse_config(R"({"region_side": -1})");
            FAIL("expected config_error");
        }
        catch (const config_error &e)
        {
            CHECK(e.field() == "region_side");
        }
        CHECK_THROWS_AS(parse_config(R"({"l_r": 0})"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"grid_step": "fine"})"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"schemes": ["MA", "XX"]})"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"t_values": [1]})"), config_error);
        CHECK_THROWS_AS(parse_config("not json"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"experiment": "warp-drive"})"), config_error);
    }

    SUBCASE("field-map needs a complete field description")
    {
        CHECK_THROWS_AS(parse_config(R"({"experiment": "field-map"})"), config_error);
        const ExperimentConfig cfg = parse_config(
            R"({"experiment": "field-map", "amplitudes": [1, 1],
                "thetas": [0, 0.5], "phis": [1.0, -1.0]})");
        CHECK(cfg.phases == std::vector<double>{0.0, 0.0}); // defaulted
    }

    SUBCASE("round trip")
    {
        ExperimentConfig cfg;
        cfg.experiment = ExperimentKind::power_ratio;
        cfg.l_r = 2;
        cfg.sigma2 = 2.5;
        cfg.region_sizes = {4, 16};
        cfg.rho_values = {2, 10};
        cfg.seed = 123456789012345ULL;
        cfg.emit_samples = true;
        const ExperimentConfig back = parse_config(serialize_config(cfg));
        CHECK(back == cfg);
    }
}

TEST_CASE("sweep example shapes")
{
    const ExperimentConfig cfg = parse_config(
        R"({"experiment": "sweep-region", "region_sizes": [1, 2, 4, 8, 16]})");
    CHECK(cfg.region_sizes.size() == 5);
    CHECK(cfg.region_sizes.front() == 1.0);
    CHECK(cfg.region_sizes.back() == 16.0);
}

TEST_CASE("csv writers")
{
    const fs::path dir = fresh_dir("masim_io_test");

    SUBCASE("rows are sorted and formatted at 17 significant digits")
    {
        std::vector<RunResult> rows;
        RunResult b;
        b.sweep_value = 2.0;
        b.scheme = "MA";
        b.mean = 1.0 / 3.0;
        rows.push_back(b);
        RunResult a;
        a.sweep_value = 1.0;
        a.scheme = "ZZ";
        a.mean = 0.1;
        rows.push_back(a);
        RunResult c;
        c.sweep_value = 1.0;
        c.scheme = "AA";
        c.mean = 2.0;
        rows.push_back(c);
        write_rows_csv(dir / "rows.csv", rows);
        const std::string text = slurp(dir / "rows.csv");
        CHECK(text == "sweep_value,scheme,mean,stderr\n"
                      "1,AA,2,0\n"
                      "1,ZZ,0.10000000000000001,0\n"
                      "2,MA,0.33333333333333331,0\n");
    }

    SUBCASE("grid csv is row-major with a header")
    {
        GainGrid grid;
        grid.region = {0, 0.5, 0, 0.5};
        grid.step = 0.5;
        grid.nx = 2;
        grid.ny = 2;
        grid.values = {1.0, 2.0, 3.0, 4.0};
        grid.max_value = 4.0;
        grid.argmax = {0.5, 0.5};
        write_grid_csv(dir / "grid.csv", grid);
        CHECK(slurp(dir / "grid.csv") == "x,y,gain\n"
                                         "0,0,1\n"
                                         "0,0.5,2\n"
                                         "0.5,0,3\n"
                                         "0.5,0.5,4\n");
    }

    SUBCASE("unwritable path raises io_error")
    {
        CHECK_THROWS_AS(write_rows_csv("/nonexistent-dir/x.csv", {}), io_error);
    }
}

TEST_CASE("experiment files and meta echo")
{
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::sweep_region;
    cfg.l_r = 2;
    cfg.n_realizations = 50;
    cfg.region_sizes = {1.0, 2.0};
    cfg.grid_step = 0.1;
    cfg.seed = 7;
    cfg.emit_samples = true;

    const fs::path dir1 = fresh_dir("masim_run1");
    const ExperimentFiles files = run_experiment_to_files(cfg, dir1);
    CHECK(fs::exists(files.csv));
    CHECK(fs::exists(files.meta));
    CHECK(fs::exists(files.samples));

    const std::string csv = slurp(files.csv);
    CHECK(csv.rfind("sweep_value,scheme,mean,stderr\n", 0) == 0);

    SUBCASE("meta re-parse reproduces the config and the bytes")
    {
        const ExperimentConfig echoed = parse_config(slurp(files.meta));
        CHECK(echoed == cfg);

        const fs::path dir2 = fresh_dir("masim_run2");
        const ExperimentFiles again = run_experiment_to_files(echoed, dir2);
        CHECK(slurp(again.csv) == csv);
    }

    SUBCASE("meta carries the seed")
    {
        const std::string meta = slurp(files.meta);
        CHECK(meta.find("\"seed\": 7") != std::string::npos);
    }
}

TEST_CASE("field-map experiment writes the demo grid")
{
    ExperimentConfig cfg = parse_config(R"({
        "experiment": "field-map",
        "amplitudes": [0.70710678118654752, 0.70710678118654752],
        "thetas": [0.0, 1.0471975511965977],
        "phis": [1.5707963267948966, -1.5707963267948966],
        "region_side": 4.0,
        "grid_step": 0.05
    })");
    const fs::path dir = fresh_dir("masim_fieldmap");
    const ExperimentFiles files = run_experiment_to_files(cfg, dir);

    const std::string text = slurp(files.csv);
    CHECK(text.rfind("x,y,gain\n", 0) == 0);
    double best = 0.0;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line))
    {
        const auto comma = line.rfind(',');
        best = std::max(best, std::stod(line.substr(comma + 1)));
    }
    CHECK(best == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("cdf experiment emits both curves plus analytic overlay")
{
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::cdf;
    cfg.l_r = 2;
    cfg.n_realizations = 200;
    cfg.region_side = 4.0;
    cfg.grid_step = 0.1;
    cfg.t_points = 50;
    cfg.seed = 21;

    const fs::path dir = fresh_dir("masim_cdf");
    const ExperimentFiles files = run_experiment_to_files(cfg, dir);
    const std::string csv = slurp(files.csv);
    CHECK(csv.find(",analytic,") != std::string::npos);
    CHECK(csv.find(",empirical,") != std::string::npos);
    CHECK(fs::exists(files.analytic));
    CHECK(slurp(files.analytic).find(",analytic,") != std::string::npos);
}
