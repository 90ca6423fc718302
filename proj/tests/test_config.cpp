// eepc: energy-efficient uplink power control for two-tier cellular networks
// Copyright (C) 2026 The eepc Authors
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


#include "eepc/config.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace eepc;

TEST_CASE("defaults reproduce the evaluation setup")
{
    const NetworkConfig c;
    CHECK(c.macro_radius == 1000.0);
    CHECK(c.small_radius == 100.0);
    CHECK(c.n_antennas_mbs == 128);
    CHECK(c.path_loss_exponent == 3.8);
    CHECK(c.shadowing_std_db * c.shadowing_std_db == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(c.antenna_constant == 1.0);
    CHECK(c.noise_psd_dbm_per_hz == -194.0);
    CHECK(c.subcarrier_bandwidth_hz == 180000.0);
    REQUIRE(c.n_levels() == 8);
    CHECK(c.power_levels.front() == 1e-3);
    CHECK(c.power_levels.back() == 0.1);
    for (std::size_t a = 1; a < c.n_levels(); ++a)
        CHECK(c.power_levels[a] / c.power_levels[a - 1] == doctest::Approx(std::pow(100.0, 1.0 / 7.0)));
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("noise power from PSD and bandwidth")
{
    NetworkConfig c;
    c.noise_psd_dbm_per_hz = -174.0;
    c.subcarrier_bandwidth_hz = 1.0;
    CHECK(c.noise_power() == doctest::Approx(std::pow(10.0, -20.4)).epsilon(1e-12));
    c.noise_psd_dbm_per_hz = -30.0;
    c.subcarrier_bandwidth_hz = 1e6;
    CHECK(c.noise_power() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parse_config reads keys, comments and level lists")
{
    const auto c = parse_config("# a comment\n"
                                "n_small_cells = 3\n"
                                "  n_subcarriers=4   # trailing\n"
                                "n_users_per_cell = 2\n"
                                "power_levels = 0.01, 0.02,0.05\n"
                                "rng_seed = 18446744073709551615\n");
    CHECK(c.n_small_cells == 3);
    CHECK(c.n_subcarriers == 4);
    CHECK(c.n_users_per_cell == 2);
    CHECK(c.power_levels == std::vector<double>{0.01, 0.02, 0.05});
    CHECK(c.rng_seed == 18446744073709551615ull);
    CHECK(c.macro_radius == 1000.0);
}

TEST_CASE("parse_config rejects malformed input")
{
    CHECK_THROWS_AS(parse_config("n_small_cell = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_small_cells = 2\nn_small_cells = 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_small_cells 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_small_cells =\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_small_cells = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("n_small_cells = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("macro_radius = big\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("power_levels = 0.1,,0.2\n"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("\n\nbogus = 1\n"), doctest::Contains("line 3"), ConfigError);
}

TEST_CASE("validate enforces the config invariants")
{
    auto bad = [](auto edit) {
        NetworkConfig c;
        edit(c);
        return c;
    };
    CHECK_THROWS_AS(bad([](auto &c) { c.small_radius = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.macro_radius = 100; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.n_subcarriers = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.n_users_per_cell = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.n_users_per_cell = 7; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.n_antennas_sbs = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.n_antennas_mbs = 2; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.path_loss_exponent = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.shadowing_std_db = -1; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.antenna_constant = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.subcarrier_bandwidth_hz = 0; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.power_levels.clear(); }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.power_levels = {0.0, 0.1}; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.power_levels = {0.1, 0.1}; }).validate(), ConfigError);
    CHECK_THROWS_AS(bad([](auto &c) { c.circuit_power = 0; }).validate(), ConfigError);
    CHECK_NOTHROW(bad([](auto &c) { c.n_small_cells = 0; }).validate());
    CHECK_NOTHROW(bad([](auto &c) { c.shadowing_std_db = 0; }).validate());
}

TEST_CASE("config text round trip is exact")
{
    NetworkConfig c;
    c.n_small_cells = 4;
    c.noise_psd_dbm_per_hz = -183.7;
    c.power_levels = log_spaced_levels(2e-3, 0.2, 5);
    c.rng_seed = 0xdeadbeefcafeull;
    CHECK(parse_config(to_config_text(c)) == c);
    CHECK(parse_config(to_config_text(NetworkConfig{})) == NetworkConfig{});
}

TEST_CASE("load_config")
{
    const auto path = std::filesystem::temp_directory_path() / "eepc_test_config.cfg";
    {
        std::ofstream out(path);
        out << "n_small_cells = 1\nbogus = 2\n";
    }
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("eepc_test_config.cfg"), ConfigError);
    {
        std::ofstream out(path);
        out << "n_small_cells = 1\n";
    }
    CHECK(load_config(path).n_small_cells == 1);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), ConfigError);
}

TEST_CASE("log_spaced_levels")
{
    CHECK(log_spaced_levels(0.5, 0.5, 1) == std::vector<double>{0.5});
    const auto v = log_spaced_levels(1e-3, 1e-1, 3);
    CHECK(v[0] == 1e-3);
    CHECK(v[1] == doctest::Approx(1e-2).epsilon(1e-14));
    CHECK(v[2] == 1e-1);
    CHECK_THROWS_AS(log_spaced_levels(0.0, 1.0, 3), ConfigError);
    CHECK_THROWS_AS(log_spaced_levels(1.0, 0.5, 3), ConfigError);
}
