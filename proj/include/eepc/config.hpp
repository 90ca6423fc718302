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

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eepc {

// Invalid scenario parameters, unparsable config files, or geometry that
// cannot be realized (e.g. too many non-overlapping small cells).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// L log-spaced levels from lo to hi watts (inclusive).
std::vector<double> log_spaced_levels(double lo_w, double hi_w, std::size_t count);

struct NetworkConfig {
    double macro_radius = 1000.0;              // m
    double small_radius = 100.0;               // m
    std::size_t n_small_cells = 2;             // K
    std::size_t n_subcarriers = 6;             // N
    std::size_t n_users_per_cell = 6;          // N_u
    std::size_t n_antennas_mbs = 128;
    std::size_t n_antennas_sbs = 4;
    double path_loss_exponent = 3.8;
    // Standard deviation of 10*log10(shadowing), dB. sqrt(10) gives a
    // log-normal variance of 10 dB^2.
    double shadowing_std_db = 3.1622776601683795;
    double antenna_constant = 1.0;
    double noise_psd_dbm_per_hz = -194.0;
    double subcarrier_bandwidth_hz = 180000.0;
    std::vector<double> power_levels = log_spaced_levels(1e-3, 0.1, 8); // W, strictly increasing
    double circuit_power = 0.01;               // W
    std::uint64_t rng_seed = 1;

    std::size_t n_cells() const { return n_small_cells + 1; }
    std::size_t n_levels() const { return power_levels.size(); }

    // Per-subcarrier thermal noise power in watts.
    double noise_power() const;

    // Throws ConfigError naming the first violated invariant.
    void validate() const;
};

// Parses "key = value" lines; '#' starts a comment. power_levels takes a
// comma-separated list. Unknown or duplicate keys are errors. Keys that are
// absent keep their defaults. The result is validated.
NetworkConfig parse_config(std::string_view text);
NetworkConfig load_config(const std::filesystem::path &path);

// Serializes every field so that parse_config(to_config_text(c)) == c.
std::string to_config_text(const NetworkConfig &config);

bool operator==(const NetworkConfig &a, const NetworkConfig &b);

} // namespace eepc
