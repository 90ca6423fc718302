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

// Seeded Monte-Carlo experiments over independent network drops.
//
// Drop d of an experiment always uses the seed derive_seed(rng_seed, d),
// whatever the algorithm or swept parameter, so comparisons across
// algorithms and sweep points are paired (common random numbers).

#include "eepc/baselines.hpp"
#include "eepc/config.hpp"
#include "eepc/egt.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eepc {

enum class Algorithm { egt, ngt, brute_group, brute_global };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

enum class SweepParameter { noise_psd_dbm_per_hz, n_users_per_cell, n_small_cells };

std::string_view sweep_parameter_name(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);

struct Sweep {
    SweepParameter parameter = SweepParameter::noise_psd_dbm_per_hz;
    std::vector<double> values;
};

struct ExperimentSpec {
    NetworkConfig base;
    Algorithm algorithm = Algorithm::egt;
    std::size_t n_drops = 1;
    std::optional<Sweep> sweep;
    std::filesystem::path output_path;
    std::size_t max_iterations = 100;
    UpdateSchedule schedule = UpdateSchedule::synchronous;
    SearchLimits limits;

    // Throws ConfigError.
    void validate() const;
};

struct RunRecord {
    std::uint64_t seed = 0;
    std::size_t drop = 0;
    Algorithm algorithm = Algorithm::egt;
    std::size_t n_small_cells = 0;
    std::size_t n_subcarriers = 0;
    std::size_t n_users = 0; // per cell
    double noise_dbm = 0.0;  // PSD, dBm/Hz
    double network_ee = 0.0;
    double jain = 0.0;
    std::size_t iterations = 0;
    std::uint64_t evaluations = 0;
    bool converged = false;
    std::vector<double> cell_ee; // size K+1
    // traces[game][iteration]: mean payoff of that subcarrier's game
    std::vector<std::vector<double>> traces;
    PowerProfile profile;
    std::string error; // non-empty when the drop failed

    bool ok() const { return error.empty(); }
};

// (sum v)^2 / (n * sum v^2). Throws std::domain_error for an empty or
// all-zero list.
double jain_index(std::span<const double> values);

std::uint64_t drop_seed(std::uint64_t base_seed, std::size_t drop);

// One drop with the given algorithm. Errors are captured into the record.
RunRecord run_drop(const NetworkConfig &config, Algorithm algorithm, std::size_t drop,
                   std::size_t max_iterations = 100, UpdateSchedule schedule = UpdateSchedule::synchronous,
                   const SearchLimits &limits = {});

// All drops of spec (the sweep, if any, is ignored), ordered by drop index.
std::vector<RunRecord> run_drops(const ExperimentSpec &spec);

NetworkConfig apply_sweep_value(NetworkConfig config, SweepParameter parameter, double value);

struct Summary {
    std::size_t n_ok = 0;
    std::size_t n_failed = 0;
    double mean_network_ee = 0.0;
    double mean_jain = 0.0;
    double ci_half_width = 0.0; // 95% normal approximation on mean network EE
};

Summary summarize(std::span<const RunRecord> records);

struct SweepRow {
    double value = 0.0;
    Summary summary;
    std::vector<RunRecord> records;
};

// run_drops at every sweep value with the same drop seeds.
std::vector<SweepRow> sweep(const ExperimentSpec &spec);

struct PairedComparison {
    std::vector<RunRecord> egt;
    std::vector<RunRecord> ngt;
    std::size_t n_pairs = 0;           // drops where both runs succeeded
    double fraction_egt_fairer = 0.0;  // Jain(EGT) >= Jain(NGT)
    double mean_jain_egt = 0.0;
    double mean_jain_ngt = 0.0;
    double mean_jain_diff = 0.0;       // EGT - NGT
    double ci_half_width = 0.0;        // 95% on the paired difference
};

// EGT and NGT on the same drops.
PairedComparison compare_egt_ngt(const ExperimentSpec &spec);

struct GapRow {
    std::uint64_t seed = 0;
    std::size_t drop = 0;
    std::size_t subcarrier = 0;
    double oracle_ee = 0.0;
    double egt_ee = 0.0;
    double relative_gap = 0.0; // (oracle - egt) / oracle
    std::uint64_t oracle_evaluations = 0;
};

// Per-subcarrier optimality gap of EGT against the group oracle.
std::vector<GapRow> oracle_gap(const ExperimentSpec &spec);

} // namespace eepc
