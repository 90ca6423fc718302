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

// CSV output. Reals are written with 12 significant digits ("%.12g").
//
// Drop table header:
//   seed,algorithm,K,N,n_users,noise_dbm,network_ee,jain,iterations,
//   evaluations,converged,cell_ee_0,...,cell_ee_K
// Trace companion (<stem>.trace.csv):
//   drop,game,iteration,avg_payoff

#include "eepc/experiment.hpp"

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eepc {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string format_real(double v);

std::string results_header(std::size_t n_cells);

// results.csv -> results.trace.csv
std::filesystem::path trace_path_for(const std::filesystem::path &results_path);

// Writes the drop table and its trace companion. Every record must have
// n_cells per-cell values.
void emit_results(std::span<const RunRecord> records, const std::filesystem::path &path, std::size_t n_cells);

// Reads a drop table (and its trace companion when present).
std::vector<RunRecord> parse_results(const std::filesystem::path &path);

void write_sweep_table(std::span<const SweepRow> rows, SweepParameter parameter, const std::filesystem::path &path);
void write_comparison(const PairedComparison &cmp, const std::filesystem::path &path);
void write_gap_report(std::span<const GapRow> rows, const std::filesystem::path &path);

} // namespace eepc
