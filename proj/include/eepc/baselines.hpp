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

// Reference algorithms: exhaustive search per subcarrier and over the whole
// network, and non-cooperative best-response dynamics.

#include "eepc/link.hpp"
#include "eepc/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eepc {

class SizeGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    double max_group_bits = 30.0;                  // players * log2(L)
    std::uint64_t max_global_profiles = 1u << 20;
};

struct OracleResult {
    PowerProfile profile;
    // [subcarrier * n_cells + cell]; meaningful on the searched links only
    std::vector<std::size_t> strategy;
    double objective = 0.0;
    std::uint64_t evaluations = 0; // joint strategies enumerated
};

// Maximizes group EE of one subcarrier over all L^m joint strategies of its m
// players. Ties keep the lexicographically smallest strategy tuple (players in
// ascending cell order). Throws std::invalid_argument for an empty subcarrier
// and SizeGuardError when m*log2(L) exceeds the limit.
OracleResult brute_force_group(const LinkModel &model, std::size_t subcarrier, const SearchLimits &limits = {});

// Maximizes network EE over the joint strategies of every occupied link
// (ordered subcarrier-major, then cell). Same tie rule.
OracleResult brute_force_global(const LinkModel &model, const SearchLimits &limits = {});

// Group oracles for every occupied subcarrier merged into one profile.
OracleResult brute_force_all_groups(const LinkModel &model, const SearchLimits &limits = {});

struct BestResponseResult {
    PowerProfile profile;
    std::vector<std::size_t> strategy;
    std::size_t rounds = 0;
    bool converged = false;
    std::uint64_t evaluations = 0; // single-user EE evaluations
    // trace[subcarrier][round]: mean player EE after that round
    std::vector<std::vector<double>> trace;
};

// Random initial strategies, then rounds of best responses in fixed order
// (subcarrier ascending, cell 0 first, then small cells ascending). Each
// player takes the level maximizing its own EE with others fixed (smallest
// index among ties). Stops after the first round without changes.
BestResponseResult ngt_best_response(const LinkModel &model, Rng &rng, std::size_t max_rounds);

} // namespace eepc
