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

// Distributed evolutionary-game power control.
//
// The network EE objective separates over subcarriers, so every subcarrier
// hosts an independent game whose players are the co-channel users (one per
// occupied cell). Each round every player reports its own EE as payoff, a
// controller broadcasts the mean, and players at or below the mean move to a
// power level they have not tried yet. A player with no untried level left
// keeps its current one. The game ends in the first round where nobody moves.

#include "eepc/link.hpp"
#include "eepc/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace eepc {

enum class UpdateSchedule {
    // All at-or-below-average players switch against one shared mean.
    synchronous,
    // Players decide one at a time, each against payoffs and mean recomputed
    // after the previous player's move.
    sequential,
};

struct GameState {
    std::size_t subcarrier = 0;
    std::vector<std::size_t> players;         // cell indices, ascending
    std::vector<std::size_t> strategy;        // per player, index into power levels
    std::vector<std::vector<char>> tried;     // per player, per level
    std::vector<double> payoffs;              // per player, bits/s/Hz/W
    double average_payoff = 0.0;
    std::size_t iteration = 0;
    std::size_t switches_last_step = 0;
    std::uint64_t evaluations = 0;            // player payoff evaluations so far
    bool converged = false;

    std::size_t n_players() const { return players.size(); }
    std::size_t untried_count(std::size_t player) const;
};

// Game of one subcarrier with uniformly random initial strategies (marked as
// tried). A subcarrier without users yields an already converged empty game.
GameState make_game(const LinkModel &model, std::size_t subcarrier, Rng &rng);

// One game per subcarrier, ascending.
std::vector<GameState> init_games(const LinkModel &model, Rng &rng);

// Powers on the game's subcarrier indexed by cell, from current strategies.
std::vector<double> game_powers(const GameState &game, const LinkModel &model);

// Each player's own EE under the current joint strategy.
std::vector<double> player_payoffs(const GameState &game, const LinkModel &model);

// Arithmetic mean; throws std::domain_error for an empty list.
double average_payoff(std::span<const double> payoffs);

struct PopulationShare {
    std::vector<std::size_t> counts; // per level
    std::vector<double> x;           // counts / players
};

PopulationShare population_share(const GameState &game, std::size_t n_levels);

// Payoff of one strategy: sum of adopters' EE over (players * share), i.e.
// the adopters' mean EE. Throws std::domain_error when nobody plays it.
double strategy_payoff(const GameState &game, const PopulationShare &shares, const LinkModel &model,
                       std::size_t strategy);

// strategy_payoff for every strategy with at least one adopter.
std::map<std::size_t, double> strategy_payoffs(const GameState &game, const PopulationShare &shares,
                                               const LinkModel &model);

// One round. Throws std::logic_error on a converged game.
void egt_step(GameState &game, const LinkModel &model, Rng &rng,
              UpdateSchedule schedule = UpdateSchedule::synchronous);

struct EgtResult {
    PowerProfile profile;
    std::vector<GameState> games;
    // trace[game][round]: average payoff broadcast in that round.
    std::vector<std::vector<double>> trace;
    std::size_t iterations = 0; // rounds until every game stopped (max over games)
    std::uint64_t evaluations = 0;
    bool converged = false;
};

// Runs all games until each converges or max_iterations rounds elapse.
// Non-convergence is reported through the flag, never thrown.
EgtResult run_algorithm1(std::vector<GameState> games, const LinkModel &model, Rng &rng,
                         std::size_t max_iterations, UpdateSchedule schedule = UpdateSchedule::synchronous);

// init_games + run_algorithm1 on the same random stream.
EgtResult run_algorithm1(const LinkModel &model, Rng &rng, std::size_t max_iterations,
                         UpdateSchedule schedule = UpdateSchedule::synchronous);

} // namespace eepc
