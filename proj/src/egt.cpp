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

#include "eepc/egt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eepc {
namespace {

void refresh_payoffs(GameState &game, const LinkModel &model)
{
    game.payoffs = player_payoffs(game, model);
    game.evaluations += game.n_players();
    game.average_payoff = average_payoff(game.payoffs);
}

// Moves player p to a uniformly chosen untried level. Returns false when
// every level has been tried.
bool switch_to_untried(GameState &game, std::size_t p, Rng &rng)
{
    std::vector<std::size_t> untried;
    for (std::size_t a = 0; a < game.tried[p].size(); ++a)
        if (!game.tried[p][a])
            untried.push_back(a);
    if (untried.empty())
        return false;
    std::uniform_int_distribution<std::size_t> pick(0, untried.size() - 1);
    const std::size_t next = untried[pick(rng)];
    game.strategy[p] = next;
    game.tried[p][next] = 1;
    return true;
}

} // namespace

std::size_t GameState::untried_count(std::size_t player) const
{
    return static_cast<std::size_t>(std::count(tried.at(player).begin(), tried.at(player).end(), char{0}));
}

GameState make_game(const LinkModel &model, std::size_t subcarrier, Rng &rng)
{
    GameState game;
    game.subcarrier = subcarrier;
    game.players = model.players(subcarrier);
    const std::size_t L = model.n_levels();
    std::uniform_int_distribution<std::size_t> pick(0, L - 1);
    for (std::size_t p = 0; p < game.players.size(); ++p) {
        const std::size_t s = pick(rng);
        game.strategy.push_back(s);
        game.tried.emplace_back(L, char{0});
        game.tried.back()[s] = 1;
    }
    game.payoffs.assign(game.players.size(), 0.0);
    game.converged = game.players.empty();
    return game;
}

std::vector<GameState> init_games(const LinkModel &model, Rng &rng)
{
    std::vector<GameState> games;
    games.reserve(model.n_subcarriers());
    for (std::size_t i = 0; i < model.n_subcarriers(); ++i)
        games.push_back(make_game(model, i, rng));
    return games;
}

std::vector<double> game_powers(const GameState &game, const LinkModel &model)
{
    std::vector<double> powers(model.n_cells(), 0.0);
    for (std::size_t p = 0; p < game.players.size(); ++p)
        powers[game.players[p]] = model.level(game.strategy[p]);
    return powers;
}

std::vector<double> player_payoffs(const GameState &game, const LinkModel &model)
{
    const auto powers = game_powers(game, model);
    std::vector<double> out(game.players.size());
    for (std::size_t p = 0; p < game.players.size(); ++p)
        out[p] = model.user_ee(powers, game.players[p], game.subcarrier);
    return out;
}

double average_payoff(std::span<const double> payoffs)
{
    if (payoffs.empty())
        throw std::domain_error("average_payoff: game has no players");
    return std::accumulate(payoffs.begin(), payoffs.end(), 0.0) / static_cast<double>(payoffs.size());
}

PopulationShare population_share(const GameState &game, std::size_t n_levels)
{
    PopulationShare s;
    s.counts.assign(n_levels, 0);
    for (std::size_t a : game.strategy)
        ++s.counts.at(a);
    s.x.assign(n_levels, 0.0);
    if (!game.players.empty())
        for (std::size_t a = 0; a < n_levels; ++a)
            s.x[a] = static_cast<double>(s.counts[a]) / static_cast<double>(game.players.size());
    return s;
}

double strategy_payoff(const GameState &game, const PopulationShare &shares, const LinkModel &model,
                       std::size_t strategy)
{
    if (strategy >= shares.x.size() || !(shares.x[strategy] > 0.0))
        throw std::domain_error("strategy_payoff: strategy " + std::to_string(strategy) + " has no adopters");
    const auto ee = player_payoffs(game, model);
    double sum = 0.0;
    for (std::size_t p = 0; p < game.players.size(); ++p)
        if (game.strategy[p] == strategy)
            sum += ee[p];
    return sum / (static_cast<double>(game.players.size()) * shares.x[strategy]);
}

std::map<std::size_t, double> strategy_payoffs(const GameState &game, const PopulationShare &shares,
                                               const LinkModel &model)
{
    const auto ee = player_payoffs(game, model);
    std::map<std::size_t, double> sums;
    for (std::size_t p = 0; p < game.players.size(); ++p)
        sums[game.strategy[p]] += ee[p];
    const double m = static_cast<double>(game.players.size());
    for (auto &[a, v] : sums)
        v /= m * shares.x.at(a);
    return sums;
}

void egt_step(GameState &game, const LinkModel &model, Rng &rng, UpdateSchedule schedule)
{
    if (game.converged)
        throw std::logic_error("egt_step: game on subcarrier " + std::to_string(game.subcarrier) +
                               " has already converged");
    std::size_t switches = 0;
    refresh_payoffs(game, model);
    if (schedule == UpdateSchedule::synchronous) {
        const double mean = game.average_payoff;
        for (std::size_t p = 0; p < game.n_players(); ++p)
            if (game.payoffs[p] <= mean && switch_to_untried(game, p, rng))
                ++switches;
    } else {
        const double broadcast = game.average_payoff;
        for (std::size_t p = 0; p < game.n_players(); ++p) {
            if (p > 0)
                refresh_payoffs(game, model);
            if (game.payoffs[p] <= game.average_payoff && switch_to_untried(game, p, rng))
                ++switches;
        }
        // Keep the round's opening broadcast as the reported average.
        game.average_payoff = broadcast;
    }
    game.switches_last_step = switches;
    ++game.iteration;
    game.converged = switches == 0;
}

EgtResult run_algorithm1(std::vector<GameState> games, const LinkModel &model, Rng &rng,
                         std::size_t max_iterations, UpdateSchedule schedule)
{
    EgtResult result;
    result.trace.resize(games.size());
    for (std::size_t t = 0; t < max_iterations; ++t) {
        bool active = false;
        for (std::size_t g = 0; g < games.size(); ++g) {
            if (games[g].converged)
                continue;
            egt_step(games[g], model, rng, schedule);
            result.trace[g].push_back(games[g].average_payoff);
            active = true;
        }
        if (!active)
            break;
    }

    result.converged = true;
    std::vector<std::size_t> strategy(model.n_cells() * model.n_subcarriers(), 0);
    for (const auto &game : games) {
        result.converged = result.converged && game.converged;
        result.iterations = std::max(result.iterations, game.iteration);
        result.evaluations += game.evaluations;
        for (std::size_t p = 0; p < game.n_players(); ++p)
            strategy[game.subcarrier * model.n_cells() + game.players[p]] = game.strategy[p];
    }
    result.profile = model.profile_from_strategies(strategy);
    result.games = std::move(games);
    return result;
}

EgtResult run_algorithm1(const LinkModel &model, Rng &rng, std::size_t max_iterations, UpdateSchedule schedule)
{
    return run_algorithm1(init_games(model, rng), model, rng, max_iterations, schedule);
}

} // namespace eepc
