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

#include "eepc/baselines.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace eepc {
namespace {

struct Link {
    std::size_t cell;
    std::size_t subcarrier;
};

// Odometer over `digits` base-L digits, most significant first.
bool next_tuple(std::vector<std::size_t> &digits, std::size_t base)
{
    for (std::size_t d = digits.size(); d-- > 0;) {
        if (++digits[d] < base)
            return true;
        digits[d] = 0;
    }
    return false;
}

std::uint64_t checked_pow(std::size_t base, std::size_t exp, std::uint64_t limit, const std::string &what)
{
    if (static_cast<double>(exp) * std::log2(static_cast<double>(base)) > std::log2(static_cast<double>(limit)) + 1e-9)
        throw SizeGuardError(what + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                             " joint strategies exceed the search limit of " + std::to_string(limit));
    std::uint64_t out = 1;
    for (std::size_t e = 0; e < exp; ++e)
        out *= base;
    if (out > limit)
        throw SizeGuardError(what + ": joint strategy count exceeds the search limit");
    return out;
}

} // namespace

OracleResult brute_force_group(const LinkModel &model, std::size_t subcarrier, const SearchLimits &limits)
{
    const auto &players = model.players(subcarrier);
    if (players.empty())
        throw std::invalid_argument("brute_force_group: subcarrier " + std::to_string(subcarrier) + " has no users");
    const std::size_t L = model.n_levels();
    const std::size_t m = players.size();
    if (static_cast<double>(m) * std::log2(static_cast<double>(L)) > limits.max_group_bits)
        throw SizeGuardError("brute_force_group: " + std::to_string(L) + "^" + std::to_string(m) +
                             " joint strategies exceed the per-group search limit");

    std::vector<std::size_t> tuple(m, 0);
    std::vector<std::size_t> best_tuple = tuple;
    std::vector<double> powers(model.n_cells(), 0.0);
    double best = -1.0;
    std::uint64_t evaluations = 0;
    do {
        for (std::size_t p = 0; p < m; ++p)
            powers[players[p]] = model.level(tuple[p]);
        const double ee = model.group_ee(powers, subcarrier);
        ++evaluations;
        if (ee > best) {
            best = ee;
            best_tuple = tuple;
        }
    } while (next_tuple(tuple, L));

    OracleResult out;
    out.strategy.assign(model.n_cells() * model.n_subcarriers(), 0);
    out.profile = PowerProfile(model.n_cells(), model.n_subcarriers());
    for (std::size_t p = 0; p < m; ++p) {
        out.strategy[subcarrier * model.n_cells() + players[p]] = best_tuple[p];
        out.profile.set(players[p], subcarrier, model.level(best_tuple[p]));
    }
    out.objective = best;
    out.evaluations = evaluations;
    return out;
}

OracleResult brute_force_global(const LinkModel &model, const SearchLimits &limits)
{
    std::vector<Link> links;
    for (std::size_t i = 0; i < model.n_subcarriers(); ++i)
        for (std::size_t k : model.players(i))
            links.push_back({k, i});
    const std::size_t L = model.n_levels();
    checked_pow(L, links.size(), limits.max_global_profiles, "brute_force_global");

    std::vector<std::size_t> tuple(links.size(), 0);
    std::vector<std::size_t> best_tuple = tuple;
    PowerProfile profile(model.n_cells(), model.n_subcarriers());
    double best = -1.0;
    std::uint64_t evaluations = 0;
    do {
        for (std::size_t j = 0; j < links.size(); ++j)
            profile.set(links[j].cell, links[j].subcarrier, model.level(tuple[j]));
        const double ee = model.network_ee(profile);
        ++evaluations;
        if (ee > best) {
            best = ee;
            best_tuple = tuple;
        }
    } while (next_tuple(tuple, L));

    OracleResult out;
    out.strategy.assign(model.n_cells() * model.n_subcarriers(), 0);
    out.profile = PowerProfile(model.n_cells(), model.n_subcarriers());
    for (std::size_t j = 0; j < links.size(); ++j) {
        out.strategy[links[j].subcarrier * model.n_cells() + links[j].cell] = best_tuple[j];
        out.profile.set(links[j].cell, links[j].subcarrier, model.level(best_tuple[j]));
    }
    out.objective = links.empty() ? 0.0 : best;
    out.evaluations = evaluations;
    return out;
}

OracleResult brute_force_all_groups(const LinkModel &model, const SearchLimits &limits)
{
    OracleResult out;
    out.strategy.assign(model.n_cells() * model.n_subcarriers(), 0);
    out.profile = PowerProfile(model.n_cells(), model.n_subcarriers());
    for (std::size_t i = 0; i < model.n_subcarriers(); ++i) {
        if (model.players(i).empty())
            continue;
        const auto group = brute_force_group(model, i, limits);
        for (std::size_t k : model.players(i)) {
            out.strategy[i * model.n_cells() + k] = group.strategy[i * model.n_cells() + k];
            out.profile.set(k, i, group.profile.at(k, i));
        }
        out.objective += group.objective;
        out.evaluations += group.evaluations;
    }
    return out;
}

BestResponseResult ngt_best_response(const LinkModel &model, Rng &rng, std::size_t max_rounds)
{
    if (max_rounds < 1)
        throw std::invalid_argument("ngt_best_response: max_rounds must be >= 1");
    const std::size_t C = model.n_cells();
    const std::size_t L = model.n_levels();

    BestResponseResult out;
    out.strategy.assign(C * model.n_subcarriers(), 0);
    std::uniform_int_distribution<std::size_t> pick(0, L - 1);
    for (std::size_t i = 0; i < model.n_subcarriers(); ++i)
        for (std::size_t k : model.players(i))
            out.strategy[i * C + k] = pick(rng);
    out.trace.resize(model.n_subcarriers());

    std::vector<double> powers(C, 0.0);
    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < model.n_subcarriers(); ++i) {
            const auto &players = model.players(i);
            if (players.empty())
                continue;
            for (std::size_t k : players)
                powers[k] = model.level(out.strategy[i * C + k]);
            for (std::size_t k : players) {
                std::size_t best_a = 0;
                double best_ee = -1.0;
                for (std::size_t a = 0; a < L; ++a) {
                    powers[k] = model.level(a);
                    const double ee = model.user_ee(powers, k, i);
                    ++out.evaluations;
                    if (ee > best_ee) {
                        best_ee = ee;
                        best_a = a;
                    }
                }
                powers[k] = model.level(best_a);
                if (best_a != out.strategy[i * C + k]) {
                    out.strategy[i * C + k] = best_a;
                    changed = true;
                }
            }
            out.trace[i].push_back(model.group_ee(powers, i) / static_cast<double>(players.size()));
        }
        ++out.rounds;
        if (!changed) {
            out.converged = true;
            break;
        }
    }
    out.profile = model.profile_from_strategies(out.strategy);
    return out;
}

} // namespace eepc
