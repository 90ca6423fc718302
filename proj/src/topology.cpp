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

#include "eepc/topology.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eepc {
namespace {

Point uniform_in_disc(Point centre, double radius, Rng &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {centre.x + r * std::cos(theta), centre.y + r * std::sin(theta)};
}

// First `count` entries of a partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> choose_without_replacement(std::size_t n, std::size_t count, Rng &rng)
{
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t j = 0; j < count; ++j) {
        std::uniform_int_distribution<std::size_t> pick(j, n - 1);
        std::swap(pool[j], pool[pick(rng)]);
    }
    pool.resize(count);
    return pool;
}

} // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Topology::Topology(std::size_t n_cells, std::size_t n_subcarriers)
    : n_cells_(n_cells), n_subcarriers_(n_subcarriers), slots_(n_cells * n_subcarriers, -1)
{
}

std::optional<std::size_t> Topology::user_at(std::size_t cell, std::size_t subcarrier) const
{
    const long slot = slots_.at(cell * n_subcarriers_ + subcarrier);
    if (slot < 0)
        return std::nullopt;
    return static_cast<std::size_t>(slot);
}

std::vector<std::size_t> Topology::players(std::size_t subcarrier) const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < n_cells_; ++k)
        if (occupied(k, subcarrier))
            out.push_back(k);
    return out;
}

std::size_t Topology::add_user(const User &user)
{
    if (user.serving_cell >= n_cells_ || user.subcarrier >= n_subcarriers_)
        throw std::invalid_argument("add_user: cell or subcarrier out of range");
    long &slot = slots_[user.serving_cell * n_subcarriers_ + user.subcarrier];
    if (slot >= 0)
        throw std::invalid_argument("add_user: cell " + std::to_string(user.serving_cell) +
                                    " already has a user on subcarrier " + std::to_string(user.subcarrier));
    slot = static_cast<long>(users_.size());
    users_.push_back(user);
    return users_.size() - 1;
}

Topology sample_topology(const NetworkConfig &config, Rng &rng)
{
    config.validate();
    const std::size_t K = config.n_small_cells;
    Topology topo(K + 1, config.n_subcarriers);

    const double min_sep = 2.0 * config.small_radius;
    for (std::size_t k = 0; k < K; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementRetries && !placed; ++attempt) {
            const Point c = uniform_in_disc(topo.mbs_position, config.macro_radius, rng);
            placed = true;
            for (const Point &other : topo.sbs_positions) {
                if (distance(c, other) < min_sep) {
                    placed = false;
                    break;
                }
            }
            if (placed)
                topo.sbs_positions.push_back(c);
        }
        if (!placed)
            throw ConfigError("cannot place " + std::to_string(K) + " non-overlapping small cells of radius " +
                              std::to_string(config.small_radius) + " m after " +
                              std::to_string(kPlacementRetries) + " attempts");
    }

    for (std::size_t cell = 0; cell <= K; ++cell) {
        const double radius = cell == 0 ? config.macro_radius : config.small_radius;
        const auto subcarriers = choose_without_replacement(config.n_subcarriers, config.n_users_per_cell, rng);
        for (std::size_t sc : subcarriers)
            topo.add_user({cell, sc, uniform_in_disc(topo.bs_position(cell), radius, rng)});
    }
    return topo;
}

double large_scale_gain(double distance_m, const NetworkConfig &config, double shadow)
{
    if (!(distance_m > 0.0))
        throw std::domain_error("large_scale_gain: distance must be > 0");
    if (!(shadow > 0.0))
        throw std::domain_error("large_scale_gain: shadowing draw must be > 0");
    return config.antenna_constant * shadow / std::pow(distance_m, config.path_loss_exponent);
}

double sample_shadowing(const NetworkConfig &config, Rng &rng)
{
    std::normal_distribution<double> db(0.0, config.shadowing_std_db);
    return std::pow(10.0, db(rng) / 10.0);
}

LargeScaleFading sample_large_scale(const Topology &topology, const NetworkConfig &config, Rng &rng)
{
    LargeScaleFading out;
    const auto &users = topology.users();
    out.n_users = users.size();
    const std::size_t n = topology.n_cells() * users.size();
    out.beta.resize(n);
    out.shadow.resize(n);
    out.distance.resize(n);
    for (std::size_t k = 0; k < topology.n_cells(); ++k) {
        for (std::size_t u = 0; u < users.size(); ++u) {
            const std::size_t idx = k * users.size() + u;
            out.distance[idx] = std::max(distance(topology.bs_position(k), users[u].position), kMinLinkDistance);
            out.shadow[idx] = sample_shadowing(config, rng);
            out.beta[idx] = large_scale_gain(out.distance[idx], config, out.shadow[idx]);
        }
    }
    return out;
}

ChannelRealization::ChannelRealization(std::size_t n_cells, std::size_t n_subcarriers)
    : n_cells_(n_cells), n_subcarriers_(n_subcarriers), g_(n_cells * n_cells * n_subcarriers)
{
}

std::size_t ChannelRealization::index(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier) const
{
    if (receiver >= n_cells_ || transmitter >= n_cells_ || subcarrier >= n_subcarriers_)
        throw std::out_of_range("channel index out of range");
    return (receiver * n_subcarriers_ + subcarrier) * n_cells_ + transmitter;
}

const ComplexVector *ChannelRealization::find(std::size_t receiver, std::size_t transmitter,
                                              std::size_t subcarrier) const
{
    const auto &g = g_[index(receiver, transmitter, subcarrier)];
    return g.empty() ? nullptr : &g;
}

const ComplexVector &ChannelRealization::at(std::size_t receiver, std::size_t transmitter,
                                            std::size_t subcarrier) const
{
    const auto *g = find(receiver, transmitter, subcarrier);
    if (g == nullptr)
        throw std::logic_error("no channel from cell " + std::to_string(transmitter) + " to BS " +
                               std::to_string(receiver) + " on subcarrier " + std::to_string(subcarrier));
    return *g;
}

void ChannelRealization::set(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier, ComplexVector g)
{
    g_[index(receiver, transmitter, subcarrier)] = std::move(g);
}

std::size_t antenna_count(const NetworkConfig &config, std::size_t receiver)
{
    return receiver == 0 ? config.n_antennas_mbs : config.n_antennas_sbs;
}

ChannelRealization sample_channels(const Topology &topology, const LargeScaleFading &fading,
                                   const NetworkConfig &config, Rng &rng)
{
    if (fading.n_users != topology.users().size() || fading.beta.size() != topology.n_cells() * fading.n_users)
        throw std::invalid_argument("sample_channels: fading does not cover the topology");

    // CN(0, 1): independent real and imaginary parts with variance 1/2.
    std::normal_distribution<double> half(0.0, std::sqrt(0.5));
    const auto &kern = simd::active_kernels();

    ChannelRealization out(topology.n_cells(), topology.n_subcarriers());
    for (std::size_t k = 0; k < topology.n_cells(); ++k) {
        const std::size_t n_ant = antenna_count(config, k);
        for (std::size_t i = 0; i < topology.n_subcarriers(); ++i) {
            for (std::size_t l = 0; l < topology.n_cells(); ++l) {
                const auto user = topology.user_at(l, i);
                if (!user)
                    continue;
                ComplexVector g(n_ant);
                for (std::size_t a = 0; a < n_ant; ++a) {
                    const double re = half(rng);
                    const double im = half(rng);
                    g.set(a, {re, im});
                }
                kern.scale(g.mut_view(), std::sqrt(fading.gain(k, *user)));
                out.set(k, l, i, std::move(g));
            }
        }
    }
    return out;
}

Scenario sample_scenario(const NetworkConfig &config, std::uint64_t drop_seed)
{
    auto topo_rng = make_stream(drop_seed, Stream::topology);
    auto fading_rng = make_stream(drop_seed, Stream::fading);
    auto channel_rng = make_stream(drop_seed, Stream::channels);
    Topology topology = sample_topology(config, topo_rng);
    LargeScaleFading fading = sample_large_scale(topology, config, fading_rng);
    ChannelRealization channels = sample_channels(topology, fading, config, channel_rng);
    return {config, std::move(topology), std::move(fading), std::move(channels)};
}

} // namespace eepc
