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

// Network geometry, large-scale fading and Rayleigh channel realizations.
//
// Cell 0 is the massive-MIMO macro cell, cells 1..K are small cells.
// Subcarriers are indexed 0..N-1 throughout the library.

#include "eepc/complex_vector.hpp"
#include "eepc/config.hpp"
#include "eepc/rng.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eepc {

inline constexpr double kMinLinkDistance = 1.0; // m
inline constexpr int kPlacementRetries = 10000;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b);

struct User {
    std::size_t serving_cell = 0;
    std::size_t subcarrier = 0;
    Point position;
};

class Topology {
  public:
    Topology(std::size_t n_cells, std::size_t n_subcarriers);

    Point mbs_position{};
    std::vector<Point> sbs_positions; // size K

    std::size_t n_cells() const { return n_cells_; }
    std::size_t n_subcarriers() const { return n_subcarriers_; }

    const std::vector<User> &users() const { return users_; }

    // Index into users() of the user that cell occupies on subcarrier, if any.
    std::optional<std::size_t> user_at(std::size_t cell, std::size_t subcarrier) const;
    bool occupied(std::size_t cell, std::size_t subcarrier) const { return user_at(cell, subcarrier).has_value(); }

    // Cells with a user on subcarrier, ascending.
    std::vector<std::size_t> players(std::size_t subcarrier) const;

    Point bs_position(std::size_t cell) const { return cell == 0 ? mbs_position : sbs_positions.at(cell - 1); }

    // Throws std::invalid_argument if the slot is taken.
    std::size_t add_user(const User &user);

  private:
    std::size_t n_cells_;
    std::size_t n_subcarriers_;
    std::vector<User> users_;
    std::vector<long> slots_; // [cell * N + subcarrier] -> user index or -1
};

// SBS centres uniformly in the macro disc with pairwise separation of at least
// 2*small_radius, users uniformly in their serving disc, and each cell's
// N_u users on distinct uniformly chosen subcarriers.
Topology sample_topology(const NetworkConfig &config, Rng &rng);

// beta = phi * shadow / d^alpha. Throws std::domain_error unless d > 0 and shadow > 0.
double large_scale_gain(double distance_m, const NetworkConfig &config, double shadow);

// One log-normal draw with 10*log10(shadow) ~ N(0, shadowing_std_db^2).
double sample_shadowing(const NetworkConfig &config, Rng &rng);

struct LargeScaleFading {
    std::size_t n_users = 0;
    // [receiver * n_users + user]
    std::vector<double> beta;
    std::vector<double> shadow;
    std::vector<double> distance; // clamped to kMinLinkDistance

    double gain(std::size_t receiver, std::size_t user) const { return beta.at(receiver * n_users + user); }
};

// Shadowing drawn once per (receiver BS, user) link, independently.
LargeScaleFading sample_large_scale(const Topology &topology, const NetworkConfig &config, Rng &rng);

// g(k, l, i): channel from the user of cell l on subcarrier i to BS k.
class ChannelRealization {
  public:
    ChannelRealization(std::size_t n_cells, std::size_t n_subcarriers);

    std::size_t n_cells() const { return n_cells_; }
    std::size_t n_subcarriers() const { return n_subcarriers_; }

    // nullptr when cell `transmitter` has no user on `subcarrier`.
    const ComplexVector *find(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier) const;
    const ComplexVector &at(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier) const;

    void set(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier, ComplexVector g);

    friend bool operator==(const ChannelRealization &, const ChannelRealization &) = default;

  private:
    std::size_t index(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier) const;

    std::size_t n_cells_;
    std::size_t n_subcarriers_;
    std::vector<ComplexVector> g_; // empty vector == absent
};

std::size_t antenna_count(const NetworkConfig &config, std::size_t receiver);

// g = sqrt(beta) * h with h ~ CN(0, I). Entries exist iff the transmitting
// cell has a user on the subcarrier.
ChannelRealization sample_channels(const Topology &topology, const LargeScaleFading &fading,
                                   const NetworkConfig &config, Rng &rng);

// One complete drop.
struct Scenario {
    NetworkConfig config;
    Topology topology;
    LargeScaleFading fading;
    ChannelRealization channels;
};

// Draws topology, fading and channels from independent sub-streams of drop_seed.
Scenario sample_scenario(const NetworkConfig &config, std::uint64_t drop_seed);

} // namespace eepc
