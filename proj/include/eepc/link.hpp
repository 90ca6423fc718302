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

// MRC combining, post-combining SINR, rate, power consumption and the
// per-user / per-subcarrier / network energy-efficiency aggregates.

#include "eepc/complex_vector.hpp"
#include "eepc/topology.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace eepc {

// Transmit power of every (cell, subcarrier) link, watts. Zero where the
// cell has no user on the subcarrier.
class PowerProfile {
  public:
    PowerProfile() = default;
    PowerProfile(std::size_t n_cells, std::size_t n_subcarriers)
        : n_cells_(n_cells), n_subcarriers_(n_subcarriers), p_(n_cells * n_subcarriers, 0.0)
    {
    }

    std::size_t n_cells() const { return n_cells_; }
    std::size_t n_subcarriers() const { return n_subcarriers_; }

    double at(std::size_t cell, std::size_t subcarrier) const { return p_.at(subcarrier * n_cells_ + cell); }
    void set(std::size_t cell, std::size_t subcarrier, double watts) { p_.at(subcarrier * n_cells_ + cell) = watts; }

    // Powers of all cells on one subcarrier, indexed by cell.
    std::span<const double> on_subcarrier(std::size_t subcarrier) const
    {
        return std::span<const double>(p_).subspan(subcarrier * n_cells_, n_cells_);
    }

    friend bool operator==(const PowerProfile &, const PowerProfile &) = default;

  private:
    std::size_t n_cells_ = 0;
    std::size_t n_subcarriers_ = 0;
    std::vector<double> p_; // [subcarrier * n_cells + cell]
};

// Throws std::invalid_argument unless every occupied link uses one of
// `levels` and every unoccupied link is zero.
void validate_profile(const PowerProfile &profile, const Topology &topology, std::span<const double> levels);

// a = g / ||g||. Throws std::domain_error for a zero vector.
ComplexVector mrc_combiner(const ComplexVector &channel);

// Receive combiner of each occupied (cell, subcarrier).
class CombinerSet {
  public:
    CombinerSet(std::size_t n_cells, std::size_t n_subcarriers)
        : n_cells_(n_cells), n_subcarriers_(n_subcarriers), a_(n_cells * n_subcarriers)
    {
    }

    const ComplexVector *find(std::size_t cell, std::size_t subcarrier) const;
    void set(std::size_t cell, std::size_t subcarrier, ComplexVector a) { a_.at(cell * n_subcarriers_ + subcarrier) = std::move(a); }

  private:
    std::size_t n_cells_;
    std::size_t n_subcarriers_;
    std::vector<ComplexVector> a_;
};

// MRC combiners from the direct channels g(k, k, i).
CombinerSet mrc_combiners(const ChannelRealization &channels);

// Post-combining SINR of the user of `cell` on `subcarrier`:
//   p_k |a^H g_kk|^2 / (sum_{l != k, occupied} p_l |a^H g_lk|^2 + ||a||^2 noise)
// Computed directly from the channel vectors. Throws std::logic_error when
// the cell has no user (or no combiner) on the subcarrier.
double sinr(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
            double noise_power, std::size_t cell, std::size_t subcarrier);

// log2(1 + sinr); throws std::domain_error for negative input.
double rate(double sinr);

inline double power_sum(double transmit_w, double circuit_w) { return transmit_w + circuit_w; }

// rate / p_sum; throws std::domain_error unless p_sum > 0.
double user_ee(double rate, double p_sum);

// Sum of user EE over the cells occupying the subcarrier (0 if none).
double group_ee(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
                double noise_power, double circuit_power, std::size_t subcarrier);

// Sum of group_ee over subcarriers in ascending order.
double network_ee(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
                  double noise_power, double circuit_power);

// Precomputed link state of one drop: every coupling gain |a_k^H g_lk|^2 and
// combiner norm is evaluated once, so payoff evaluations inside the games and
// the exhaustive searches reduce to a handful of multiply-adds.
//
// Agrees with the direct functions above to rounding.
class LinkModel {
  public:
    LinkModel(const Topology &topology, const ChannelRealization &channels, const NetworkConfig &config);
    explicit LinkModel(const Scenario &scenario);

    std::size_t n_cells() const { return n_cells_; }
    std::size_t n_subcarriers() const { return n_subcarriers_; }
    std::size_t n_levels() const { return levels_.size(); }
    const std::vector<double> &power_levels() const { return levels_; }
    double level(std::size_t index) const { return levels_.at(index); }
    double noise_power() const { return noise_power_; }
    double circuit_power() const { return circuit_power_; }

    bool occupied(std::size_t cell, std::size_t subcarrier) const { return occupied_[subcarrier * n_cells_ + cell]; }
    const std::vector<std::size_t> &players(std::size_t subcarrier) const { return players_.at(subcarrier); }

    // |a_{k,i}^H g_{l,k,i}|^2
    double coupling(std::size_t receiver, std::size_t transmitter, std::size_t subcarrier) const
    {
        return coupling_[(subcarrier * n_cells_ + receiver) * n_cells_ + transmitter];
    }

    // SINR / EE of `cell` on `subcarrier` given the powers of all cells on that
    // subcarrier (indexed by cell; unoccupied entries are ignored).
    double sinr(std::span<const double> powers, std::size_t cell, std::size_t subcarrier) const;
    double user_ee(std::span<const double> powers, std::size_t cell, std::size_t subcarrier) const;
    double group_ee(std::span<const double> powers, std::size_t subcarrier) const;

    double sinr(const PowerProfile &profile, std::size_t cell, std::size_t subcarrier) const
    {
        return sinr(profile.on_subcarrier(subcarrier), cell, subcarrier);
    }
    double user_ee(const PowerProfile &profile, std::size_t cell, std::size_t subcarrier) const
    {
        return user_ee(profile.on_subcarrier(subcarrier), cell, subcarrier);
    }
    double group_ee(const PowerProfile &profile, std::size_t subcarrier) const
    {
        return group_ee(profile.on_subcarrier(subcarrier), subcarrier);
    }
    double network_ee(const PowerProfile &profile) const;

    // Per-cell total EE, sum over subcarriers of EE_k^i.
    std::vector<double> cell_ee(const PowerProfile &profile) const;

    // Profile with strategy indices mapped to power levels. strategy is indexed
    // [subcarrier * n_cells + cell]; entries of unoccupied links are ignored.
    PowerProfile profile_from_strategies(std::span<const std::size_t> strategy) const;

  private:
    std::size_t n_cells_;
    std::size_t n_subcarriers_;
    std::vector<double> levels_;
    double noise_power_;
    double circuit_power_;
    std::vector<char> occupied_;
    std::vector<std::vector<std::size_t>> players_;
    std::vector<double> coupling_;
    std::vector<double> combiner_norm_sq_; // [subcarrier * n_cells + cell]
};

} // namespace eepc
