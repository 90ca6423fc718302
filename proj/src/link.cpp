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

#include "eepc/link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eepc {
namespace {

double coupling_gain(const simd::KernelTable &kern, const ComplexVector &a, const ComplexVector &g)
{
    if (a.size() != g.size())
        throw std::logic_error("combiner/channel length mismatch");
    return std::norm(kern.inner_conj(a.view(), g.view()));
}

std::string link_name(std::size_t cell, std::size_t subcarrier)
{
    return "cell " + std::to_string(cell) + " on subcarrier " + std::to_string(subcarrier);
}

} // namespace

void validate_profile(const PowerProfile &profile, const Topology &topology, std::span<const double> levels)
{
    if (profile.n_cells() != topology.n_cells() || profile.n_subcarriers() != topology.n_subcarriers())
        throw std::invalid_argument("power profile shape does not match topology");
    for (std::size_t i = 0; i < topology.n_subcarriers(); ++i) {
        for (std::size_t k = 0; k < topology.n_cells(); ++k) {
            const double p = profile.at(k, i);
            if (!topology.occupied(k, i)) {
                if (p != 0.0)
                    throw std::invalid_argument("nonzero power on unoccupied link " + link_name(k, i));
            } else if (std::find(levels.begin(), levels.end(), p) == levels.end()) {
                throw std::invalid_argument("power of " + link_name(k, i) + " is not an allowed level");
            }
        }
    }
}

ComplexVector mrc_combiner(const ComplexVector &channel)
{
    const auto &kern = simd::active_kernels();
    const double n2 = kern.norm_sq(channel.view());
    if (!(n2 > 0.0))
        throw std::domain_error("mrc_combiner: zero channel vector");
    ComplexVector a = channel;
    kern.scale(a.mut_view(), 1.0 / std::sqrt(n2));
    return a;
}

const ComplexVector *CombinerSet::find(std::size_t cell, std::size_t subcarrier) const
{
    const auto &a = a_.at(cell * n_subcarriers_ + subcarrier);
    return a.empty() ? nullptr : &a;
}

CombinerSet mrc_combiners(const ChannelRealization &channels)
{
    CombinerSet out(channels.n_cells(), channels.n_subcarriers());
    for (std::size_t k = 0; k < channels.n_cells(); ++k)
        for (std::size_t i = 0; i < channels.n_subcarriers(); ++i)
            if (const auto *g = channels.find(k, k, i))
                out.set(k, i, mrc_combiner(*g));
    return out;
}

double sinr(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
            double noise_power, std::size_t cell, std::size_t subcarrier)
{
    if (!(noise_power > 0.0))
        throw std::domain_error("sinr: noise power must be > 0");
    const auto *a = combiners.find(cell, subcarrier);
    const auto *g_direct = channels.find(cell, cell, subcarrier);
    if (a == nullptr || g_direct == nullptr)
        throw std::logic_error("sinr: no user/combiner for " + link_name(cell, subcarrier));

    const auto &kern = simd::active_kernels();
    const double signal = profile.at(cell, subcarrier) * coupling_gain(kern, *a, *g_direct);
    double denom = 0.0;
    for (std::size_t l = 0; l < channels.n_cells(); ++l) {
        if (l == cell)
            continue;
        if (const auto *g = channels.find(cell, l, subcarrier))
            denom += profile.at(l, subcarrier) * coupling_gain(kern, *a, *g);
    }
    denom += kern.norm_sq(a->view()) * noise_power;
    return signal / denom;
}

double rate(double sinr)
{
    if (!(sinr >= 0.0))
        throw std::domain_error("rate: SINR must be >= 0");
    return std::log2(1.0 + sinr);
}

double user_ee(double rate, double p_sum)
{
    if (!(p_sum > 0.0))
        throw std::domain_error("user_ee: consumed power must be > 0");
    return rate / p_sum;
}

double group_ee(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
                double noise_power, double circuit_power, std::size_t subcarrier)
{
    double total = 0.0;
    for (std::size_t k = 0; k < channels.n_cells(); ++k) {
        if (channels.find(k, k, subcarrier) == nullptr)
            continue;
        const double r = rate(sinr(profile, channels, combiners, noise_power, k, subcarrier));
        total += user_ee(r, power_sum(profile.at(k, subcarrier), circuit_power));
    }
    return total;
}

double network_ee(const PowerProfile &profile, const ChannelRealization &channels, const CombinerSet &combiners,
                  double noise_power, double circuit_power)
{
    double total = 0.0;
    for (std::size_t i = 0; i < channels.n_subcarriers(); ++i)
        total += group_ee(profile, channels, combiners, noise_power, circuit_power, i);
    return total;
}

LinkModel::LinkModel(const Topology &topology, const ChannelRealization &channels, const NetworkConfig &config)
    : n_cells_(topology.n_cells()),
      n_subcarriers_(topology.n_subcarriers()),
      levels_(config.power_levels),
      noise_power_(config.noise_power()),
      circuit_power_(config.circuit_power),
      occupied_(n_cells_ * n_subcarriers_, 0),
      players_(n_subcarriers_),
      coupling_(n_subcarriers_ * n_cells_ * n_cells_, 0.0),
      combiner_norm_sq_(n_subcarriers_ * n_cells_, 0.0)
{
    if (channels.n_cells() != n_cells_ || channels.n_subcarriers() != n_subcarriers_)
        throw std::invalid_argument("LinkModel: channel realization does not match topology");
    if (!(noise_power_ > 0.0))
        throw std::domain_error("LinkModel: noise power must be > 0");

    const auto &kern = simd::active_kernels();
    for (std::size_t i = 0; i < n_subcarriers_; ++i) {
        players_[i] = topology.players(i);
        for (std::size_t k : players_[i]) {
            occupied_[i * n_cells_ + k] = 1;
            const ComplexVector a = mrc_combiner(channels.at(k, k, i));
            combiner_norm_sq_[i * n_cells_ + k] = kern.norm_sq(a.view());
            for (std::size_t l : players_[i])
                coupling_[(i * n_cells_ + k) * n_cells_ + l] = coupling_gain(kern, a, channels.at(k, l, i));
        }
    }
}

LinkModel::LinkModel(const Scenario &scenario) : LinkModel(scenario.topology, scenario.channels, scenario.config) {}

double LinkModel::sinr(std::span<const double> powers, std::size_t cell, std::size_t subcarrier) const
{
    if (!occupied(cell, subcarrier))
        throw std::logic_error("sinr: no user for " + link_name(cell, subcarrier));
    const double *c = &coupling_[(subcarrier * n_cells_ + cell) * n_cells_];
    double denom = 0.0;
    for (std::size_t l : players_[subcarrier])
        if (l != cell)
            denom += powers[l] * c[l];
    denom += combiner_norm_sq_[subcarrier * n_cells_ + cell] * noise_power_;
    return powers[cell] * c[cell] / denom;
}

double LinkModel::user_ee(std::span<const double> powers, std::size_t cell, std::size_t subcarrier) const
{
    const double r = eepc::rate(sinr(powers, cell, subcarrier));
    return eepc::user_ee(r, power_sum(powers[cell], circuit_power_));
}

double LinkModel::group_ee(std::span<const double> powers, std::size_t subcarrier) const
{
    double total = 0.0;
    for (std::size_t k : players_[subcarrier])
        total += user_ee(powers, k, subcarrier);
    return total;
}

double LinkModel::network_ee(const PowerProfile &profile) const
{
    double total = 0.0;
    for (std::size_t i = 0; i < n_subcarriers_; ++i)
        total += group_ee(profile, i);
    return total;
}

std::vector<double> LinkModel::cell_ee(const PowerProfile &profile) const
{
    std::vector<double> out(n_cells_, 0.0);
    for (std::size_t i = 0; i < n_subcarriers_; ++i)
        for (std::size_t k : players_[i])
            out[k] += user_ee(profile, k, i);
    return out;
}

PowerProfile LinkModel::profile_from_strategies(std::span<const std::size_t> strategy) const
{
    if (strategy.size() != n_cells_ * n_subcarriers_)
        throw std::invalid_argument("profile_from_strategies: wrong strategy vector size");
    PowerProfile p(n_cells_, n_subcarriers_);
    for (std::size_t i = 0; i < n_subcarriers_; ++i)
        for (std::size_t k : players_[i])
            p.set(k, i, levels_.at(strategy[i * n_cells_ + k]));
    return p;
}

} // namespace eepc
