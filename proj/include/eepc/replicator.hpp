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

// Replicator dynamics over the population shares of one power-control game:
//   dx_a/dt = x_a (pi_a(x) - sum_b x_b pi_b(x))
// plus a numerical stability classifier for its fixed points.

#include "eepc/link.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eepc {

// Per-strategy payoffs at population state x. May be called slightly off the
// simplex (negative entries) by the finite-difference Jacobian.
using PayoffFunction = std::function<std::vector<double>(std::span<const double> x)>;

// sum_a x_a pi_a
double population_average(std::span<const double> x, std::span<const double> payoffs);

std::vector<double> replicator_rhs(std::span<const double> x, std::span<const double> payoffs, double average);

// Throws std::invalid_argument unless entries are >= 0 and sum to 1 within tol.
void check_simplex(std::span<const double> x, double tol = 1e-9);

struct ReplicatorOptions {
    double dt = 1e-2;
    double horizon = 50.0;
    double fixed_point_tol = 1e-8;        // on max |dx/dt|
    std::size_t fixed_point_window = 100; // consecutive steps below tol
    bool stop_at_fixed_point = true;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    bool reached_fixed_point = false;
    std::size_t renormalizations = 0;
};

// Forward Euler. After each step negative entries are clipped to zero and the
// state is rescaled onto the simplex if its sum drifted by more than 1e-9.
Trajectory integrate_replicator(std::vector<double> x0, const PayoffFunction &payoffs,
                                const ReplicatorOptions &options = {});

enum class Stability { stable, unstable, marginal };

const char *stability_name(Stability s);

struct StabilityReport {
    Stability classification = Stability::marginal;
    std::vector<std::complex<double>> eigenvalues; // of the tangent-space Jacobian
};

class NotAFixedPoint : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Central-difference Jacobian of the replicator field, restricted to the
// tangent space of the simplex (orthonormal basis of {v : sum v = 0}).
// stable: every eigenvalue has real part < -1e-8; unstable: some real part
// > 1e-8; marginal otherwise. Throws NotAFixedPoint when the field norm at
// x_star exceeds 1e-6.
StabilityReport equilibrium_stability(std::span<const double> x_star, const PayoffFunction &payoffs,
                                      double fd_step = 1e-6);

// Mean-field payoffs of the game on one subcarrier: pi_a(x) is the mean over
// its players of the EE obtained when that player transmits at level a while
// every co-channel user transmits at the population-mean power sum_b x_b p_b.
PayoffFunction mean_field_payoff(const LinkModel &model, std::size_t subcarrier);

} // namespace eepc
