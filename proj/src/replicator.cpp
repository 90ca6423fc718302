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

#include "eepc/replicator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace eepc {
namespace {

constexpr double kSimplexDrift = 1e-9;
constexpr double kEigenTol = 1e-8;
constexpr double kFixedPointResidual = 1e-6;

std::vector<double> field(std::span<const double> x, const PayoffFunction &payoffs)
{
    const auto pi = payoffs(x);
    if (pi.size() != x.size())
        throw std::invalid_argument("payoff function returned " + std::to_string(pi.size()) +
                                    " values for a state of size " + std::to_string(x.size()));
    return replicator_rhs(x, pi, population_average(x, pi));
}

double max_abs(const std::vector<double> &v)
{
    double m = 0.0;
    for (double e : v)
        m = std::max(m, std::abs(e));
    return m;
}

// Columns form an orthonormal basis of {v in R^n : sum v = 0}.
Eigen::MatrixXd tangent_basis(std::size_t n)
{
    Eigen::MatrixXd spanning = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - 1));
    for (Eigen::Index j = 0; j + 1 < static_cast<Eigen::Index>(n); ++j) {
        spanning(j, j) = 1.0;
        spanning(static_cast<Eigen::Index>(n) - 1, j) = -1.0;
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(spanning);
    return qr.householderQ() * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n - 1));
}

} // namespace

double population_average(std::span<const double> x, std::span<const double> payoffs)
{
    if (x.size() != payoffs.size())
        throw std::invalid_argument("population_average: size mismatch");
    double avg = 0.0;
    for (std::size_t a = 0; a < x.size(); ++a)
        avg += x[a] * payoffs[a];
    return avg;
}

std::vector<double> replicator_rhs(std::span<const double> x, std::span<const double> payoffs, double average)
{
    if (x.size() != payoffs.size())
        throw std::invalid_argument("replicator_rhs: size mismatch");
    std::vector<double> dx(x.size());
    for (std::size_t a = 0; a < x.size(); ++a)
        dx[a] = x[a] * (payoffs[a] - average);
    return dx;
}

void check_simplex(std::span<const double> x, double tol)
{
    if (x.empty())
        throw std::invalid_argument("population state is empty");
    double sum = 0.0;
    for (double v : x) {
        if (!(v >= 0.0))
            throw std::invalid_argument("population state has a negative share");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol)
        throw std::invalid_argument("population shares do not sum to 1");
}

Trajectory integrate_replicator(std::vector<double> x0, const PayoffFunction &payoffs, const ReplicatorOptions &options)
{
    if (!(options.dt > 0.0))
        throw std::invalid_argument("integrate_replicator: dt must be > 0");
    if (!(options.horizon >= 0.0))
        throw std::invalid_argument("integrate_replicator: horizon must be >= 0");
    check_simplex(x0);

    Trajectory traj;
    const auto steps = static_cast<std::size_t>(std::llround(options.horizon / options.dt));
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    std::vector<double> x = std::move(x0);
    std::size_t quiet = 0;
    for (std::size_t n = 1; n <= steps; ++n) {
        const auto dx = field(x, payoffs);
        quiet = max_abs(dx) < options.fixed_point_tol ? quiet + 1 : 0;

        for (std::size_t a = 0; a < x.size(); ++a)
            x[a] = std::max(0.0, x[a] + options.dt * dx[a]);
        const double sum = std::accumulate(x.begin(), x.end(), 0.0);
        if (std::abs(sum - 1.0) > kSimplexDrift) {
            for (double &v : x)
                v /= sum;
            ++traj.renormalizations;
        }

        traj.times.push_back(static_cast<double>(n) * options.dt);
        traj.states.push_back(x);
        if (quiet >= options.fixed_point_window) {
            traj.reached_fixed_point = true;
            if (options.stop_at_fixed_point)
                break;
        }
    }
    return traj;
}

const char *stability_name(Stability s)
{
    switch (s) {
    case Stability::stable:
        return "stable";
    case Stability::unstable:
        return "unstable";
    case Stability::marginal:
        return "marginal";
    }
    return "unknown";
}

StabilityReport equilibrium_stability(std::span<const double> x_star, const PayoffFunction &payoffs, double fd_step)
{
    if (!(fd_step > 0.0))
        throw std::invalid_argument("equilibrium_stability: fd_step must be > 0");
    check_simplex(x_star);
    const auto at_star = field(x_star, payoffs);
    double residual = 0.0;
    for (double v : at_star)
        residual += v * v;
    if (std::sqrt(residual) > kFixedPointResidual)
        throw NotAFixedPoint("equilibrium_stability: state is not a fixed point of the replicator dynamics");

    StabilityReport report;
    const std::size_t n = x_star.size();
    if (n == 1) {
        // The simplex is a single point; no direction to perturb in.
        report.classification = Stability::stable;
        return report;
    }

    const Eigen::MatrixXd basis = tangent_basis(n);
    const auto dim = basis.cols();
    Eigen::MatrixXd jb(static_cast<Eigen::Index>(n), dim);
    std::vector<double> plus(n), minus(n);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (std::size_t a = 0; a < n; ++a) {
            plus[a] = x_star[a] + fd_step * basis(static_cast<Eigen::Index>(a), j);
            minus[a] = x_star[a] - fd_step * basis(static_cast<Eigen::Index>(a), j);
        }
        const auto fp = field(plus, payoffs);
        const auto fm = field(minus, payoffs);
        for (std::size_t a = 0; a < n; ++a)
            jb(static_cast<Eigen::Index>(a), j) = (fp[a] - fm[a]) / (2.0 * fd_step);
    }
    const Eigen::MatrixXd restricted = basis.transpose() * jb;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(restricted, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("equilibrium_stability: eigenvalue computation failed");

    bool all_negative = true;
    bool any_positive = false;
    for (Eigen::Index j = 0; j < dim; ++j) {
        const std::complex<double> ev = solver.eigenvalues()(j);
        report.eigenvalues.push_back(ev);
        all_negative = all_negative && ev.real() < -kEigenTol;
        any_positive = any_positive || ev.real() > kEigenTol;
    }
    report.classification = any_positive ? Stability::unstable
                            : all_negative ? Stability::stable
                                           : Stability::marginal;
    return report;
}

PayoffFunction mean_field_payoff(const LinkModel &model, std::size_t subcarrier)
{
    const auto &players = model.players(subcarrier);
    if (players.empty())
        throw std::invalid_argument("mean_field_payoff: subcarrier " + std::to_string(subcarrier) + " has no players");
    return [&model, subcarrier](std::span<const double> x) {
        const std::size_t L = model.n_levels();
        if (x.size() != L)
            throw std::invalid_argument("mean_field_payoff: state size must equal the number of power levels");
        double mean_power = 0.0;
        for (std::size_t b = 0; b < L; ++b)
            mean_power += x[b] * model.level(b);
        mean_power = std::max(mean_power, 0.0);

        const auto &ps = model.players(subcarrier);
        std::vector<double> powers(model.n_cells(), 0.0);
        std::vector<double> pi(L, 0.0);
        for (std::size_t a = 0; a < L; ++a) {
            double sum = 0.0;
            for (std::size_t k : ps) {
                for (std::size_t l : ps)
                    powers[l] = mean_power;
                powers[k] = model.level(a);
                sum += model.user_ee(powers, k, subcarrier);
            }
            pi[a] = sum / static_cast<double>(ps.size());
        }
        return pi;
    };
}

} // namespace eepc
