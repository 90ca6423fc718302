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
#include "eepc/replicator.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace eepc;

namespace {

PayoffFunction constant(std::vector<double> pi)
{
    return [pi](std::span<const double>) { return pi; };
}

// Symmetric 2x2 matrix game: pi = A x.
PayoffFunction matrix_game(double a, double b, double c, double d)
{
    return [=](std::span<const double> x) { return std::vector<double>{a * x[0] + b * x[1], c * x[0] + d * x[1]}; };
}

std::vector<double> random_simplex(std::size_t n, Rng &rng)
{
    std::exponential_distribution<double> e(1.0);
    std::vector<double> x(n);
    for (auto &v : x)
        v = e(rng);
    const double s = std::accumulate(x.begin(), x.end(), 0.0);
    for (auto &v : x)
        v /= s;
    return x;
}

double simplex_drift(const std::vector<double> &x)
{
    return std::abs(std::accumulate(x.begin(), x.end(), 0.0) - 1.0);
}

} // namespace

TEST_CASE("replicator_rhs examples")
{
    const std::vector<double> half{0.5, 0.5};
    const std::vector<double> pi{2.0, 1.0};
    const auto dx = replicator_rhs(half, pi, population_average(half, pi));
    CHECK(dx[0] == 0.25);
    CHECK(dx[1] == -0.25);

    const std::vector<double> flat{3.0, 3.0, 3.0};
    const std::vector<double> x{0.2, 0.3, 0.5};
    for (double v : replicator_rhs(x, flat, population_average(x, flat)))
        CHECK(v == 0.0);

    const std::vector<double> mono{0.0, 1.0, 0.0};
    const std::vector<double> pi3{5.0, 1.0, 9.0};
    for (double v : replicator_rhs(mono, pi3, population_average(mono, pi3)))
        CHECK(v == 0.0);

    CHECK_THROWS_AS(replicator_rhs(x, half, 1.0), std::invalid_argument);
}

TEST_CASE("replicator field conserves the simplex")
{
    Rng rng(3);
    std::normal_distribution<double> nd(0.0, 10.0);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 2 + rep % 9;
        const auto x = random_simplex(n, rng);
        std::vector<double> pi(n);
        for (auto &v : pi)
            v = nd(rng);
        const auto dx = replicator_rhs(x, pi, population_average(x, pi));
        CHECK(std::abs(std::accumulate(dx.begin(), dx.end(), 0.0)) <= 1e-12);
    }
}

TEST_CASE("uniform payoffs give a constant trajectory")
{
    const std::vector<double> x0{0.1, 0.6, 0.3};
    ReplicatorOptions opt;
    opt.horizon = 5.0;
    opt.stop_at_fixed_point = false;
    const auto t = integrate_replicator(x0, constant({1.5, 1.5, 1.5}), opt);
    CHECK(t.states.size() == 501);
    for (const auto &x : t.states)
        CHECK(x == x0);
    CHECK(t.reached_fixed_point);
}

TEST_CASE("two constant payoffs follow the logistic curve")
{
    ReplicatorOptions opt;
    opt.dt = 1e-3;
    opt.horizon = 10.0;
    opt.stop_at_fixed_point = false;
    const auto t = integrate_replicator({0.5, 0.5}, constant({2.0, 1.0}), opt);
    double worst = 0.0;
    for (std::size_t n = 0; n < t.states.size(); ++n) {
        const double exact = 1.0 / (1.0 + std::exp(-t.times[n]));
        worst = std::max(worst, std::abs(t.states[n][0] - exact));
        CHECK(simplex_drift(t.states[n]) <= 1e-9);
    }
    CHECK(worst <= 5.0 * opt.dt);

    // first-order: halving dt roughly halves the error
    opt.dt = 5e-4;
    const auto fine = integrate_replicator({0.5, 0.5}, constant({2.0, 1.0}), opt);
    double worst_fine = 0.0;
    for (std::size_t n = 0; n < fine.states.size(); ++n)
        worst_fine = std::max(worst_fine, std::abs(fine.states[n][0] - 1.0 / (1.0 + std::exp(-fine.times[n]))));
    CHECK(worst_fine < 0.6 * worst);
}

TEST_CASE("integration keeps every state on the simplex")
{
    Rng rng(9);
    std::normal_distribution<double> nd(0.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + rep % 6;
        std::vector<double> a(n * n);
        for (auto &v : a)
            v = nd(rng);
        const PayoffFunction f = [a, n](std::span<const double> x) {
            std::vector<double> pi(n, 0.0);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    pi[r] += a[r * n + c] * x[c];
            return pi;
        };
        ReplicatorOptions opt;
        opt.dt = 0.05; // coarse on purpose: exercises clipping
        opt.horizon = 20.0;
        const auto t = integrate_replicator(random_simplex(n, rng), f, opt);
        for (const auto &x : t.states) {
            CHECK(simplex_drift(x) <= 1e-9);
            for (double v : x)
                CHECK(v >= 0.0);
        }
    }
}

TEST_CASE("adoption direction follows the payoff advantage")
{
    const PayoffFunction f = matrix_game(1.0, 3.0, 2.0, 1.0);
    ReplicatorOptions opt;
    opt.dt = 1e-3;
    opt.horizon = 8.0;
    opt.stop_at_fixed_point = false;
    Rng rng(2);
    for (int rep = 0; rep < 10; ++rep) {
        const auto t = integrate_replicator(random_simplex(2, rng), f, opt);
        for (std::size_t n = 0; n + 1 < t.states.size(); ++n) {
            const auto &x = t.states[n];
            const auto pi = f(x);
            const double avg = population_average(x, pi);
            for (std::size_t a = 0; a < 2; ++a) {
                const double step = t.states[n + 1][a] - x[a];
                const double adv = pi[a] - avg;
                if (std::abs(adv) * x[a] * opt.dt > 1e-13)
                    CHECK((step > 0) == (adv > 0));
            }
        }
    }
}

TEST_CASE("stability of the monoculture fixed points")
{
    const auto f = constant({2.0, 1.0});
    const std::vector<double> best{1.0, 0.0}, worst{0.0, 1.0};
    for (double h : {1e-6, 5e-7}) {
        const auto s = equilibrium_stability(best, f, h);
        CHECK(s.classification == Stability::stable);
        REQUIRE(s.eigenvalues.size() == 1);
        CHECK(s.eigenvalues[0].real() == doctest::Approx(-1.0).epsilon(1e-6));
        const auto u = equilibrium_stability(worst, f, h);
        CHECK(u.classification == Stability::unstable);
        CHECK(u.eigenvalues[0].real() == doctest::Approx(1.0).epsilon(1e-6));
    }

    // coordination game: both pure states stable, interior mix unstable
    const auto coord = matrix_game(2.0, 0.0, 0.0, 1.0);
    CHECK(equilibrium_stability(best, coord).classification == Stability::stable);
    CHECK(equilibrium_stability(worst, coord).classification == Stability::stable);
    CHECK(equilibrium_stability(std::vector<double>{1.0 / 3.0, 2.0 / 3.0}, coord).classification ==
          Stability::unstable);
    // hawk-dove style: interior mix stable
    const auto anti = matrix_game(0.0, 2.0, 1.0, 0.0);
    const auto mix = equilibrium_stability(std::vector<double>{2.0 / 3.0, 1.0 / 3.0}, anti);
    CHECK(mix.classification == Stability::stable);
    CHECK(mix.eigenvalues[0].real() == doctest::Approx(-2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("uniform payoffs are marginal everywhere")
{
    Rng rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 5;
        const auto x = random_simplex(n, rng);
        const auto r = equilibrium_stability(x, constant(std::vector<double>(n, 4.0)));
        CHECK(r.classification == Stability::marginal);
        CHECK(r.eigenvalues.size() == n - 1);
    }
}

TEST_CASE("stability preconditions")
{
    const auto f = constant({2.0, 1.0});
    CHECK_THROWS_AS(equilibrium_stability(std::vector<double>{0.5, 0.5}, f), NotAFixedPoint);
    CHECK_THROWS_AS(equilibrium_stability(std::vector<double>{0.5, 0.6}, f), std::invalid_argument);
    CHECK_THROWS_AS(equilibrium_stability(std::vector<double>{1.0, 0.0}, f, 0.0), std::invalid_argument);
    CHECK(equilibrium_stability(std::vector<double>{1.0}, constant({1.0})).classification == Stability::stable);
    CHECK_THROWS_AS(integrate_replicator({0.7, 0.7}, f), std::invalid_argument);
    ReplicatorOptions bad;
    bad.dt = 0.0;
    CHECK_THROWS_AS(integrate_replicator({0.5, 0.5}, f, bad), std::invalid_argument);
    const PayoffFunction wrong = [](std::span<const double>) { return std::vector<double>{1.0}; };
    CHECK_THROWS_AS(integrate_replicator({0.5, 0.5}, wrong), std::invalid_argument);
}

TEST_CASE("mean-field dynamics on a sampled drop")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = sample_scenario(NetworkConfig{}, seed);
        const LinkModel model(s);
        const auto f = mean_field_payoff(model, 0);
        const std::size_t L = model.n_levels();

        // at a monoculture every player uses the same level, so the payoff
        // of that level is the mean player EE of the game
        for (std::size_t a = 0; a < L; ++a) {
            std::vector<double> x(L, 0.0);
            x[a] = 1.0;
            std::vector<std::size_t> strat(model.n_cells() * model.n_subcarriers(), a);
            const auto profile = model.profile_from_strategies(strat);
            CHECK(oracle::rel_close(f(x)[a], model.group_ee(profile, 0) / 3.0, 1e-12));
        }

        ReplicatorOptions opt;
        opt.horizon = 200.0;
        const auto t = integrate_replicator(std::vector<double>(L, 1.0 / L), f, opt);
        for (const auto &x : t.states)
            CHECK(simplex_drift(x) <= 1e-9);
        if (t.reached_fixed_point) {
            const auto r = equilibrium_stability(t.states.back(), f);
            CHECK(r.eigenvalues.size() == L - 1);
        }
    }
    const auto s = sample_scenario(oracle::config(0, 2, 1, 4), 1);
    const LinkModel model(s);
    for (std::size_t i = 0; i < 2; ++i)
        if (model.players(i).empty())
            CHECK_THROWS_AS(mean_field_payoff(model, i), std::invalid_argument);
}

TEST_CASE("payoff definitions agree on game states")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = sample_scenario(NetworkConfig{}, seed);
        const LinkModel model(s);
        Rng rng(seed);
        auto games = init_games(model, rng);
        for (auto &g : games) {
            for (int step = 0; step < 3 && !g.converged; ++step) {
                egt_step(g, model, rng);
                const auto sh = population_share(g, model.n_levels());
                double eq15 = 0.0;
                for (const auto &[a, pi] : strategy_payoffs(g, sh, model))
                    eq15 += pi * sh.x[a];
                CHECK(oracle::rel_close(eq15, average_payoff(player_payoffs(g, model)), 1e-12));
            }
        }
    }
}
