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


#include "eepc/experiment.hpp"
#include "eepc/results_io.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace eepc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name)
{
    const auto dir = fs::temp_directory_path() / "eepc_test_experiment";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines_of(const fs::path &p)
{
    std::vector<std::string> out;
    std::istringstream in(slurp(p));
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

std::size_t columns(const std::string &line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

ExperimentSpec spec_for(NetworkConfig c, Algorithm a, std::size_t drops)
{
    ExperimentSpec s;
    s.base = std::move(c);
    s.algorithm = a;
    s.n_drops = drops;
    return s;
}

// Same value after a trip through 12 significant digits.
bool same_at_12(double written, double read)
{
    if (std::isnan(written))
        return std::isnan(read);
    return read == std::stod(format_real(written));
}

} // namespace

TEST_CASE("jain index examples")
{
    CHECK(jain_index(std::vector<double>{1, 1, 1}) == 1.0);
    CHECK(jain_index(std::vector<double>{1, 0, 0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(jain_index(std::vector<double>{2, 4}) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK_THROWS_AS(jain_index(std::vector<double>{0, 0}), std::domain_error);
    CHECK_THROWS_AS(jain_index(std::vector<double>{}), std::domain_error);
    CHECK_THROWS_AS(jain_index(std::vector<double>{1, -1}), std::domain_error);
}

TEST_CASE("record invariants")
{
    for (auto a : {Algorithm::egt, Algorithm::ngt, Algorithm::brute_group}) {
        const auto recs = run_drops(spec_for(NetworkConfig{}, a, 20));
        for (const auto &r : recs) {
            REQUIRE(r.ok());
            CHECK(r.cell_ee.size() == 3);
            CHECK(r.jain >= 1.0 / 3.0 - 1e-12);
            CHECK(r.jain <= 1.0 + 1e-12);
            double sum = 0.0;
            for (double v : r.cell_ee)
                sum += v;
            CHECK(oracle::rel_close(sum, r.network_ee, 1e-9));
            CHECK(r.seed == drop_seed(1, r.drop));
        }
    }
}

TEST_CASE("brute-global drop passes the oracle result through")
{
    const auto c = oracle::config(1, 2, 2, 2);
    const auto recs = run_drops(spec_for(c, Algorithm::brute_global, 3));
    for (const auto &r : recs) {
        const auto s = sample_scenario(c, r.seed);
        const LinkModel model(s);
        const auto direct = brute_force_global(model);
        CHECK(r.network_ee == direct.objective);
        CHECK(r.profile == direct.profile);
        CHECK(r.evaluations == 16);
    }
}

TEST_CASE("EGT evaluations per iteration equal the player count")
{
    for (std::uint64_t d = 0; d < 20; ++d) {
        NetworkConfig c;
        c.n_users_per_cell = 4;
        const auto r = run_drop(c, Algorithm::egt, d);
        const auto s = sample_scenario(c, r.seed);
        const LinkModel model(s);
        std::uint64_t want = 0;
        for (std::size_t i = 0; i < 6; ++i)
            want += model.players(i).size() * r.traces[i].size();
        CHECK(r.evaluations == want);
    }
}

TEST_CASE("failed drops become error records and the batch continues")
{
    auto c = oracle::config(30, 1, 1, 2);
    c.small_radius = 300.0;
    const auto recs = run_drops(spec_for(c, Algorithm::egt, 3));
    REQUIRE(recs.size() == 3);
    for (const auto &r : recs) {
        CHECK(!r.ok());
        CHECK(std::isnan(r.network_ee));
        CHECK(r.cell_ee.size() == 31);
    }
    const auto sum = summarize(recs);
    CHECK(sum.n_failed == 3);
    CHECK(sum.n_ok == 0);

    const auto path = scratch("failed.csv");
    emit_results(recs, path, 31);
    const auto back = parse_results(path);
    REQUIRE(back.size() == 3);
    CHECK(std::isnan(back[0].network_ee));
}

TEST_CASE("experiment validation")
{
    auto s = spec_for(NetworkConfig{}, Algorithm::egt, 0);
    CHECK_THROWS_AS(run_drops(s), ConfigError);
    s.n_drops = 1;
    s.max_iterations = 0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.max_iterations = 10;
    s.sweep = Sweep{SweepParameter::n_users_per_cell, {2, 7}};
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.sweep = Sweep{SweepParameter::n_small_cells, {1.5}};
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.sweep = Sweep{SweepParameter::noise_psd_dbm_per_hz, {}};
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.sweep = Sweep{SweepParameter::noise_psd_dbm_per_hz, {-180}};
    CHECK_NOTHROW(s.validate());

    CHECK(parse_algorithm("brute-group") == Algorithm::brute_group);
    CHECK_THROWS_AS(parse_algorithm("greedy"), ConfigError);
    CHECK(parse_sweep_parameter("n_small_cells") == SweepParameter::n_small_cells);
    CHECK_THROWS_AS(parse_sweep_parameter("noise"), ConfigError);
}

TEST_CASE("results schema")
{
    CHECK(results_header(3) ==
          "seed,algorithm,K,N,n_users,noise_dbm,network_ee,jain,iterations,evaluations,converged,"
          "cell_ee_0,cell_ee_1,cell_ee_2");

    const auto empty = scratch("empty.csv");
    emit_results({}, empty, 3);
    CHECK(slurp(empty) == results_header(3) + "\n");
    CHECK(slurp(trace_path_for(empty)) == "drop,game,iteration,avg_payoff\n");
    CHECK(parse_results(empty).empty());

    const auto one = scratch("one.csv");
    const auto recs = run_drops(spec_for(NetworkConfig{}, Algorithm::egt, 1));
    emit_results(recs, one, 3);
    const auto lines = lines_of(one);
    REQUIRE(lines.size() == 2);
    CHECK(columns(lines[0]) == 14);
    CHECK(columns(lines[1]) == 14);
    CHECK(trace_path_for(one).filename() == "one.trace.csv");

    CHECK_THROWS_AS(emit_results(recs, one, 2), std::invalid_argument);
}

TEST_CASE("emitted files round-trip at 12 significant digits")
{
    for (auto a : {Algorithm::egt, Algorithm::ngt}) {
        const auto recs = run_drops(spec_for(NetworkConfig{}, a, 10));
        const auto path = scratch("roundtrip.csv");
        emit_results(recs, path, 3);
        const auto back = parse_results(path);
        REQUIRE(back.size() == recs.size());
        for (std::size_t d = 0; d < recs.size(); ++d) {
            const auto &w = recs[d];
            const auto &r = back[d];
            CHECK(r.seed == w.seed);
            CHECK(r.algorithm == w.algorithm);
            CHECK(r.n_small_cells == w.n_small_cells);
            CHECK(r.n_subcarriers == w.n_subcarriers);
            CHECK(r.n_users == w.n_users);
            CHECK(same_at_12(w.noise_dbm, r.noise_dbm));
            CHECK(same_at_12(w.network_ee, r.network_ee));
            CHECK(same_at_12(w.jain, r.jain));
            CHECK(r.iterations == w.iterations);
            CHECK(r.evaluations == w.evaluations);
            CHECK(r.converged == w.converged);
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(same_at_12(w.cell_ee[k], r.cell_ee[k]));
            REQUIRE(r.traces.size() <= w.traces.size());
            for (std::size_t g = 0; g < r.traces.size(); ++g) {
                REQUIRE(r.traces[g].size() == w.traces[g].size());
                for (std::size_t t = 0; t < r.traces[g].size(); ++t)
                    CHECK(same_at_12(w.traces[g][t], r.traces[g][t]));
            }
        }
        // parsed records re-emit to the same bytes
        const auto again = scratch("roundtrip2.csv");
        emit_results(back, again, 3);
        CHECK(slurp(again) == slurp(path));
        CHECK(slurp(trace_path_for(again)) == slurp(trace_path_for(path)));
    }
}

TEST_CASE("parse_results rejects malformed files")
{
    const auto path = scratch("bad.csv");
    {
        std::ofstream out(path);
        out << "seed,algorithm\n";
    }
    CHECK_THROWS_AS(parse_results(path), IoError);
    {
        std::ofstream out(path);
        out << results_header(1) << "\n1,egt,0,1,1,-194,1.5,1,3,3,1\n";
    }
    CHECK_THROWS_AS(parse_results(path), IoError);
    {
        std::ofstream out(path);
        out << results_header(1) << "\n1,egt,0,1,1,-194,1.5,one,3,3,1,1.5\n";
    }
    CHECK_THROWS_WITH_AS(parse_results(path), doctest::Contains("bad.csv:2"), IoError);
    fs::remove(trace_path_for(path));
    CHECK_THROWS_AS(parse_results(scratch("missing.csv")), IoError);
    CHECK_THROWS_WITH_AS(emit_results({}, fs::path("/nonexistent-dir/x.csv"), 1),
                         doctest::Contains("/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("repeated runs produce byte-identical files")
{
    for (auto a : {Algorithm::egt, Algorithm::ngt, Algorithm::brute_group}) {
        const auto p1 = scratch("rep1.csv"), p2 = scratch("rep2.csv");
        emit_results(run_drops(spec_for(NetworkConfig{}, a, 5)), p1, 3);
        emit_results(run_drops(spec_for(NetworkConfig{}, a, 5)), p2, 3);
        CHECK(slurp(p1) == slurp(p2));
        CHECK(slurp(trace_path_for(p1)) == slurp(trace_path_for(p2)));
    }
}

TEST_CASE("single-value sweep equals run_drops")
{
    auto s = spec_for(NetworkConfig{}, Algorithm::egt, 10);
    s.sweep = Sweep{SweepParameter::noise_psd_dbm_per_hz, {-194}};
    const auto rows = sweep(s);
    REQUIRE(rows.size() == 1);
    s.sweep.reset();
    const auto direct = summarize(run_drops(s));
    CHECK(rows[0].summary.mean_network_ee == direct.mean_network_ee);
    CHECK(rows[0].summary.mean_jain == direct.mean_jain);
    CHECK(rows[0].summary.ci_half_width == direct.ci_half_width);
    CHECK(rows[0].summary.n_ok == 10);

    s.sweep = Sweep{};
    CHECK_THROWS_AS(sweep(spec_for(NetworkConfig{}, Algorithm::egt, 1)), ConfigError);
}

TEST_CASE("sweeps reuse drop seeds and geometry")
{
    auto s = spec_for(NetworkConfig{}, Algorithm::egt, 5);
    s.sweep = Sweep{SweepParameter::noise_psd_dbm_per_hz, {-194, -174}};
    const auto rows = sweep(s);
    for (std::size_t d = 0; d < 5; ++d) {
        CHECK(rows[0].records[d].seed == rows[1].records[d].seed);
        CHECK(rows[0].records[d].noise_dbm == -194);
        CHECK(rows[1].records[d].noise_dbm == -174);
    }

    const auto cmp = compare_egt_ngt(spec_for(NetworkConfig{}, Algorithm::egt, 8));
    CHECK(cmp.n_pairs == 8);
    for (std::size_t d = 0; d < 8; ++d) {
        CHECK(cmp.egt[d].seed == cmp.ngt[d].seed);
        CHECK(cmp.egt[d].algorithm == Algorithm::egt);
        CHECK(cmp.ngt[d].algorithm == Algorithm::ngt);
    }
}

TEST_CASE("EE trends over noise and users per cell")
{
    auto s = spec_for(NetworkConfig{}, Algorithm::egt, 100);
    s.sweep = Sweep{SweepParameter::noise_psd_dbm_per_hz, {-194, -184, -174}};
    const auto noise = sweep(s);
    CHECK(noise[0].summary.mean_network_ee > noise[1].summary.mean_network_ee);
    CHECK(noise[1].summary.mean_network_ee > noise[2].summary.mean_network_ee);

    s.sweep = Sweep{SweepParameter::n_users_per_cell, {2, 4, 6}};
    const auto users = sweep(s);
    CHECK(users[0].summary.mean_network_ee < users[1].summary.mean_network_ee);
    CHECK(users[1].summary.mean_network_ee < users[2].summary.mean_network_ee);
}

TEST_CASE("oracle gap rows")
{
    const auto rows = oracle_gap(spec_for(oracle::config(2, 4, 4, 4), Algorithm::egt, 5));
    CHECK(rows.size() == 20);
    for (const auto &r : rows) {
        CHECK(r.oracle_ee >= r.egt_ee);
        CHECK(r.relative_gap >= 0.0);
        CHECK(r.relative_gap < 1.0);
        CHECK(r.oracle_evaluations == 64);
    }
}
