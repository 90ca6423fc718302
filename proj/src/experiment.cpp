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

#include "eepc/topology.hpp"

#include <cmath>
#include <exception>
#include <numeric>

namespace eepc {
namespace {

constexpr double kZ95 = 1.959963984540054;

double mean_of(std::span<const double> v)
{
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double ci95(std::span<const double> v)
{
    if (v.size() < 2)
        return 0.0;
    const double m = mean_of(v);
    double ss = 0.0;
    for (double e : v)
        ss += (e - m) * (e - m);
    const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
    return kZ95 * sd / std::sqrt(static_cast<double>(v.size()));
}

std::size_t as_count(double value, std::string_view what)
{
    if (!(value >= 0.0) || value != std::floor(value) || value > 1e9)
        throw ConfigError(std::string(what) + " sweep values must be non-negative integers");
    return static_cast<std::size_t>(value);
}

} // namespace

std::string_view algorithm_name(Algorithm a)
{
    switch (a) {
    case Algorithm::egt:
        return "egt";
    case Algorithm::ngt:
        return "ngt";
    case Algorithm::brute_group:
        return "brute-group";
    case Algorithm::brute_global:
        return "brute-global";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    for (Algorithm a : {Algorithm::egt, Algorithm::ngt, Algorithm::brute_group, Algorithm::brute_global})
        if (algorithm_name(a) == name)
            return a;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected egt, ngt, brute-group or brute-global)");
}

std::string_view sweep_parameter_name(SweepParameter p)
{
    switch (p) {
    case SweepParameter::noise_psd_dbm_per_hz:
        return "noise_psd_dbm_per_hz";
    case SweepParameter::n_users_per_cell:
        return "n_users_per_cell";
    case SweepParameter::n_small_cells:
        return "n_small_cells";
    }
    return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view name)
{
    for (SweepParameter p :
         {SweepParameter::noise_psd_dbm_per_hz, SweepParameter::n_users_per_cell, SweepParameter::n_small_cells})
        if (sweep_parameter_name(p) == name)
            return p;
    throw ConfigError("unknown sweep parameter '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    base.validate();
    if (n_drops < 1)
        throw ConfigError("n_drops must be >= 1");
    if (max_iterations < 1)
        throw ConfigError("max_iterations must be >= 1");
    if (sweep) {
        if (sweep->values.empty())
            throw ConfigError("sweep needs at least one value");
        for (double v : sweep->values)
            apply_sweep_value(base, sweep->parameter, v);
    }
}

double jain_index(std::span<const double> values)
{
    if (values.empty())
        throw std::domain_error("jain_index: empty list");
    double sum = 0.0, sum_sq = 0.0;
    for (double v : values) {
        if (!(v >= 0.0))
            throw std::domain_error("jain_index: values must be non-negative");
        sum += v;
        sum_sq += v * v;
    }
    if (!(sum_sq > 0.0))
        throw std::domain_error("jain_index: all values are zero");
    return sum * sum / (static_cast<double>(values.size()) * sum_sq);
}

std::uint64_t drop_seed(std::uint64_t base_seed, std::size_t drop) { return derive_seed(base_seed, drop); }

RunRecord run_drop(const NetworkConfig &config, Algorithm algorithm, std::size_t drop, std::size_t max_iterations,
                   UpdateSchedule schedule, const SearchLimits &limits)
{
    RunRecord rec;
    rec.seed = drop_seed(config.rng_seed, drop);
    rec.drop = drop;
    rec.algorithm = algorithm;
    rec.n_small_cells = config.n_small_cells;
    rec.n_subcarriers = config.n_subcarriers;
    rec.n_users = config.n_users_per_cell;
    rec.noise_dbm = config.noise_psd_dbm_per_hz;
    try {
        const Scenario scenario = sample_scenario(config, rec.seed);
        const LinkModel model(scenario);
        Rng rng = make_stream(rec.seed, Stream::algorithm);
        switch (algorithm) {
        case Algorithm::egt: {
            auto r = run_algorithm1(model, rng, max_iterations, schedule);
            rec.profile = std::move(r.profile);
            rec.iterations = r.iterations;
            rec.evaluations = r.evaluations;
            rec.converged = r.converged;
            rec.traces = std::move(r.trace);
            break;
        }
        case Algorithm::ngt: {
            auto r = ngt_best_response(model, rng, max_iterations);
            rec.profile = std::move(r.profile);
            rec.iterations = r.rounds;
            rec.evaluations = r.evaluations;
            rec.converged = r.converged;
            rec.traces = std::move(r.trace);
            break;
        }
        case Algorithm::brute_group: {
            auto r = brute_force_all_groups(model, limits);
            rec.profile = std::move(r.profile);
            rec.evaluations = r.evaluations;
            rec.converged = true;
            break;
        }
        case Algorithm::brute_global: {
            auto r = brute_force_global(model, limits);
            rec.profile = std::move(r.profile);
            rec.evaluations = r.evaluations;
            rec.converged = true;
            break;
        }
        }
        rec.cell_ee = model.cell_ee(rec.profile);
        rec.network_ee = model.network_ee(rec.profile);
        rec.jain = jain_index(rec.cell_ee);
    } catch (const std::exception &e) {
        rec.error = e.what();
        rec.converged = false;
        rec.network_ee = std::nan("");
        rec.jain = std::nan("");
        rec.cell_ee.assign(config.n_small_cells + 1, std::nan(""));
        rec.traces.clear();
    }
    return rec;
}

std::vector<RunRecord> run_drops(const ExperimentSpec &spec)
{
    spec.validate();
    std::vector<RunRecord> out;
    out.reserve(spec.n_drops);
    for (std::size_t d = 0; d < spec.n_drops; ++d)
        out.push_back(run_drop(spec.base, spec.algorithm, d, spec.max_iterations, spec.schedule, spec.limits));
    return out;
}

NetworkConfig apply_sweep_value(NetworkConfig config, SweepParameter parameter, double value)
{
    switch (parameter) {
    case SweepParameter::noise_psd_dbm_per_hz:
        if (!std::isfinite(value))
            throw ConfigError("noise_psd_dbm_per_hz sweep values must be finite");
        config.noise_psd_dbm_per_hz = value;
        break;
    case SweepParameter::n_users_per_cell:
        config.n_users_per_cell = as_count(value, "n_users_per_cell");
        break;
    case SweepParameter::n_small_cells:
        config.n_small_cells = as_count(value, "n_small_cells");
        break;
    }
    config.validate();
    return config;
}

Summary summarize(std::span<const RunRecord> records)
{
    Summary s;
    std::vector<double> ee, jain;
    for (const auto &r : records) {
        if (!r.ok()) {
            ++s.n_failed;
            continue;
        }
        ee.push_back(r.network_ee);
        jain.push_back(r.jain);
    }
    s.n_ok = ee.size();
    s.mean_network_ee = mean_of(ee);
    s.mean_jain = mean_of(jain);
    s.ci_half_width = ci95(ee);
    return s;
}

std::vector<SweepRow> sweep(const ExperimentSpec &spec)
{
    spec.validate();
    if (!spec.sweep)
        throw ConfigError("sweep: no sweep parameter given");
    std::vector<SweepRow> rows;
    for (double v : spec.sweep->values) {
        ExperimentSpec point = spec;
        point.sweep.reset();
        point.base = apply_sweep_value(spec.base, spec.sweep->parameter, v);
        SweepRow row;
        row.value = v;
        row.records = run_drops(point);
        row.summary = summarize(row.records);
        rows.push_back(std::move(row));
    }
    return rows;
}

PairedComparison compare_egt_ngt(const ExperimentSpec &spec)
{
    ExperimentSpec egt = spec, ngt = spec;
    egt.algorithm = Algorithm::egt;
    ngt.algorithm = Algorithm::ngt;
    PairedComparison out;
    out.egt = run_drops(egt);
    out.ngt = run_drops(ngt);

    std::vector<double> je, jn, diff;
    std::size_t fairer = 0;
    for (std::size_t d = 0; d < out.egt.size(); ++d) {
        if (!out.egt[d].ok() || !out.ngt[d].ok())
            continue;
        je.push_back(out.egt[d].jain);
        jn.push_back(out.ngt[d].jain);
        diff.push_back(out.egt[d].jain - out.ngt[d].jain);
        if (out.egt[d].jain >= out.ngt[d].jain)
            ++fairer;
    }
    out.n_pairs = diff.size();
    out.fraction_egt_fairer = out.n_pairs ? static_cast<double>(fairer) / static_cast<double>(out.n_pairs) : 0.0;
    out.mean_jain_egt = mean_of(je);
    out.mean_jain_ngt = mean_of(jn);
    out.mean_jain_diff = mean_of(diff);
    out.ci_half_width = ci95(diff);
    return out;
}

std::vector<GapRow> oracle_gap(const ExperimentSpec &spec)
{
    spec.validate();
    std::vector<GapRow> rows;
    for (std::size_t d = 0; d < spec.n_drops; ++d) {
        const std::uint64_t seed = drop_seed(spec.base.rng_seed, d);
        const Scenario scenario = sample_scenario(spec.base, seed);
        const LinkModel model(scenario);
        Rng rng = make_stream(seed, Stream::algorithm);
        const auto egt = run_algorithm1(model, rng, spec.max_iterations, spec.schedule);
        for (std::size_t i = 0; i < model.n_subcarriers(); ++i) {
            if (model.players(i).empty())
                continue;
            const auto oracle = brute_force_group(model, i, spec.limits);
            GapRow row;
            row.seed = seed;
            row.drop = d;
            row.subcarrier = i;
            row.oracle_ee = oracle.objective;
            row.egt_ee = model.group_ee(egt.profile, i);
            row.relative_gap = (row.oracle_ee - row.egt_ee) / row.oracle_ee;
            row.oracle_evaluations = oracle.evaluations;
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace eepc
