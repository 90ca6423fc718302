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

// eepc_cli: seeded experiments for the two-tier power-control algorithms.
//
//   eepc_cli simulate --config net.cfg --algorithm egt --drops 100 --out runs.csv
//   eepc_cli sweep    --config net.cfg --param noise_psd_dbm_per_hz --values -194,-184,-174 --out sweep.csv
//   eepc_cli compare  --config net.cfg --drops 100 --out fairness.csv
//   eepc_cli oracle   --config net.cfg --drops 20 --out gap.csv

#include "eepc/experiment.hpp"
#include "eepc/results_io.hpp"
#include "eepc/simd/kernels.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::size_t drops = 1;
    std::string algorithm = "egt";
    std::string out;
    std::size_t max_iters = 100;
    std::string schedule = "sync";
    std::string isa = "auto";
};

void add_common(CLI::App *cmd, CommonOptions &o, bool with_algorithm)
{
    cmd->add_option("--config", o.config_path, "Network config file (key = value)");
    cmd->add_option("--seed", o.seed, "Base seed; overrides rng_seed from the config");
    cmd->add_option("--drops", o.drops, "Number of independent drops")->check(CLI::PositiveNumber);
    if (with_algorithm)
        cmd->add_option("--algorithm", o.algorithm, "egt | ngt | brute-group | brute-global");
    cmd->add_option("--out", o.out, "Output CSV path");
    cmd->add_option("--max-iters", o.max_iters, "Iteration / round cap")->check(CLI::PositiveNumber);
    cmd->add_option("--schedule", o.schedule, "EGT update schedule: sync | seq");
    cmd->add_option("--isa", o.isa, "Kernel instruction set: auto | scalar | avx2 | neon");
}

eepc::ExperimentSpec make_spec(const CommonOptions &o)
{
    eepc::ExperimentSpec spec;
    if (!o.config_path.empty())
        spec.base = eepc::load_config(o.config_path);
    if (o.seed)
        spec.base.rng_seed = *o.seed;
    spec.algorithm = eepc::parse_algorithm(o.algorithm);
    spec.n_drops = o.drops;
    spec.output_path = o.out;
    spec.max_iterations = o.max_iters;
    if (o.schedule == "sync")
        spec.schedule = eepc::UpdateSchedule::synchronous;
    else if (o.schedule == "seq")
        spec.schedule = eepc::UpdateSchedule::sequential;
    else
        throw eepc::ConfigError("unknown schedule '" + o.schedule + "' (expected sync or seq)");
    eepc::simd::select_isa(o.isa);
    return spec;
}

std::vector<double> parse_values(const std::string &list)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw eepc::ConfigError("--values: cannot parse '" + item + "'");
        out.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

int report_failures(std::span<const eepc::RunRecord> records)
{
    int failed = 0;
    for (const auto &r : records) {
        if (!r.ok()) {
            std::cerr << "drop " << r.drop << " (seed " << r.seed << ") failed: " << r.error << '\n';
            ++failed;
        }
    }
    return failed;
}

int cmd_simulate(const CommonOptions &o)
{
    const auto spec = make_spec(o);
    const auto records = eepc::run_drops(spec);
    if (!o.out.empty())
        eepc::emit_results(records, o.out, spec.base.n_cells());
    const auto s = eepc::summarize(records);
    std::printf("algorithm=%s drops=%zu ok=%zu mean_network_ee=%s mean_jain=%s ci95=%s\n",
                std::string(eepc::algorithm_name(spec.algorithm)).c_str(), records.size(), s.n_ok,
                eepc::format_real(s.mean_network_ee).c_str(), eepc::format_real(s.mean_jain).c_str(),
                eepc::format_real(s.ci_half_width).c_str());
    return report_failures(records) ? 2 : 0;
}

int cmd_sweep(const CommonOptions &o, const std::string &param, const std::string &values)
{
    auto spec = make_spec(o);
    spec.sweep = eepc::Sweep{eepc::parse_sweep_parameter(param), parse_values(values)};
    const auto rows = eepc::sweep(spec);
    if (!o.out.empty())
        eepc::write_sweep_table(rows, spec.sweep->parameter, o.out);
    int failed = 0;
    for (const auto &row : rows) {
        std::printf("%s=%s mean_network_ee=%s mean_jain=%s ci95=%s ok=%zu\n", param.c_str(),
                    eepc::format_real(row.value).c_str(), eepc::format_real(row.summary.mean_network_ee).c_str(),
                    eepc::format_real(row.summary.mean_jain).c_str(),
                    eepc::format_real(row.summary.ci_half_width).c_str(), row.summary.n_ok);
        failed += report_failures(row.records);
    }
    return failed ? 2 : 0;
}

int cmd_compare(const CommonOptions &o)
{
    const auto spec = make_spec(o);
    const auto cmp = eepc::compare_egt_ngt(spec);
    if (!o.out.empty())
        eepc::write_comparison(cmp, o.out);
    std::printf("pairs=%zu egt_fairer_or_equal=%s mean_jain_egt=%s mean_jain_ngt=%s diff=%s ci95=%s\n", cmp.n_pairs,
                eepc::format_real(cmp.fraction_egt_fairer).c_str(), eepc::format_real(cmp.mean_jain_egt).c_str(),
                eepc::format_real(cmp.mean_jain_ngt).c_str(), eepc::format_real(cmp.mean_jain_diff).c_str(),
                eepc::format_real(cmp.ci_half_width).c_str());
    const int failed = report_failures(cmp.egt) + report_failures(cmp.ngt);
    return failed ? 2 : 0;
}

int cmd_oracle(const CommonOptions &o)
{
    const auto spec = make_spec(o);
    const auto rows = eepc::oracle_gap(spec);
    if (!o.out.empty())
        eepc::write_gap_report(rows, o.out);
    double gap = 0.0;
    for (const auto &r : rows)
        gap += r.relative_gap;
    std::printf("groups=%zu mean_relative_gap=%s\n", rows.size(),
                eepc::format_real(rows.empty() ? 0.0 : gap / static_cast<double>(rows.size())).c_str());
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Energy-efficient uplink power control for two-tier networks"};
    app.require_subcommand(1);

    CommonOptions simulate_opts, sweep_opts, compare_opts, oracle_opts;
    std::string sweep_param, sweep_values;

    auto *simulate = app.add_subcommand("simulate", "Run seeded drops with one algorithm");
    add_common(simulate, simulate_opts, true);

    auto *sweep = app.add_subcommand("sweep", "Sweep one parameter with common random numbers");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--param", sweep_param, "noise_psd_dbm_per_hz | n_users_per_cell | n_small_cells")->required();
    sweep->add_option("--values", sweep_values, "Comma-separated values")->required();

    auto *compare = app.add_subcommand("compare", "Paired EGT vs NGT fairness comparison");
    add_common(compare, compare_opts, false);

    auto *oracle = app.add_subcommand("oracle", "Per-subcarrier optimality gap of EGT vs brute force");
    add_common(oracle, oracle_opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate)
            return cmd_simulate(simulate_opts);
        if (*sweep)
            return cmd_sweep(sweep_opts, sweep_param, sweep_values);
        if (*compare)
            return cmd_compare(compare_opts);
        if (*oracle)
            return cmd_oracle(oracle_opts);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
