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

#include "eepc/results_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eepc {
namespace {

constexpr std::size_t kFixedColumns = 11;

std::ofstream open_out(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream &out, const std::filesystem::path &path)
{
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        out.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<std::string> read_lines(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

template <class T> T parse_int(std::string_view s, const std::filesystem::path &path, std::size_t line)
{
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw IoError(path.string() + ":" + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
    return v;
}

double parse_real(std::string_view s, const std::filesystem::path &path, std::size_t line)
{
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw IoError(path.string() + ":" + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    return v;
}

} // namespace

std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string results_header(std::size_t n_cells)
{
    std::string h = "seed,algorithm,K,N,n_users,noise_dbm,network_ee,jain,iterations,evaluations,converged";
    for (std::size_t k = 0; k < n_cells; ++k)
        h += ",cell_ee_" + std::to_string(k);
    return h;
}

std::filesystem::path trace_path_for(const std::filesystem::path &results_path)
{
    auto p = results_path;
    p.replace_extension(".trace.csv");
    return p;
}

void emit_results(std::span<const RunRecord> records, const std::filesystem::path &path, std::size_t n_cells)
{
    for (const auto &r : records)
        if (r.cell_ee.size() != n_cells)
            throw std::invalid_argument("emit_results: record of drop " + std::to_string(r.drop) + " has " +
                                        std::to_string(r.cell_ee.size()) + " cells, expected " +
                                        std::to_string(n_cells));

    auto out = open_out(path);
    out << results_header(n_cells) << '\n';
    for (const auto &r : records) {
        out << r.seed << ',' << algorithm_name(r.algorithm) << ',' << r.n_small_cells << ',' << r.n_subcarriers << ','
            << r.n_users << ',' << format_real(r.noise_dbm) << ',' << format_real(r.network_ee) << ','
            << format_real(r.jain) << ',' << r.iterations << ',' << r.evaluations << ',' << (r.converged ? 1 : 0);
        for (double v : r.cell_ee)
            out << ',' << format_real(v);
        out << '\n';
    }
    finish(out, path);

    const auto tpath = trace_path_for(path);
    auto trace = open_out(tpath);
    trace << "drop,game,iteration,avg_payoff\n";
    for (const auto &r : records)
        for (std::size_t g = 0; g < r.traces.size(); ++g)
            for (std::size_t t = 0; t < r.traces[g].size(); ++t)
                trace << r.drop << ',' << g << ',' << (t + 1) << ',' << format_real(r.traces[g][t]) << '\n';
    finish(trace, tpath);
}

std::vector<RunRecord> parse_results(const std::filesystem::path &path)
{
    const auto lines = read_lines(path);
    if (lines.empty())
        throw IoError(path.string() + ": missing header");
    const auto header = split(lines[0]);
    if (header.size() < kFixedColumns)
        throw IoError(path.string() + ": header has too few columns");
    const std::size_t n_cells = header.size() - kFixedColumns;
    if (lines[0] != results_header(n_cells))
        throw IoError(path.string() + ": unexpected header '" + lines[0] + "'");

    std::vector<RunRecord> records;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const auto f = split(lines[ln]);
        if (f.size() != header.size())
            throw IoError(path.string() + ":" + std::to_string(ln + 1) + ": expected " +
                          std::to_string(header.size()) + " columns, got " + std::to_string(f.size()));
        RunRecord r;
        r.drop = records.size();
        r.seed = parse_int<std::uint64_t>(f[0], path, ln + 1);
        r.algorithm = parse_algorithm(f[1]);
        r.n_small_cells = parse_int<std::size_t>(f[2], path, ln + 1);
        r.n_subcarriers = parse_int<std::size_t>(f[3], path, ln + 1);
        r.n_users = parse_int<std::size_t>(f[4], path, ln + 1);
        r.noise_dbm = parse_real(f[5], path, ln + 1);
        r.network_ee = parse_real(f[6], path, ln + 1);
        r.jain = parse_real(f[7], path, ln + 1);
        r.iterations = parse_int<std::size_t>(f[8], path, ln + 1);
        r.evaluations = parse_int<std::uint64_t>(f[9], path, ln + 1);
        r.converged = parse_int<int>(f[10], path, ln + 1) != 0;
        for (std::size_t k = 0; k < n_cells; ++k)
            r.cell_ee.push_back(parse_real(f[kFixedColumns + k], path, ln + 1));
        records.push_back(std::move(r));
    }

    const auto tpath = trace_path_for(path);
    if (std::filesystem::exists(tpath)) {
        const auto tlines = read_lines(tpath);
        if (tlines.empty() || tlines[0] != "drop,game,iteration,avg_payoff")
            throw IoError(tpath.string() + ": unexpected header");
        for (std::size_t ln = 1; ln < tlines.size(); ++ln) {
            const auto f = split(tlines[ln]);
            if (f.size() != 4)
                throw IoError(tpath.string() + ":" + std::to_string(ln + 1) + ": expected 4 columns");
            const auto drop = parse_int<std::size_t>(f[0], tpath, ln + 1);
            const auto game = parse_int<std::size_t>(f[1], tpath, ln + 1);
            const auto iter = parse_int<std::size_t>(f[2], tpath, ln + 1);
            if (drop >= records.size() || iter == 0)
                throw IoError(tpath.string() + ":" + std::to_string(ln + 1) + ": row does not match a drop");
            auto &traces = records[drop].traces;
            if (traces.size() <= game)
                traces.resize(game + 1);
            if (traces[game].size() + 1 != iter)
                throw IoError(tpath.string() + ":" + std::to_string(ln + 1) + ": iterations out of order");
            traces[game].push_back(parse_real(f[3], tpath, ln + 1));
        }
    }
    return records;
}

void write_sweep_table(std::span<const SweepRow> rows, SweepParameter parameter, const std::filesystem::path &path)
{
    auto out = open_out(path);
    out << "parameter,value,n_drops,n_failed,mean_network_ee,mean_jain,ci_half_width\n";
    for (const auto &row : rows)
        out << sweep_parameter_name(parameter) << ',' << format_real(row.value) << ',' << row.summary.n_ok << ','
            << row.summary.n_failed << ',' << format_real(row.summary.mean_network_ee) << ','
            << format_real(row.summary.mean_jain) << ',' << format_real(row.summary.ci_half_width) << '\n';
    finish(out, path);
}

void write_comparison(const PairedComparison &cmp, const std::filesystem::path &path)
{
    auto out = open_out(path);
    out << "drop,seed,jain_egt,jain_ngt,network_ee_egt,network_ee_ngt\n";
    for (std::size_t d = 0; d < cmp.egt.size() && d < cmp.ngt.size(); ++d)
        out << d << ',' << cmp.egt[d].seed << ',' << format_real(cmp.egt[d].jain) << ','
            << format_real(cmp.ngt[d].jain) << ',' << format_real(cmp.egt[d].network_ee) << ','
            << format_real(cmp.ngt[d].network_ee) << '\n';
    finish(out, path);
}

void write_gap_report(std::span<const GapRow> rows, const std::filesystem::path &path)
{
    auto out = open_out(path);
    out << "seed,drop,subcarrier,oracle_ee,egt_ee,relative_gap,oracle_evaluations\n";
    for (const auto &r : rows)
        out << r.seed << ',' << r.drop << ',' << r.subcarrier << ',' << format_real(r.oracle_ee) << ','
            << format_real(r.egt_ee) << ',' << format_real(r.relative_gap) << ',' << r.oracle_evaluations << '\n';
    finish(out, path);
}

} // namespace eepc
