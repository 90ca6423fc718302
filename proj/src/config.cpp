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

#include "eepc/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace eepc {
namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string line_tag(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_double(std::string_view v, std::size_t line, std::string_view key)
{
    double out = 0.0;
    const auto *end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out))
        throw ConfigError(line_tag(line) + "'" + std::string(key) + "' expects a real number, got '" +
                          std::string(v) + "'");
    return out;
}

std::uint64_t parse_u64(std::string_view v, std::size_t line, std::string_view key)
{
    std::uint64_t out = 0;
    const auto *end = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError(line_tag(line) + "'" + std::string(key) + "' expects a non-negative integer, got '" +
                          std::string(v) + "'");
    return out;
}

std::string fmt_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

using Setter = std::function<void(NetworkConfig &, std::string_view, std::size_t)>;

const std::map<std::string, Setter, std::less<>> &setters()
{
    auto real = [](double NetworkConfig::*field, const char *name) {
        return Setter([field, name](NetworkConfig &c, std::string_view v, std::size_t line) {
            c.*field = parse_double(v, line, name);
        });
    };
    auto count = [](std::size_t NetworkConfig::*field, const char *name) {
        return Setter([field, name](NetworkConfig &c, std::string_view v, std::size_t line) {
            c.*field = static_cast<std::size_t>(parse_u64(v, line, name));
        });
    };
    static const std::map<std::string, Setter, std::less<>> table{
        {"macro_radius", real(&NetworkConfig::macro_radius, "macro_radius")},
        {"small_radius", real(&NetworkConfig::small_radius, "small_radius")},
        {"n_small_cells", count(&NetworkConfig::n_small_cells, "n_small_cells")},
        {"n_subcarriers", count(&NetworkConfig::n_subcarriers, "n_subcarriers")},
        {"n_users_per_cell", count(&NetworkConfig::n_users_per_cell, "n_users_per_cell")},
        {"n_antennas_mbs", count(&NetworkConfig::n_antennas_mbs, "n_antennas_mbs")},
        {"n_antennas_sbs", count(&NetworkConfig::n_antennas_sbs, "n_antennas_sbs")},
        {"path_loss_exponent", real(&NetworkConfig::path_loss_exponent, "path_loss_exponent")},
        {"shadowing_std_db", real(&NetworkConfig::shadowing_std_db, "shadowing_std_db")},
        {"antenna_constant", real(&NetworkConfig::antenna_constant, "antenna_constant")},
        {"noise_psd_dbm_per_hz", real(&NetworkConfig::noise_psd_dbm_per_hz, "noise_psd_dbm_per_hz")},
        {"subcarrier_bandwidth_hz", real(&NetworkConfig::subcarrier_bandwidth_hz, "subcarrier_bandwidth_hz")},
        {"power_levels",
         [](NetworkConfig &c, std::string_view v, std::size_t line) {
             c.power_levels.clear();
             while (true) {
                 const auto comma = v.find(',');
                 const auto item = trim(v.substr(0, comma));
                 if (item.empty())
                     throw ConfigError(line_tag(line) + "'power_levels' has an empty entry");
                 c.power_levels.push_back(parse_double(item, line, "power_levels"));
                 if (comma == std::string_view::npos)
                     break;
                 v.remove_prefix(comma + 1);
             }
         }},
        {"circuit_power", real(&NetworkConfig::circuit_power, "circuit_power")},
        {"rng_seed",
         [](NetworkConfig &c, std::string_view v, std::size_t line) { c.rng_seed = parse_u64(v, line, "rng_seed"); }},
    };
    return table;
}

} // namespace

std::vector<double> log_spaced_levels(double lo_w, double hi_w, std::size_t count)
{
    if (count == 0 || !(lo_w > 0.0) || !(hi_w >= lo_w))
        throw ConfigError("log_spaced_levels: need count >= 1 and 0 < lo <= hi");
    if (count == 1)
        return {lo_w};
    std::vector<double> out(count);
    const double step = std::log10(hi_w / lo_w) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo_w * std::pow(10.0, step * static_cast<double>(i));
    out.back() = hi_w;
    return out;
}

double NetworkConfig::noise_power() const
{
    return std::pow(10.0, (noise_psd_dbm_per_hz - 30.0) / 10.0) * subcarrier_bandwidth_hz;
}

void NetworkConfig::validate() const
{
    if (!(small_radius > 0.0))
        throw ConfigError("small_radius must be > 0");
    if (!(macro_radius > small_radius))
        throw ConfigError("macro_radius must exceed small_radius");
    if (n_subcarriers < 1)
        throw ConfigError("n_subcarriers must be >= 1");
    if (n_users_per_cell < 1)
        throw ConfigError("n_users_per_cell must be >= 1");
    if (n_users_per_cell > n_subcarriers)
        throw ConfigError("n_users_per_cell must not exceed n_subcarriers (one user per subcarrier per cell)");
    if (n_antennas_sbs < 1)
        throw ConfigError("n_antennas_sbs must be >= 1");
    if (n_antennas_mbs < n_antennas_sbs)
        throw ConfigError("n_antennas_mbs must be >= n_antennas_sbs");
    if (!(path_loss_exponent > 0.0))
        throw ConfigError("path_loss_exponent must be > 0");
    if (!(shadowing_std_db >= 0.0))
        throw ConfigError("shadowing_std_db must be >= 0");
    if (!(antenna_constant > 0.0))
        throw ConfigError("antenna_constant must be > 0");
    if (!(subcarrier_bandwidth_hz > 0.0))
        throw ConfigError("subcarrier_bandwidth_hz must be > 0");
    if (power_levels.empty())
        throw ConfigError("power_levels must contain at least one level");
    for (std::size_t i = 0; i < power_levels.size(); ++i) {
        if (!(power_levels[i] > 0.0))
            throw ConfigError("power_levels must all be > 0");
        if (i > 0 && !(power_levels[i] > power_levels[i - 1]))
            throw ConfigError("power_levels must be strictly increasing");
    }
    if (!(circuit_power > 0.0))
        throw ConfigError("circuit_power must be > 0");
}

NetworkConfig parse_config(std::string_view text)
{
    NetworkConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_tag(line_no) + "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError(line_tag(line_no) + "unknown key '" + std::string(key) + "'");
        if (!seen.emplace(key).second)
            throw ConfigError(line_tag(line_no) + "duplicate key '" + std::string(key) + "'");
        if (value.empty())
            throw ConfigError(line_tag(line_no) + "missing value for '" + std::string(key) + "'");
        it->second(config, value, line_no);
    }
    config.validate();
    return config;
}

NetworkConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string to_config_text(const NetworkConfig &c)
{
    std::ostringstream out;
    out << "macro_radius = " << fmt_double(c.macro_radius) << '\n'
        << "small_radius = " << fmt_double(c.small_radius) << '\n'
        << "n_small_cells = " << c.n_small_cells << '\n'
        << "n_subcarriers = " << c.n_subcarriers << '\n'
        << "n_users_per_cell = " << c.n_users_per_cell << '\n'
        << "n_antennas_mbs = " << c.n_antennas_mbs << '\n'
        << "n_antennas_sbs = " << c.n_antennas_sbs << '\n'
        << "path_loss_exponent = " << fmt_double(c.path_loss_exponent) << '\n'
        << "shadowing_std_db = " << fmt_double(c.shadowing_std_db) << '\n'
        << "antenna_constant = " << fmt_double(c.antenna_constant) << '\n'
        << "noise_psd_dbm_per_hz = " << fmt_double(c.noise_psd_dbm_per_hz) << '\n'
        << "subcarrier_bandwidth_hz = " << fmt_double(c.subcarrier_bandwidth_hz) << '\n'
        << "power_levels = ";
    for (std::size_t i = 0; i < c.power_levels.size(); ++i)
        out << (i ? ", " : "") << fmt_double(c.power_levels[i]);
    out << '\n'
        << "circuit_power = " << fmt_double(c.circuit_power) << '\n'
        << "rng_seed = " << c.rng_seed << '\n';
    return out.str();
}

bool operator==(const NetworkConfig &a, const NetworkConfig &b)
{
    return a.macro_radius == b.macro_radius && a.small_radius == b.small_radius &&
           a.n_small_cells == b.n_small_cells && a.n_subcarriers == b.n_subcarriers &&
           a.n_users_per_cell == b.n_users_per_cell && a.n_antennas_mbs == b.n_antennas_mbs &&
           a.n_antennas_sbs == b.n_antennas_sbs && a.path_loss_exponent == b.path_loss_exponent &&
           a.shadowing_std_db == b.shadowing_std_db && a.antenna_constant == b.antenna_constant &&
           a.noise_psd_dbm_per_hz == b.noise_psd_dbm_per_hz &&
           a.subcarrier_bandwidth_hz == b.subcarrier_bandwidth_hz && a.power_levels == b.power_levels &&
           a.circuit_power == b.circuit_power && a.rng_seed == b.rng_seed;
}

} // namespace eepc
