// SPDX-License-Identifier: Apache-2.0
//
// pchbf: partially-connected hybrid beamforming link-level simulator
// Copyright (C) 2026 The pchbf Authors
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
#include "pchbf/config.hpp"

#include "format_util.hpp"
#include "pchbf/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace pchbf
{

using nlohmann::json;

namespace
{

constexpr double deg = pi / 180.0;

[[noreturn]] void violation(std::string_view field, const std::string &rule)
{
    throw Error(ErrorKind::invariant_violation, fmt::format("{}: {}", field, rule));
}

struct Field
{
    std::string name;
    std::function<void(const json &, ScenarioConfig &)> read;
    std::function<json(const ScenarioConfig &)> write;
};

template <class T> Field field(const char *name, T ScenarioConfig::*member)
{
    return Field{name,
                 [name, member](const json &value, ScenarioConfig &config) {
                     try
                     {
                         config.*member = value.get<T>();
                     }
                     catch (const json::exception &e)
                     {
                         violation(name, fmt::format("wrong value type ({})", e.what()));
                     }
                 },
                 [member](const ScenarioConfig &config) -> json {
                     if constexpr (std::is_same_v<T, double>)
                         return detail::round_sig12(config.*member);
                     else if constexpr (std::is_same_v<T, std::vector<double>>)
                     {
                         json out = json::array();
                         for (double v : config.*member)
                             out.push_back(detail::round_sig12(v));
                         return out;
                     }
                     else
                         return config.*member;
                 }};
}

const std::vector<Field> &fields()
{
    static const std::vector<Field> all{
        field("preset", &ScenarioConfig::preset),
        field("layout", &ScenarioConfig::layout),
        field("n_rx", &ScenarioConfig::n_rx),
        field("n_subarrays", &ScenarioConfig::n_subarrays),
        field("rows", &ScenarioConfig::rows),
        field("cols", &ScenarioConfig::cols),
        field("spacing_h", &ScenarioConfig::spacing_h),
        field("spacing_v", &ScenarioConfig::spacing_v),
        field("n_users", &ScenarioConfig::n_users),
        field("group_centers_deg", &ScenarioConfig::group_centers_deg),
        field("group_spread_deg", &ScenarioConfig::group_spread_deg),
        field("elevation_deg", &ScenarioConfig::elevation_deg),
        field("n_scatter_paths", &ScenarioConfig::n_scatter_paths),
        field("rician_k_db", &ScenarioConfig::rician_k_db),
        field("angular_spread_deg", &ScenarioConfig::angular_spread_deg),
        field("k", &ScenarioConfig::k),
        field("n_beam", &ScenarioConfig::n_beam),
        field("algorithms", &ScenarioConfig::algorithms),
        field("mode", &ScenarioConfig::mode),
        field("selector", &ScenarioConfig::selector),
        field("fa_scaling", &ScenarioConfig::fa_scaling),
        field("snr_db", &ScenarioConfig::snr_db),
        field("n_trials", &ScenarioConfig::n_trials),
        field("noise_seeds", &ScenarioConfig::noise_seeds),
        field("symbols_per_trial", &ScenarioConfig::symbols_per_trial),
        field("master_seed", &ScenarioConfig::master_seed),
        field("workers", &ScenarioConfig::workers),
        field("monte_carlo", &ScenarioConfig::monte_carlo),
        field("export_algorithm", &ScenarioConfig::export_algorithm),
        field("output_dir", &ScenarioConfig::output_dir),
    };
    return all;
}

bool in_half_space_deg(double a)
{
    return std::isfinite(a) && a >= -90.0 && a <= 90.0;
}

FaScaling fa_scaling_from_string(std::string_view name)
{
    if (name == "normalized")
        return FaScaling::normalized;
    if (name == "unit-modulus")
        return FaScaling::unit_modulus;
    throw Error(ErrorKind::invalid_argument, fmt::format("unknown fa_scaling '{}'", name));
}

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return fmt::format("line {}, column {}", line, col);
}

} // namespace

ScenarioConfig desk_preset()
{
    return ScenarioConfig{};
}

ScenarioConfig paper_preset()
{
    ScenarioConfig c;
    c.preset = "paper";
    c.layout = "upa";
    c.n_rx = 1024;
    c.rows = 32;
    c.cols = 32;
    c.n_subarrays = 64;
    c.spacing_h = 0.5;
    c.spacing_v = 0.9;
    c.n_users = 240;
    c.group_centers_deg = {-52.5, -37.5, -22.5, -7.5, 7.5, 22.5, 37.5, 52.5};
    c.group_spread_deg = 4.0;
    c.elevation_deg = -10.0;
    c.k = 8;
    c.n_beam = 32;
    c.n_trials = 140;
    c.noise_seeds = 16;
    c.monte_carlo = false;
    return c;
}

ScenarioConfig preset_by_name(std::string_view name)
{
    if (name == "desk")
        return desk_preset();
    if (name == "paper")
        return paper_preset();
    violation("preset", fmt::format("unknown preset '{}' (expected desk or paper)", name));
}

void validate_config(const ScenarioConfig &c)
{
    if (c.layout != "ula" && c.layout != "upa")
        violation("layout", "must be \"ula\" or \"upa\"");
    if (c.n_rx < 1)
        violation("n_rx", "must be positive");
    if (c.n_subarrays < 1)
        violation("n_subarrays", "must be positive");
    if (c.n_rx % c.n_subarrays != 0)
        violation("n_subarrays", fmt::format("L not integer (n_rx = {}, n_subarrays = {})", c.n_rx, c.n_subarrays));
    if (c.layout == "upa" && (c.rows < 1 || c.cols < 1 || c.rows * c.cols != c.n_rx))
        violation("rows", fmt::format("rows * cols = {} * {} must equal n_rx = {}", c.rows, c.cols, c.n_rx));
    if (!(c.spacing_h > 0.0) || !(c.spacing_v > 0.0))
        violation("spacing_h", "element spacing must be positive");

    if (c.n_users < 1)
        violation("n_users", "must be positive");
    if (c.group_centers_deg.empty())
        violation("group_centers_deg", "needs at least one angular group");
    for (double a : c.group_centers_deg)
        if (!in_half_space_deg(a))
            violation("group_centers_deg", fmt::format("{} deg is outside [-90, 90]", a));
    if (!(c.group_spread_deg >= 0.0))
        violation("group_spread_deg", "must be non-negative");
    if (!in_half_space_deg(c.elevation_deg))
        violation("elevation_deg", "must lie in [-90, 90]");
    if (c.n_scatter_paths < 0)
        violation("n_scatter_paths", "must be non-negative");
    if (std::isnan(c.rician_k_db))
        violation("rician_k_db", "must be a number");
    if (!(c.angular_spread_deg >= 0.0))
        violation("angular_spread_deg", "must be non-negative");

    if (c.k < 1 || c.k > c.n_users)
        violation("k", fmt::format("k = {} must lie in [1, n_users = {}]", c.k, c.n_users));
    if (c.k > c.n_rx)
        violation("k", "k must not exceed n_rx");
    if (c.n_beam < 1 || c.n_beam > c.n_subarrays)
        violation("n_beam", fmt::format("n_beam = {} must lie in [1, n_subarrays = {}]", c.n_beam, c.n_subarrays));

    if (c.algorithms.empty())
        violation("algorithms", "needs at least one algorithm");
    std::set<std::string> seen;
    for (const auto &a : c.algorithms)
    {
        try
        {
            algorithm_from_string(a);
        }
        catch (const Error &)
        {
            violation("algorithms", fmt::format("unknown algorithm '{}'", a));
        }
        if (!seen.insert(a).second)
            violation("algorithms", fmt::format("'{}' listed twice", a));
    }
    SectorMode mode{};
    try
    {
        mode = sector_mode_from_string(c.mode);
    }
    catch (const Error &)
    {
        violation("mode", "must be \"orthogonal\" or \"split\"");
    }
    if (mode == SectorMode::subarray_split && c.k > c.n_subarrays)
        violation("k", "split mode needs k <= n_subarrays");
    try
    {
        selector_kind_from_string(c.selector);
        fa_scaling_from_string(c.fa_scaling);
    }
    catch (const Error &e)
    {
        violation("selector", e.detail());
    }

    if (c.snr_db.empty())
        violation("snr_db", "grid must be non-empty");
    for (double s : c.snr_db)
        if (!std::isfinite(s))
            violation("snr_db", "values must be finite");
    if (c.n_trials < 1)
        violation("n_trials", "must be positive");
    if (c.noise_seeds < 1)
        violation("noise_seeds", "must be positive");
    if (c.symbols_per_trial < 1)
        violation("symbols_per_trial", "must be positive");
    if (c.workers < 0)
        violation("workers", "must be non-negative");

    Algorithm exported{};
    try
    {
        exported = algorithm_from_string(c.export_algorithm);
    }
    catch (const Error &)
    {
        violation("export_algorithm", fmt::format("unknown algorithm '{}'", c.export_algorithm));
    }
    if (exported == Algorithm::fully_digital)
        violation("export_algorithm", "fully-digital has no analog sectors");
    if (c.output_dir.empty())
        violation("output_dir", "must be non-empty");
}

ScenarioConfig parse_config_text(std::string_view text, const ScenarioConfig &base)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end(), nullptr, true, true);
    }
    catch (const json::parse_error &e)
    {
        throw Error(ErrorKind::parse_error, fmt::format("{}: {}", line_column(text, e.byte), e.what()));
    }
    if (!doc.is_object())
        throw Error(ErrorKind::parse_error, "config must be a JSON object of key/value pairs");

    ScenarioConfig config = base;
    if (auto it = doc.find("preset"); it != doc.end())
    {
        if (!it->is_string())
            violation("preset", "must be a string");
        config = preset_by_name(it->get<std::string>());
    }
    for (auto it = doc.begin(); it != doc.end(); ++it)
    {
        const auto &all = fields();
        auto f = std::find_if(all.begin(), all.end(), [&](const Field &x) { return x.name == it.key(); });
        if (f == all.end())
            violation(it.key(), "unknown configuration key");
        if (it.value().is_object())
            violation(it.key(), "nested objects are not allowed");
        f->read(it.value(), config);
    }
    validate_config(config);
    return config;
}

ScenarioConfig load_config(const std::filesystem::path &path, const ScenarioConfig &base)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io_error, fmt::format("cannot open config '{}'", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    try
    {
        return parse_config_text(buf.str(), base);
    }
    catch (const Error &e)
    {
        throw Error(e.kind(), fmt::format("{}: {}", path.string(), e.detail()));
    }
}

std::string serialize_config(const ScenarioConfig &config)
{
    json doc = json::object();
    for (const auto &f : fields())
        doc[f.name] = f.write(config);
    return doc.dump(2) + "\n";
}

ArrayGeometry make_geometry(const ScenarioConfig &c)
{
    if (c.layout == "upa")
        return ArrayGeometry::planar(c.rows, c.cols, c.n_subarrays, c.spacing_h, c.spacing_v);
    return ArrayGeometry::linear(c.n_rx, c.n_subarrays, c.spacing_h);
}

Scenario make_scenario(const ScenarioConfig &c)
{
    validate_config(c);
    Scenario s;
    s.geometry = make_geometry(c);
    s.drop.n_users = c.n_users;
    s.drop.group_centers.clear();
    for (double a : c.group_centers_deg)
        s.drop.group_centers.push_back(a * deg);
    s.drop.group_spread = c.group_spread_deg * deg;
    s.drop.elevation = c.elevation_deg * deg;
    s.drop.n_scatter_paths = c.n_scatter_paths;
    s.drop.rician_k_db = c.rician_k_db;
    s.drop.angular_spread = c.angular_spread_deg * deg;
    s.k = c.k;
    s.n_beam = c.n_beam;
    s.symbols_per_trial = c.symbols_per_trial;
    s.options.mode = sector_mode_from_string(c.mode);
    s.options.selector = selector_kind_from_string(c.selector);
    s.options.fa_scaling = fa_scaling_from_string(c.fa_scaling);
    return s;
}

SweepSettings make_sweep_settings(const ScenarioConfig &c)
{
    validate_config(c);
    SweepSettings s;
    for (const auto &a : c.algorithms)
        s.algorithms.push_back(algorithm_from_string(a));
    s.snr_db = c.snr_db;
    s.n_drops = c.n_trials;
    s.noise_seeds = c.noise_seeds;
    s.master_seed = c.master_seed;
    s.workers = c.workers > 0 ? static_cast<unsigned>(c.workers) : std::max(1u, std::thread::hardware_concurrency());
    return s;
}

ComplexityReport complexity_report(const ScenarioConfig &c)
{
    validate_config(c);
    ComplexityReport r;
    r.adc_count = c.n_subarrays;
    r.digital_dim = c.n_beam;
    r.subarray_size = c.subarray_size();
    const double growth = static_cast<double>(c.n_rx) / static_cast<double>(reference_antennas);
    r.complexity_ratio = growth * growth;
    return r;
}

} // namespace pchbf
