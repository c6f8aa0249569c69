// SPDX-License-Identifier: Apache-2.0
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

#include "pasec/experiment/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace pasec::experiment
{
namespace
{

struct ParameterInfo
{
    Parameter parameter;
    std::string_view key;
    std::string_view unit;
};

constexpr std::array<ParameterInfo, 12> parameter_table{{
    {Parameter::main_snr, "main_snr", "dB"},
    {Parameter::eve_snr, "eve_snr", "dB"},
    {Parameter::height, "height", "m"},
    {Parameter::main_rect_x, "main_rect_x", "m"},
    {Parameter::main_rect_y, "main_rect_y", "m"},
    {Parameter::eve_rect_x, "eve_rect_x", "m"},
    {Parameter::eve_rect_y, "eve_rect_y", "m"},
    {Parameter::rate, "rate", "bps/Hz"},
    {Parameter::carrier_frequency, "carrier_frequency", "GHz"},
    {Parameter::noise_power, "noise_power", "dBm"},
    {Parameter::transmit_power, "transmit_power", "dBm"},
    {Parameter::refractive_index, "refractive_index", ""},
}};

// Parameters that must be bound (or swept) in every config.
constexpr std::array<Parameter, 7> required_parameters{Parameter::main_snr,    Parameter::eve_snr,
                                                       Parameter::height,      Parameter::main_rect_x,
                                                       Parameter::main_rect_y, Parameter::eve_rect_x,
                                                       Parameter::eve_rect_y};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

class LineContext
{
  public:
    LineContext(std::size_t line, std::string key) : line_(line), key_(std::move(key)) {}

    [[noreturn]] void fail(const std::string &message) const { throw ConfigError(line_, key_, message); }

    double number(std::string_view token) const
    {
        double v = 0.0;
        const auto *first = token.data();
        const auto *last = token.data() + token.size();
        if (!token.empty() && *first == '+')
            ++first;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            fail("expected a number, got '" + std::string(token) + "'");
        return v;
    }

    // Splits an optional trailing unit from a value and checks it.
    std::string_view strip_unit(std::string_view value, std::string_view expected) const
    {
        const auto pos = value.find_last_of(" \t");
        if (pos == std::string_view::npos)
        {
            if (!value.empty() && std::isalpha(static_cast<unsigned char>(value.back())))
            {
                // Unit glued to the number, e.g. "80dB".
                std::size_t i = value.size();
                while (i > 0 && (std::isalpha(static_cast<unsigned char>(value[i - 1])) || value[i - 1] == '/'))
                    --i;
                check_unit(value.substr(i), expected);
                return trim(value.substr(0, i));
            }
            return value;
        }
        const auto tail = trim(value.substr(pos + 1));
        if (!tail.empty() && std::isalpha(static_cast<unsigned char>(tail.front())))
        {
            check_unit(tail, expected);
            return trim(value.substr(0, pos));
        }
        return value;
    }

    std::vector<double> list(std::string_view value) const
    {
        std::vector<double> out;
        if (value.empty())
            return out;
        if (value.find(':') != std::string_view::npos)
        {
            const auto parts = split(value, ':');
            if (parts.size() != 3)
                fail("range must be start:stop:count");
            const double start = number(parts[0]);
            const double stop = number(parts[1]);
            const double count = number(parts[2]);
            if (count < 1 || count != std::floor(count) || count > 100000)
                fail("range count must be a positive integer");
            const auto n = static_cast<std::size_t>(count);
            if (n == 1)
                return {start};
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(i + 1 == n ? stop
                                         : start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1));
            return out;
        }
        for (auto token : split(value, ','))
        {
            if (token.empty())
                fail("empty list element");
            out.push_back(number(token));
        }
        return out;
    }

  private:
    void check_unit(std::string_view unit, std::string_view expected) const
    {
        if (unit != expected)
            fail("unit '" + std::string(unit) + "' does not match expected '" +
                 (expected.empty() ? std::string("dimensionless") : std::string(expected)) + "'");
    }

    std::size_t line_;
    std::string key_;
};

void check_strictly_increasing(const std::vector<double> &v, const LineContext &ctx)
{
    if (v.empty())
        ctx.fail("list must not be empty");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            ctx.fail("values must be strictly increasing");
}

} // namespace

ConfigError::ConfigError(std::size_t line, std::string key, const std::string &message)
    : std::runtime_error(line == 0 ? "config key '" + key + "': " + message
                                   : "config line " + std::to_string(line) + ", key '" + key + "': " + message),
      line_(line), key_(std::move(key))
{
}

std::string_view to_string(Metric m)
{
    switch (m)
    {
    case Metric::asc:
        return "asc";
    case Metric::spsc:
        return "spsc";
    case Metric::sop:
        return "sop";
    }
    return "?";
}

std::string_view to_string(Method m)
{
    switch (m)
    {
    case Method::analytic_y:
        return "analytic-y";
    case Method::analytic_gamma:
        return "analytic-gamma";
    case Method::mc:
        return "mc";
    }
    return "?";
}

std::string_view to_string(Parameter p)
{
    for (const auto &info : parameter_table)
        if (info.parameter == p)
            return info.key;
    return "?";
}

std::string_view unit_of(Parameter p)
{
    for (const auto &info : parameter_table)
        if (info.parameter == p)
            return info.unit;
    return "";
}

std::optional<Metric> parse_metric(std::string_view s)
{
    for (auto m : {Metric::asc, Metric::spsc, Metric::sop})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::optional<Method> parse_method(std::string_view s)
{
    for (auto m : {Method::analytic_y, Method::analytic_gamma, Method::mc})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

std::optional<Parameter> parse_parameter(std::string_view s)
{
    for (const auto &info : parameter_table)
        if (info.key == s)
            return info.parameter;
    return std::nullopt;
}

void Bindings::set(Parameter p, double value)
{
    auto &sc = scenario;
    switch (p)
    {
    case Parameter::main_snr:
        sc.main.avg_snr_db = value;
        break;
    case Parameter::eve_snr:
        sc.eve.avg_snr_db = value;
        break;
    case Parameter::height:
        sc.config.antenna_height_m = value;
        break;
    case Parameter::main_rect_x:
        sc.main.rect_x_m = value;
        break;
    case Parameter::main_rect_y:
        sc.main.rect_y_m = value;
        break;
    case Parameter::eve_rect_x:
        sc.eve.rect_x_m = value;
        break;
    case Parameter::eve_rect_y:
        sc.eve.rect_y_m = value;
        break;
    case Parameter::rate:
        rate.rate_bps_hz = value;
        break;
    case Parameter::carrier_frequency:
        sc.config.carrier_frequency_hz = value * 1e9;
        break;
    case Parameter::noise_power:
        sc.config.noise_power_dbm = value;
        break;
    case Parameter::transmit_power:
        sc.config.transmit_power_dbm = value;
        break;
    case Parameter::refractive_index:
        sc.config.effective_refractive_index = value;
        break;
    }
}

double Bindings::get(Parameter p) const
{
    const auto &sc = scenario;
    switch (p)
    {
    case Parameter::main_snr:
        return sc.main.avg_snr_db;
    case Parameter::eve_snr:
        return sc.eve.avg_snr_db;
    case Parameter::height:
        return sc.config.antenna_height_m;
    case Parameter::main_rect_x:
        return sc.main.rect_x_m;
    case Parameter::main_rect_y:
        return sc.main.rect_y_m;
    case Parameter::eve_rect_x:
        return sc.eve.rect_x_m;
    case Parameter::eve_rect_y:
        return sc.eve.rect_y_m;
    case Parameter::rate:
        return rate.rate_bps_hz;
    case Parameter::carrier_frequency:
        return sc.config.carrier_frequency_hz * 1e-9;
    case Parameter::noise_power:
        return sc.config.noise_power_dbm;
    case Parameter::transmit_power:
        return sc.config.transmit_power_dbm;
    case Parameter::refractive_index:
        return sc.config.effective_refractive_index;
    }
    return 0.0;
}

Bindings SweepSpec::point_bindings() const
{
    Bindings b = fixed;
    auto is_bound = [&](Parameter p) {
        return std::find(explicit_bindings.begin(), explicit_bindings.end(), p) != explicit_bindings.end();
    };
    if (series && !series_values.empty() && !is_bound(*series))
        b.set(*series, series_values.front());
    if (!axis_values.empty() && !is_bound(axis))
        b.set(axis, axis_values.front());
    return b;
}

void SweepSpec::validate() const
{
    if (axis_values.empty())
        throw ConfigError(0, "axis_values", "list must not be empty");
    for (std::size_t i = 1; i < axis_values.size(); ++i)
        if (!(axis_values[i] > axis_values[i - 1]))
            throw ConfigError(0, "axis_values", "values must be strictly increasing");
    if (series)
    {
        if (*series == axis)
            throw ConfigError(0, "series", "series parameter must differ from the axis");
        if (series_values.empty())
            throw ConfigError(0, "series_values", "list must not be empty");
    }
    if (methods.empty())
        throw ConfigError(0, "methods", "at least one method is required");
    if (mc_samples < 1000)
        throw ConfigError(0, "mc_samples", "must be at least 1000");
    if (!(tol > 0.0))
        throw ConfigError(0, "tol", "must be positive");

    // Every point of the sweep must form a valid scenario.
    auto check_point = [&](Parameter p, double v) {
        Bindings b = fixed;
        b.set(p, v);
        try
        {
            b.scenario.validate();
            (void)b.rate.psi();
        }
        catch (const std::domain_error &e)
        {
            throw ConfigError(0, std::string(to_string(p)), e.what());
        }
    };
    for (double v : axis_values)
        check_point(axis, v);
    if (series)
        for (double v : series_values)
            check_point(*series, v);
}

SweepSpec parse_config(std::string_view text)
{
    SweepSpec spec;
    std::set<std::string> seen;
    std::set<Parameter> bound;
    std::map<std::string, std::size_t> line_of;
    std::map<std::string, std::string> pending_lists;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, std::string(line), "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const LineContext ctx(line_no, key);
        if (key.empty())
            ctx.fail("missing key");
        if (!seen.insert(key).second)
            ctx.fail("duplicate key");
        line_of[key] = line_no;

        if (key == "title")
        {
            spec.title = std::string(value);
        }
        else if (key == "metric")
        {
            const auto m = parse_metric(value);
            if (!m)
                ctx.fail("metric must be one of asc, spsc, sop");
            spec.metric = *m;
        }
        else if (key == "axis" || key == "series")
        {
            const auto p = parse_parameter(value);
            if (!p)
                ctx.fail("unknown parameter '" + std::string(value) + "'");
            if (key == "axis")
                spec.axis = *p;
            else
                spec.series = *p;
        }
        else if (key == "axis_values" || key == "series_values")
        {
            // Parsed after the loop, once the unit of the swept parameter is known.
            pending_lists[key] = std::string(value);
        }
        else if (key == "methods")
        {
            spec.methods.clear();
            for (auto token : split(value, ','))
            {
                const auto m = parse_method(token);
                if (!m)
                    ctx.fail("unknown method '" + std::string(token) + "'");
                if (std::find(spec.methods.begin(), spec.methods.end(), *m) == spec.methods.end())
                    spec.methods.push_back(*m);
            }
        }
        else if (key == "psi_base")
        {
            if (value == "e")
                spec.fixed.rate.base = ThresholdBase::natural;
            else if (value == "2")
                spec.fixed.rate.base = ThresholdBase::binary;
            else
                ctx.fail("psi_base must be 'e' or '2'");
        }
        else if (key == "mc_samples")
        {
            const double n = ctx.number(value);
            if (n < 1000 || n != std::floor(n) || n > 1e10)
                ctx.fail("mc_samples must be an integer >= 1000");
            spec.mc_samples = static_cast<std::size_t>(n);
        }
        else if (key == "seed")
        {
            std::uint64_t seed = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
            if (ec != std::errc() || ptr != value.data() + value.size())
                ctx.fail("seed must be an unsigned 64-bit integer");
            spec.seed = seed;
        }
        else if (key == "tol")
        {
            const double t = ctx.number(value);
            if (!(t > 0.0))
                ctx.fail("tol must be positive");
            spec.tol = t;
        }
        else if (const auto p = parse_parameter(key))
        {
            const double v = ctx.number(ctx.strip_unit(value, unit_of(*p)));
            spec.fixed.set(*p, v);
            bound.insert(*p);
            spec.explicit_bindings.push_back(*p);
            try
            {
                Bindings probe = spec.fixed;
                if (*p == Parameter::rate)
                    (void)probe.rate.psi();
                else
                    probe.scenario.validate();
            }
            catch (const std::domain_error &e)
            {
                ctx.fail(e.what());
            }
        }
        else
        {
            ctx.fail("unknown key");
        }
    }

    auto missing = [&](const std::string &key) { throw ConfigError(line_no, key, "missing required key"); };
    for (const char *key : {"metric", "axis", "axis_values"})
        if (!seen.count(key))
            missing(key);
    if (seen.count("series") != seen.count("series_values"))
        missing(seen.count("series") ? "series_values" : "series");

    auto parse_list = [&](const std::string &key, Parameter p, std::vector<double> &dest) {
        const LineContext ctx(line_of[key], key);
        dest = ctx.list(ctx.strip_unit(pending_lists[key], unit_of(p)));
        check_strictly_increasing(dest, ctx);
    };
    parse_list("axis_values", spec.axis, spec.axis_values);
    if (spec.series)
        parse_list("series_values", *spec.series, spec.series_values);

    std::set<Parameter> swept{spec.axis};
    if (spec.series)
        swept.insert(*spec.series);
    for (Parameter p : required_parameters)
        if (!bound.count(p) && !swept.count(p))
            missing(std::string(to_string(p)));
    if (spec.metric == Metric::sop && !bound.count(Parameter::rate) && !swept.count(Parameter::rate))
        missing("rate");

    try
    {
        spec.validate();
    }
    catch (const ConfigError &e)
    {
        const auto it = line_of.find(e.key());
        throw ConfigError(it == line_of.end() ? 0 : it->second, e.key(),
                          std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    return spec;
}

SweepSpec load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(0, "--config", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace pasec::experiment
