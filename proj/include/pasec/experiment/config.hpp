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

#pragma once

#include "pasec/secrecy_metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pasec::experiment
{

enum class Metric
{
    asc,
    spsc,
    sop
};

enum class Method
{
    analytic_y,
    analytic_gamma,
    mc
};

/// Scenario quantities that can be bound in a config or swept.
enum class Parameter
{
    main_snr,
    eve_snr,
    height,
    main_rect_x,
    main_rect_y,
    eve_rect_x,
    eve_rect_y,
    rate,
    carrier_frequency,
    noise_power,
    transmit_power,
    refractive_index
};

std::string_view to_string(Metric m);
std::string_view to_string(Method m);
std::string_view to_string(Parameter p);
std::optional<Metric> parse_metric(std::string_view s);
std::optional<Method> parse_method(std::string_view s);
std::optional<Parameter> parse_parameter(std::string_view s);

/// Unit string a parameter's value is expressed in ("dB", "m", ...), or empty.
std::string_view unit_of(Parameter p);

/// A complete point in parameter space.
struct Bindings
{
    WiretapScenario scenario;
    SecrecyRate rate;

    void set(Parameter p, double value);
    double get(Parameter p) const;
};

struct SweepSpec
{
    std::string title;
    Metric metric = Metric::asc;
    Parameter axis = Parameter::main_snr;
    std::vector<double> axis_values;
    std::optional<Parameter> series;
    std::vector<double> series_values;
    Bindings fixed;
    std::vector<Method> methods{Method::analytic_y, Method::mc};
    std::size_t mc_samples = 100'000;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    /// Parameters given an explicit value in the config file.
    std::vector<Parameter> explicit_bindings;

    /// Scenario for single-point evaluation: the fixed bindings, with the
    /// first axis/series value filling in when that parameter was not bound.
    Bindings point_bindings() const;

    /// Throws ConfigError (line 0) on inconsistent fields.
    void validate() const;
};

class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::size_t line, std::string key, const std::string &message);
    std::size_t line() const { return line_; }
    const std::string &key() const { return key_; }

  private:
    std::size_t line_;
    std::string key_;
};

/// Parses `key = value` lines (`#` starts a comment). Values may carry a
/// trailing unit which must match the key's unit. Lists are comma separated
/// or `start:stop:count` for evenly spaced values.
SweepSpec parse_config(std::string_view text);
SweepSpec load_config(const std::string &path);

} // namespace pasec::experiment
