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

#include "pasec/experiment/sweep.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace pasec::experiment
{

struct PointVerdict
{
    std::optional<double> series_value;
    double axis_value;
    Method analytic_method;
    double analytic;
    double mc;
    double std_error;
    double threshold; ///< 3 * max(std_error, 1/n)
    bool pass;
};

/// Authoritative SPSC versus the case-limit closed form at one point.
struct SpscDeviation
{
    std::optional<double> series_value;
    double axis_value;
    double general;
    double case_form;
    double deviation;
};

struct ValidationReport
{
    Metric metric;
    std::optional<Parameter> series;
    std::size_t n_samples;
    std::uint64_t seed;
    std::vector<PointVerdict> points;
    std::vector<SpscDeviation> spsc_deviations;
    bool passed = true;
};

struct ValidateOptions
{
    /// Test hook: added to the analytic value of point `corrupt_index`.
    std::optional<std::size_t> corrupt_index;
    double corrupt_offset = 0.0;
    SweepOptions sweep;
};

/// Compares every analytic method of the spec against Monte-Carlo with n
/// samples at every sweep point. Analytic methods default to analytic-y when
/// the spec lists none; mc is always run.
ValidationReport validate(const SweepSpec &spec, std::size_t n, std::uint64_t seed, const ValidateOptions &opts = {});

void print_report(const ValidationReport &report, std::ostream &out);

} // namespace pasec::experiment
