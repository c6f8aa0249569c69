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

#include "pasec/experiment/config.hpp"
#include "pasec/monte_carlo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pasec::experiment
{

struct SweepRow
{
    std::optional<double> series_value;
    double axis_value = 0.0;
    Method method = Method::analytic_y;
    double value = 0.0;
    /// Quadrature error estimate (analytic) or standard error (mc).
    double error = 0.0;
    bool ok = true;
    std::string note;
};

struct SweepResult
{
    Metric metric = Metric::asc;
    Parameter axis = Parameter::main_snr;
    std::optional<Parameter> series;
    std::string title;
    /// Ordered by (series value, axis value, method order in the spec).
    std::vector<SweepRow> rows;

    bool all_ok() const;
    /// CSV method label, e.g. "analytic-y" or "mc|height=2".
    std::string label(const SweepRow &row) const;
};

struct EvaluatedPoint
{
    double value;
    double error;
};

/// One metric at one scenario by one method. Analytic non-convergence throws
/// QuadratureError; mc uses `mc_samples` and `seed`.
EvaluatedPoint evaluate(Metric metric, Method method, const Bindings &b, double tol, std::size_t mc_samples,
                        std::uint64_t seed, const McOptions &mc_options = {});

struct SweepOptions
{
    /// Concurrent sweep points; 0 picks hardware_concurrency().
    unsigned threads = 0;
};

SweepResult run_sweep(const SweepSpec &spec, const SweepOptions &opts = {});

} // namespace pasec::experiment
