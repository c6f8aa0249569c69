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

#include "pasec/experiment/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace pasec::experiment
{

bool SweepResult::all_ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.ok; });
}

std::string SweepResult::label(const SweepRow &row) const
{
    std::string out(to_string(row.method));
    if (series && row.series_value)
    {
        std::ostringstream s;
        s.precision(10);
        s << '|' << to_string(*series) << '=' << *row.series_value;
        out += s.str();
    }
    return out;
}

EvaluatedPoint evaluate(Metric metric, Method method, const Bindings &b, double tol, std::size_t mc_samples,
                        std::uint64_t seed, const McOptions &mc_options)
{
    const auto &s = b.scenario;
    if (method == Method::mc)
    {
        McEstimate est;
        switch (metric)
        {
        case Metric::asc:
            est = estimate_asc(s, mc_samples, seed, mc_options);
            break;
        case Metric::spsc:
            est = estimate_spsc(s, mc_samples, seed, mc_options);
            break;
        case Metric::sop:
            est = estimate_sop(s, b.rate, mc_samples, seed, mc_options);
            break;
        }
        return {est.mean, est.std_error};
    }
    const Route route = method == Method::analytic_y ? Route::y_substitution : Route::gamma_domain;
    MetricValue v;
    switch (metric)
    {
    case Metric::asc:
        v = average_sc(s, tol, route);
        break;
    case Metric::spsc:
        v = spsc(s, tol, route);
        break;
    case Metric::sop:
        v = sop(s, b.rate, tol, route);
        break;
    }
    return {v.value, v.abs_error_estimate};
}

SweepResult run_sweep(const SweepSpec &spec, const SweepOptions &opts)
{
    spec.validate();
    SweepResult result{spec.metric, spec.axis, spec.series, spec.title, {}};

    std::vector<std::optional<double>> series_points;
    if (spec.series)
        series_points.assign(spec.series_values.begin(), spec.series_values.end());
    else
        series_points.push_back(std::nullopt);

    for (const auto &sv : series_points)
        for (double av : spec.axis_values)
            for (Method m : spec.methods)
                result.rows.push_back({sv, av, m, 0.0, 0.0, true, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        // Each row runs its Monte-Carlo serially; concurrency comes from the rows.
        McOptions mc;
        mc.threads = 1;
        for (std::size_t i = next++; i < result.rows.size(); i = next++)
        {
            auto &row = result.rows[i];
            Bindings b = spec.fixed;
            if (row.series_value)
                b.set(*spec.series, *row.series_value);
            b.set(spec.axis, row.axis_value);
            try
            {
                const auto p = evaluate(spec.metric, row.method, b, spec.tol, spec.mc_samples, spec.seed, mc);
                row.value = p.value;
                row.error = p.error;
            }
            catch (const QuadratureError &e)
            {
                row.ok = false;
                row.value = std::numeric_limits<double>::quiet_NaN();
                row.error = e.partial().abs_error_estimate;
                row.note = e.what();
            }
            catch (const std::exception &e)
            {
                row.ok = false;
                row.value = std::numeric_limits<double>::quiet_NaN();
                row.error = std::numeric_limits<double>::quiet_NaN();
                row.note = e.what();
            }
        }
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, result.rows.size()));
    if (threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    return result;
}

} // namespace pasec::experiment
