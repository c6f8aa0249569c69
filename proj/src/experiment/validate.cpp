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

#include "pasec/experiment/validate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <tuple>

namespace pasec::experiment
{

ValidationReport validate(const SweepSpec &spec, std::size_t n, std::uint64_t seed, const ValidateOptions &opts)
{
    SweepSpec run = spec;
    run.mc_samples = n;
    run.seed = seed;
    run.methods.erase(std::remove(run.methods.begin(), run.methods.end(), Method::mc), run.methods.end());
    if (run.methods.empty())
        run.methods.push_back(Method::analytic_y);
    run.methods.push_back(Method::mc);

    const auto sweep = run_sweep(run, opts.sweep);
    ValidationReport report{spec.metric, spec.series, n, seed, {}, {}, sweep.all_ok()};

    using Key = std::tuple<double, double>;
    auto key_of = [](const SweepRow &r) { return Key{r.series_value.value_or(0.0), r.axis_value}; };
    std::map<Key, const SweepRow *> mc_rows;
    for (const auto &r : sweep.rows)
        if (r.method == Method::mc)
            mc_rows[key_of(r)] = &r;

    const double floor = 1.0 / static_cast<double>(n);
    for (const auto &r : sweep.rows)
    {
        if (r.method == Method::mc)
            continue;
        const auto *m = mc_rows.at(key_of(r));
        double analytic = r.value;
        if (opts.corrupt_index && *opts.corrupt_index == report.points.size())
            analytic += opts.corrupt_offset;
        const double threshold = 3.0 * std::max(m->error, floor);
        const bool pass = r.ok && m->ok && std::abs(analytic - m->value) <= threshold;
        report.points.push_back({r.series_value, r.axis_value, r.method, analytic, m->value, m->error, threshold, pass});
        report.passed = report.passed && pass;
    }

    if (spec.metric == Metric::spsc)
    {
        for (const auto &r : sweep.rows)
        {
            if (r.method != Method::mc)
                continue;
            Bindings b = spec.fixed;
            if (r.series_value)
                b.set(*spec.series, *r.series_value);
            b.set(spec.axis, r.axis_value);
            try
            {
                const auto rep = spsc_report(b.scenario, spec.tol);
                report.spsc_deviations.push_back(
                    {r.series_value, r.axis_value, rep.general.value, rep.case_form.value, rep.deviation});
            }
            catch (const QuadratureError &)
            {
                report.spsc_deviations.push_back({r.series_value, r.axis_value, NAN, NAN, NAN});
            }
        }
    }
    return report;
}

void print_report(const ValidationReport &report, std::ostream &out)
{
    const auto flags = out.flags();
    const auto precision = out.precision();
    out.precision(8);
    out << "validate " << to_string(report.metric) << ": n=" << report.n_samples << " seed=" << report.seed << '\n';
    for (const auto &p : report.points)
    {
        out << (p.pass ? "PASS " : "FAIL ");
        if (report.series && p.series_value)
            out << to_string(*report.series) << '=' << *p.series_value << ' ';
        out << "axis=" << p.axis_value << ' ' << to_string(p.analytic_method) << '=' << p.analytic
            << " mc=" << p.mc << " se=" << p.std_error << " |diff|=" << std::abs(p.analytic - p.mc)
            << " limit=" << p.threshold << '\n';
    }
    if (!report.spsc_deviations.empty())
    {
        out << "spsc general route vs case-limit closed form (reported, not asserted):\n";
        for (const auto &d : report.spsc_deviations)
        {
            out << "  ";
            if (report.series && d.series_value)
                out << to_string(*report.series) << '=' << *d.series_value << ' ';
            out << "axis=" << d.axis_value << " general=" << d.general << " case_form=" << d.case_form
                << " deviation=" << d.deviation << '\n';
        }
    }
    out << (report.passed ? "overall: PASS" : "overall: FAIL") << '\n';
    out.flags(flags);
    out.precision(precision);
}

} // namespace pasec::experiment
