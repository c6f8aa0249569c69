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

// Command-line front end: single-point metrics, sweeps, analytic-vs-MC
// validation and regeneration of the shipped figure configs.

#include "pasec/experiment/config.hpp"
#include "pasec/experiment/output.hpp"
#include "pasec/experiment/sweep.hpp"
#include "pasec/experiment/validate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#ifndef PASEC_DEFAULT_CONFIG_DIR
#define PASEC_DEFAULT_CONFIG_DIR "configs"
#endif

namespace
{

using namespace pasec;
using namespace pasec::experiment;

enum ExitCode
{
    exit_ok = 0,
    exit_config = 1,
    exit_numeric = 2,
    exit_validation = 3,
    exit_io = 4
};

struct Overrides
{
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> mc_samples;
    std::optional<double> tol;
    std::string psi_base;
    bool svg = false;
    std::string method;
    std::optional<std::size_t> perturb_index;
    double perturb_offset = 0.0;
};

SweepSpec load(const Overrides &o)
{
    auto spec = load_config(o.config);
    if (o.seed)
        spec.seed = *o.seed;
    if (o.mc_samples)
        spec.mc_samples = *o.mc_samples;
    if (o.tol)
        spec.tol = *o.tol;
    if (o.psi_base == "e")
        spec.fixed.rate.base = ThresholdBase::natural;
    else if (o.psi_base == "2")
        spec.fixed.rate.base = ThresholdBase::binary;
    spec.validate();
    return spec;
}

int run_single(Metric metric, const Overrides &o)
{
    auto spec = load(o);
    if (metric == Metric::sop && spec.metric != Metric::sop &&
        std::find(spec.explicit_bindings.begin(), spec.explicit_bindings.end(), Parameter::rate) ==
            spec.explicit_bindings.end())
        throw ConfigError(0, "rate", "missing required key");

    std::vector<Method> methods = spec.methods;
    if (!o.method.empty())
    {
        const auto m = parse_method(o.method);
        if (!m)
            throw ConfigError(0, "--method", "unknown method '" + o.method + "'");
        methods = {*m};
    }
    const auto b = spec.point_bindings();
    std::printf("%s", std::string(to_string(metric)).c_str());
    std::printf("\n");
    for (Method m : methods)
    {
        const auto p = evaluate(metric, m, b, spec.tol, spec.mc_samples, spec.seed);
        std::printf("%-15s %.12g  (%s %.3g)\n", std::string(to_string(m)).c_str(), p.value,
                    m == Method::mc ? "std_error" : "error_estimate", p.error);
    }
    return exit_ok;
}

void write_outputs(const SweepResult &r, const std::string &csv_path, bool svg)
{
    emit_csv(r, csv_path);
    if (svg)
    {
        auto svg_path = std::filesystem::path(csv_path).replace_extension(".svg");
        emit_svg(r, svg_path.string());
    }
}

int report_failures(const SweepResult &r)
{
    if (r.all_ok())
        return exit_ok;
    for (const auto &row : r.rows)
        if (!row.ok)
            std::cerr << "row axis=" << row.axis_value << " " << r.label(row) << ": " << row.note << '\n';
    return exit_numeric;
}

int run_sweep_cmd(const Overrides &o)
{
    const auto spec = load(o);
    const auto r = run_sweep(spec);
    if (o.out.empty())
        write_csv(r, std::cout);
    else
        write_outputs(r, o.out, o.svg);
    return report_failures(r);
}

int run_validate_cmd(const Overrides &o)
{
    const auto spec = load(o);
    ValidateOptions vo;
    vo.corrupt_index = o.perturb_index;
    vo.corrupt_offset = o.perturb_offset;
    const auto report = validate(spec, spec.mc_samples, spec.seed, vo);
    print_report(report, std::cout);
    return report.passed ? exit_ok : exit_validation;
}

int run_figures_cmd(const Overrides &o, const std::string &config_dir)
{
    const std::filesystem::path out_dir = std::filesystem::path(o.out.empty() ? std::string("figures") : o.out);
    std::filesystem::create_directories(out_dir);
    int code = exit_ok;
    const auto start = std::chrono::steady_clock::now();
    for (const char *name : {"fig2", "fig3", "fig4", "fig5"})
    {
        Overrides fo = o;
        fo.config = (std::filesystem::path(config_dir) / (std::string(name) + ".conf")).string();
        const auto spec = load(fo);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = run_sweep(spec);
        write_outputs(r, (out_dir / (std::string(name) + ".csv")).string(), true);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::printf("%s: %zu rows in %.2f s -> %s\n", name, r.rows.size(), dt.count(),
                    (out_dir / (std::string(name) + ".{csv,svg}")).string().c_str());
        if (const int c = report_failures(r); c != exit_ok)
            code = c;
    }
    const std::chrono::duration<double> total = std::chrono::steady_clock::now() - start;
    std::printf("total: %.2f s\n", total.count());
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy metrics of a single pinching-antenna wiretap system"};
    app.require_subcommand(1);

    Overrides o;
    std::string config_dir = PASEC_DEFAULT_CONFIG_DIR;

    auto add_common = [&](CLI::App *cmd, bool needs_config) {
        auto *opt = cmd->add_option("--config", o.config, "Scenario/sweep config file");
        if (needs_config)
            opt->required();
        cmd->add_option("--seed", o.seed, "Monte-Carlo master seed");
        cmd->add_option("--mc-samples", o.mc_samples, "Monte-Carlo sample count");
        cmd->add_option("--tol", o.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--psi-base", o.psi_base, "Outage threshold base: Psi = e^Rs or 2^Rs")
            ->check(CLI::IsMember({"e", "2"}));
    };

    auto *asc = app.add_subcommand("asc", "Average secrecy capacity at one scenario");
    auto *spsc = app.add_subcommand("spsc", "Probability of strictly positive secrecy capacity");
    auto *sop = app.add_subcommand("sop", "Secrecy outage probability");
    for (auto *cmd : {asc, spsc, sop})
    {
        add_common(cmd, true);
        cmd->add_option("--method", o.method, "analytic-y, analytic-gamma or mc (default: config methods)");
    }

    auto *sweep = app.add_subcommand("sweep", "Evaluate a sweep and write CSV");
    add_common(sweep, true);
    sweep->add_option("--out", o.out, "CSV output path (default: stdout)");
    sweep->add_flag("--svg", o.svg, "Also write an SVG chart next to the CSV");

    auto *val = app.add_subcommand("validate", "Check analytic values against Monte-Carlo");
    add_common(val, true);
    // self-test hook: shifts one analytic value before comparison
    val->add_option("--perturb-index", o.perturb_index)->group("");
    val->add_option("--perturb-offset", o.perturb_offset)->group("");

    auto *figs = app.add_subcommand("figures", "Regenerate the four shipped figure sweeps");
    add_common(figs, false);
    figs->add_option("--out", o.out, "Output directory (default: ./figures)");
    figs->add_option("--config-dir", config_dir, "Directory holding fig2.conf .. fig5.conf");
    figs->add_flag("--svg", o.svg, "Accepted for symmetry; figures always writes SVG");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (*asc)
            return run_single(Metric::asc, o);
        if (*spsc)
            return run_single(Metric::spsc, o);
        if (*sop)
            return run_single(Metric::sop, o);
        if (*sweep)
            return run_sweep_cmd(o);
        if (*val)
            return run_validate_cmd(o);
        if (*figs)
            return run_figures_cmd(o, config_dir);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const QuadratureError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numeric;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    return exit_ok;
}
