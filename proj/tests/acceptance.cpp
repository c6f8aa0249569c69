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

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero
// when any selected criterion fails. `--criterion N` runs a single one.

#include "pasec/monte_carlo.hpp"
#include "pasec/secrecy_metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace pasec;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

WiretapScenario scenario(double main_db, double eve_db, double h, double dy_main, double dy_eve)
{
    WiretapScenario s;
    s.config.antenna_height_m = h;
    s.config.carrier_frequency_hz = 28e9;
    s.config.noise_power_dbm = -90.0;
    s.main = {10.0, dy_main, main_db};
    s.eve = {10.0, dy_eve, eve_db};
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within_3se(double analytic, const McEstimate &mc)
{
    return std::abs(analytic - mc.mean) <= 3.0 * std::max(mc.std_error, 1.0 / static_cast<double>(mc.n_samples));
}

bool rel_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-12});
}

Outcome criterion1()
{
    bool ok = true;
    std::string detail;
    for (auto [h, target] : {std::pair{2.0, 3.0}, std::pair{6.0, 1.5}})
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double v = average_sc(scenario(80, 50, h, 10, 10)).value;
        const double dt = seconds_since(t0);
        const bool pass = std::abs(v - target) <= 0.15 && dt < 2.0;
        ok &= pass;
        detail += fmt("h=%g: asc=%.6f (want %.2f±0.15, %.3fs) ", h, v, target, dt);
    }
    return {ok, detail};
}

Outcome criterion2()
{
    const double sym = spsc(scenario(50, 50, 2, 30, 30)).value;
    const double e40 = spsc(scenario(50, 40, 2, 30, 30)).value;
    const bool ok = std::abs(sym - 0.5) <= 1e-9 && std::abs(e40 - 0.9) <= 0.05;
    return {ok, fmt("eve 50 dB: spsc=%.12f (want 0.5); eve 40 dB: spsc=%.6f (want 0.90±0.05)", sym, e40)};
}

Outcome criterion3()
{
    const double d60 = spsc(scenario(50, 60, 2, 10, 60)).value;
    const double d30 = spsc(scenario(50, 60, 2, 10, 30)).value;
    const bool ok = std::abs(d60 - 0.32) <= 0.05 && std::abs(d30 - 0.65) <= 0.05;
    std::string detail = fmt("D_yE=60: spsc=%.6f (want 0.32±0.05); D_yE=30: spsc=%.6f (want 0.65±0.05)", d60, d30);
    if (!ok && std::abs(d60 - 0.65) <= 0.05 && std::abs(d30 - 0.32) <= 0.05)
        detail += " -- the computed values match the targets with the two D_yE labels exchanged";
    return {ok, detail};
}

Outcome criterion4()
{
    const SecrecyRate rate{0.25, ThresholdBase::natural};
    std::vector<double> grid;
    for (int i = 0; i < 26; ++i)
        grid.push_back(50.0 + 2.0 * i);
    const double eves[] = {65, 75, 85};

    std::vector<std::vector<double>> curve(3, std::vector<double>(grid.size()));
    bool ok = true;
    int mc_fail = 0, order_fail = 0;
    std::uint64_t seed = 2025;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const auto s = scenario(grid[i], eves[k], 2, 10, 10);
            curve[k][i] = sop(s, rate).value;
            if (!within_3se(curve[k][i], estimate_sop(s, rate, 1'000'000, ++seed)))
                ++mc_fail;
        }
    // strict where the curve lies inside (0, 1); saturated stretches may be flat
    auto interior = [](double v) { return v > 0.0 && v < 1.0; };
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 1; i < grid.size(); ++i)
        {
            const double a = curve[k][i - 1], b = curve[k][i];
            if (b > a || ((interior(a) || interior(b)) && !(b < a)))
                ++order_fail;
        }
    for (std::size_t k = 1; k < 3; ++k)
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const double lo = curve[k - 1][i], hi = curve[k][i];
            if (lo > hi || ((interior(lo) || interior(hi)) && !(lo < hi)))
                ++order_fail;
        }
    ok = mc_fail == 0 && order_fail == 0;
    return {ok, fmt("%zu points; ordering violations=%d; MC(n=1e6) outside 3se=%d", 3 * grid.size(), order_fail,
                    mc_fail)};
}

Outcome criterion5()
{
    int failures = 0;
    std::string detail;
    auto note = [&](bool pass, const std::string &what) {
        if (!pass)
        {
            ++failures;
            detail += what + " ";
        }
    };

    std::vector<SnrDistribution> laws;
    for (double h : {1.0, 2.0, 6.0})
        for (double dy : {10.0, 30.0, 60.0})
            laws.push_back(scenario(80, 50, h, dy, dy).main_law());

    double worst_norm = 0.0, worst_trip = 0.0;
    for (const auto &d : laws)
    {
        const auto r = integrate_near_sqrt_pole([&d](double, double gap) { return d.pdf_from_gap(gap); },
                                                d.support_lo(), d.support_hi(), d.support_hi(), 1e-11);
        worst_norm = std::max(worst_norm, std::abs(r.value - 1.0));
        for (int i = 0; i <= 1000; ++i)
            worst_trip = std::max(worst_trip, std::abs(d.cdf(d.quantile(i / 1000.0)) - i / 1000.0));
    }
    note(worst_norm <= 1e-8, fmt("normalization=%.2e", worst_norm));
    note(worst_trip <= 1e-12, fmt("round-trip=%.2e", worst_trip));

    {
        const auto &d = laws[4];
        constexpr std::size_t n = 1'000'000;
        auto rng = substream(99, 0);
        std::vector<double> xs(n);
        for (auto &x : xs)
            x = d.sample(rng);
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double f = d.cdf(xs[i]);
            ks = std::max({ks, f - double(i) / n, double(i + 1) / n - f});
        }
        note(ks < 1.628 / std::sqrt(double(n)), fmt("KS=%.5f", ks));
        detail += fmt("KS=%.5f ", ks);
    }

    const SecrecyRate zero{0.0, ThresholdBase::natural};
    double worst_comp = 0.0, worst_swap = 0.0;
    for (double gm : {40.0, 60.0, 80.0})
        for (double ge : {45.0, 60.0, 75.0})
            for (double dy : {10.0, 30.0})
            {
                const auto s = scenario(gm, ge, 2, dy, 40 - dy);
                const double p = spsc(s).value;
                worst_comp = std::max(worst_comp, std::abs(p + sop(s, zero).value - 1.0));
                worst_swap = std::max(worst_swap, std::abs(spsc(s.swapped()).value - (1.0 - p)));
            }
    note(worst_comp <= 1e-6, fmt("spsc+sop(0)-1=%.2e", worst_comp));
    note(worst_swap <= 1e-6, fmt("exchange=%.2e", worst_swap));

    // 5-point grids: sop falls in main SNR, rises in eve SNR; asc falls in h
    const SecrecyRate rate{0.25, ThresholdBase::natural};
    const double mains[] = {60, 70, 80, 90, 100};
    const double eves[] = {65, 70, 75, 80, 85};
    int mono = 0;
    for (double ge : eves)
        for (int i = 1; i < 5; ++i)
            mono += sop(scenario(mains[i], ge, 2, 10, 10), rate).value > sop(scenario(mains[i - 1], ge, 2, 10, 10), rate).value;
    for (double gm : mains)
        for (int i = 1; i < 5; ++i)
            mono += sop(scenario(gm, eves[i], 2, 10, 10), rate).value < sop(scenario(gm, eves[i - 1], 2, 10, 10), rate).value;
    const double hs[] = {1, 2, 3, 4, 6};
    for (int i = 1; i < 5; ++i)
        mono += !(average_sc(scenario(80, 50, hs[i], 10, 10)).value < average_sc(scenario(80, 50, hs[i - 1], 10, 10)).value);
    note(mono == 0, fmt("monotonicity violations=%d", mono));

    detail += fmt("norm=%.1e trip=%.1e comp=%.1e exch=%.1e", worst_norm, worst_trip, worst_comp, worst_swap);
    return {failures == 0, detail};
}

Outcome criterion6()
{
    std::vector<WiretapScenario> configs;
    for (double h : {1.5, 4.0})
        for (double dy : {8.0, 30.0})
            for (double diff : {-8.0, -2.0, 0.0, 3.0, 10.0})
                configs.push_back(scenario(70.0 + diff, 70.0, h, dy, 40.0 - dy));

    const SecrecyRate rate{0.25, ThresholdBase::natural};
    double worst_asc = 0.0, worst_sop = 0.0, worst_dev = 0.0;
    int route_fail = 0, mc_fail = 0;
    std::uint64_t seed = 2025; // project-wide default seed, as in configs/
    for (const auto &s : configs)
    {
        const double ay = average_sc(s, 1e-10).value;
        const double ag = average_sc(s, 1e-10, Route::gamma_domain).value;
        const double oy = sop(s, rate, 1e-11).value;
        const double og = sop(s, rate, 1e-11, Route::gamma_domain).value;
        route_fail += !rel_close(ay, ag, 1e-6) + !rel_close(oy, og, 1e-6);
        worst_asc = std::max(worst_asc, std::abs(ay - ag) / std::max(std::abs(ay), 1e-12));
        worst_sop = std::max(worst_sop, std::abs(oy - og) / std::max(std::abs(oy), 1e-12));

        const auto report = spsc_report(s);
        mc_fail += !within_3se(report.general.value, estimate_spsc(s, 1'000'000, ++seed));
        worst_dev = std::max(worst_dev, std::abs(report.deviation));
    }
    return {route_fail == 0 && mc_fail == 0,
            fmt("20 configs; max rel diff asc=%.2e sop=%.2e; spsc outside 3se=%d; "
                "max |spsc - case-limit form|=%.4f (reported only)",
                worst_asc, worst_sop, mc_fail, worst_dev)};
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion7()
{
    const auto base = fs::temp_directory_path() / "pasec_acceptance_figures";
    fs::remove_all(base);
    double worst = 0.0;
    for (const char *run : {"a", "b"})
    {
        const auto t0 = std::chrono::steady_clock::now();
        const std::string cmd = std::string(PASEC_CLI_PATH) + " figures --config-dir " + PASEC_CONFIG_DIR +
                                " --out " + (base / run).string() + " > /dev/null";
        if (std::system(cmd.c_str()) != 0)
            return {false, "figures subcommand failed"};
        worst = std::max(worst, seconds_since(t0));
    }
    int files = 0, identical = 0;
    for (const char *name : {"fig2", "fig3", "fig4", "fig5"})
        for (const char *ext : {".csv", ".svg"})
        {
            const std::string file = std::string(name) + ext;
            ++files;
            const auto a = slurp(base / "a" / file);
            identical += !a.empty() && a == slurp(base / "b" / file);
        }
    return {identical == files && worst < 60.0,
            fmt("%d/%d files byte-identical across runs; slowest run %.2f s (limit 60 s)", identical, files, worst)};
}

} // namespace

int main(int argc, char **argv)
{
    const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7};
    int only = 0;
    for (int i = 1; i < argc; ++i)
    {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else
        {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(criteria.size()))
    {
        std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
        return 2;
    }

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        if (only != 0 && static_cast<int>(i + 1) != only)
            continue;
        Outcome o;
        try
        {
            o = criteria[i]();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
        std::fflush(stdout);
        all &= o.pass;
    }
    return all ? 0 : 1;
}
