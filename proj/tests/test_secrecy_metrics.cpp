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

#include "pasec/secrecy_metrics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

using namespace pasec;
using doctest::Approx;

namespace
{
// main/eve average SNR in dB, height, main and eve rectangle depth D_y.
WiretapScenario scenario(double main_db, double eve_db, double h = 2.0, double dy_main = 10.0,
                         double dy_eve = 10.0)
{
    WiretapScenario s;
    s.config.antenna_height_m = h;
    s.main = {10.0, dy_main, main_db};
    s.eve = {10.0, dy_eve, eve_db};
    return s;
}

const SecrecyRate quarter{0.25, ThresholdBase::natural};

// Reference values from tests/oracles/mp_oracle.py (30-digit mpmath).
struct Frozen
{
    double main_db, eve_db, h, dy_main, dy_eve, value;
};
const Frozen frozen_asc[] = {
    {80, 50, 2, 10, 10, 3.044015268606652},
    {80, 50, 6, 10, 10, 1.413335301302333},
    {60, 60, 2, 10, 10, 0.03805487897318149},
    {70, 55, 3, 8, 12, 0.6136762188317634},
};
const Frozen frozen_spsc[] = {
    {50, 40, 2, 30, 30, 0.8947234663384794},
    {50, 60, 2, 10, 60, 0.6537704110240281},
    {50, 60, 2, 10, 30, 0.3158296009845619},
    {65, 62, 3, 12, 20, 0.88566377158376},
};
struct FrozenSop
{
    double main_db, eve_db, h, dy_main, dy_eve, rate, value;
};
const FrozenSop frozen_sop[] = {
    {78, 75, 2, 10, 10, 0.25, 0.3498382605248177},
    {86, 85, 2, 10, 10, 0.25, 0.5172621681746797},
    {76, 74, 1.5, 10, 20, 0.5, 0.3345736384690384},
};

std::vector<WiretapScenario> mixed_battery()
{
    std::vector<WiretapScenario> out;
    for (double h : {1.0, 3.5})
        for (double dm : {6.0, 25.0})
            for (double de : {8.0, 40.0})
                for (double gap : {-6.0, 2.0, 12.0})
                    out.push_back(scenario(70.0 + gap, 70.0, h, dm, de));
    return out;
}
} // namespace

TEST_CASE("secrecy capacity")
{
    CHECK(secrecy_capacity(3.0, 1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(secrecy_capacity(1.0, 3.0) == 0.0);
    CHECK(secrecy_capacity(2.0, 2.0) == 0.0);
    CHECK(secrecy_capacity(1e-20, 0.0) > 0.0);
}

TEST_CASE("average_sc against the high-precision oracle")
{
    for (const auto &f : frozen_asc)
    {
        const auto s = scenario(f.main_db, f.eve_db, f.h, f.dy_main, f.dy_eve);
        CAPTURE(f.value);
        CHECK(average_sc(s, 1e-10).value == Approx(f.value).epsilon(1e-9));
        CHECK(average_sc(s, 1e-10, Route::gamma_domain).value == Approx(f.value).epsilon(1e-8));
    }
}

TEST_CASE("spsc against the high-precision oracle")
{
    for (const auto &f : frozen_spsc)
    {
        const auto s = scenario(f.main_db, f.eve_db, f.h, f.dy_main, f.dy_eve);
        CAPTURE(f.value);
        CHECK(spsc(s, 1e-11).value == Approx(f.value).epsilon(1e-9));
        CHECK(spsc(s, 1e-11, Route::gamma_domain).value == Approx(f.value).epsilon(1e-8));
    }
}

TEST_CASE("sop against the high-precision oracle")
{
    for (const auto &f : frozen_sop)
    {
        const auto s = scenario(f.main_db, f.eve_db, f.h, f.dy_main, f.dy_eve);
        const SecrecyRate rate{f.rate, ThresholdBase::natural};
        CAPTURE(f.value);
        CHECK(sop(s, rate, 1e-11).value == Approx(f.value).epsilon(1e-9));
        CHECK(sop(s, rate, 1e-11, Route::gamma_domain).value == Approx(f.value).epsilon(1e-8));
    }
}

TEST_CASE("identical nodes give spsc = 1/2 exactly by symmetry")
{
    CHECK(spsc(scenario(50, 50, 2, 30, 30)).value == Approx(0.5).epsilon(1e-12));
    CHECK(spsc(scenario(73, 73, 4, 7, 7), 1e-9, Route::gamma_domain).value == Approx(0.5).epsilon(1e-10));
}

TEST_CASE("routes agree on a mixed battery")
{
    for (const auto &s : mixed_battery())
    {
        CAPTURE(s.main.avg_snr_db);
        CAPTURE(s.main.rect_y_m);
        CAPTURE(s.eve.rect_y_m);
        CAPTURE(s.config.antenna_height_m);
        const double a = average_sc(s).value;
        CHECK(average_sc(s, 1e-8, Route::gamma_domain).value == Approx(a).epsilon(1e-6).scale(1e-8));
        const double p = spsc(s).value;
        CHECK(spsc(s, 1e-9, Route::gamma_domain).value == Approx(p).epsilon(1e-6).scale(1e-9));
        const double o = sop(s, quarter).value;
        CHECK(sop(s, quarter, 1e-9, Route::gamma_domain).value == Approx(o).epsilon(1e-6).scale(1e-9));
    }
}

TEST_CASE("complementarity, exchange and range")
{
    const SecrecyRate zero{0.0, ThresholdBase::natural};
    for (const auto &s : mixed_battery())
    {
        const double p = spsc(s).value;
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(p + sop(s, zero).value == Approx(1.0).epsilon(1e-6));
        CHECK(spsc(s.swapped()).value == Approx(1.0 - p).epsilon(1e-6).scale(1e-6));
        CHECK(average_sc(s).value >= 0.0);
        const double o = sop(s, quarter).value;
        CHECK(o >= 0.0);
        CHECK(o <= 1.0);
    }
}

TEST_CASE("disjoint supports saturate the metrics")
{
    const auto strong = scenario(100, 40);
    CHECK(spsc(strong).value == 1.0);
    CHECK(sop(strong, quarter).value == 0.0);
    const auto weak = scenario(40, 100);
    CHECK(spsc(weak).value == 0.0);
    CHECK(sop(weak, quarter).value == 1.0);
    CHECK(average_sc(weak).value == 0.0);
}

TEST_CASE("monotonicity grids")
{
    const double grid[] = {50, 60, 70, 80, 90};
    for (double eve : {65.0, 75.0, 85.0})
    {
        double prev_sop = 2.0, prev_spsc = -1.0, prev_asc = -1.0;
        for (double m : grid)
        {
            const auto s = scenario(m, eve);
            const double o = sop(s, quarter).value;
            const double p = spsc(s).value;
            const double a = average_sc(s).value;
            CHECK(o <= prev_sop);
            CHECK(p >= prev_spsc);
            CHECK(a >= prev_asc);
            prev_sop = o;
            prev_spsc = p;
            prev_asc = a;
        }
    }
    for (double m : grid)
    {
        double prev = -1.0;
        for (double eve : {65.0, 75.0, 85.0})
        {
            const double o = sop(scenario(m, eve), quarter).value;
            CHECK(o >= prev);
            prev = o;
        }
    }
    // average_sc falls as the waveguide is raised
    double prev = std::numeric_limits<double>::infinity();
    for (double h : {1.0, 2.0, 3.0, 4.5, 6.0})
    {
        const double a = average_sc(scenario(80, 50, h)).value;
        CHECK(a < prev);
        prev = a;
    }
}

TEST_CASE("binary threshold base")
{
    const auto s = scenario(78, 75);
    const SecrecyRate nats{0.25, ThresholdBase::natural};
    const SecrecyRate bits{0.25, ThresholdBase::binary};
    CHECK(nats.psi() == Approx(std::exp(0.25)));
    CHECK(bits.psi() == Approx(std::exp2(0.25)));
    // 2^R < e^R, so the outage event shrinks
    CHECK(sop(s, bits).value < sop(s, nats).value);
    const SecrecyRate bits_as_nats{0.25 * std::numbers::ln2, ThresholdBase::natural};
    CHECK(sop(s, bits).value == Approx(sop(s, bits_as_nats).value).epsilon(1e-12));
}

TEST_CASE("case limits match a brute-force classification")
{
    for (const auto &s : mixed_battery())
    {
        const auto m = s.main_law();
        const auto e = s.eve_law();
        const auto lim = case_limits(s);
        constexpr int n = 20000;
        const double step = (m.support_hi() - m.support_lo()) / n;
        double lo1 = INFINITY, hi1 = -INFINITY, lo2 = INFINITY, hi2 = -INFINITY;
        for (int i = 0; i <= n; ++i)
        {
            const double g = m.support_lo() + i * step;
            const double f = e.cdf(g);
            if (f == 1.0)
                lo1 = std::min(lo1, g), hi1 = std::max(hi1, g);
            else if (f > 0.0)
                lo2 = std::min(lo2, g), hi2 = std::max(hi2, g);
        }
        if (std::isfinite(lo1))
        {
            REQUIRE_FALSE(lim.case1_empty());
            CHECK(std::abs(lo1 - lim.gamma_l1) <= step * 1.0001);
            CHECK(std::abs(hi1 - lim.gamma_u1) <= step * 1.0001);
        }
        if (std::isfinite(lo2))
        {
            REQUIRE_FALSE(lim.case2_empty());
            CHECK(std::abs(lo2 - lim.gamma_l2) <= step * 1.0001);
            CHECK(std::abs(hi2 - lim.gamma_u2) <= step * 1.0001);
        }
    }
}

TEST_CASE("case-limit SPSC form misses the case-2 mass")
{
    for (const auto &s : mixed_battery())
    {
        const auto r = spsc_report(s);
        const auto lim = case_limits(s);
        const auto m = s.main_law();
        const double mass2 = lim.case2_empty() ? 0.0 : m.cdf(lim.gamma_u2) - m.cdf(lim.gamma_l2);
        CHECK(r.deviation == Approx(mass2).epsilon(1e-7).scale(1e-8));
        CHECK(r.general.value - r.case_form.value == r.deviation);
    }
}

TEST_CASE("closed SOP form is the complement on interior configurations")
{
    // E's narrow support keeps Psi*g + Psi - 1 inside M's support
    const auto s = scenario(80, 75, 2.0, 10.0, 2.0);
    const auto closed = sop_closed_form(s, quarter);
    CHECK(closed.value == Approx(1.0 - sop(s, quarter).value).epsilon(1e-8));

    // outside that regime the clamped form drifts away from the complement
    const auto wide = scenario(78, 75);
    CHECK(std::abs(sop_closed_form(wide, quarter).value - (1.0 - sop(wide, quarter).value)) > 1e-3);
}

TEST_CASE("invalid tolerances and scenarios are rejected")
{
    const auto s = scenario(70, 60);
    CHECK_THROWS_AS(average_sc(s, 0.0), std::domain_error);
    CHECK_THROWS_AS(spsc(s, -1.0), std::domain_error);
    auto bad = s;
    bad.eve.rect_y_m = -5.0;
    CHECK_THROWS_AS(spsc(bad), std::domain_error);
    CHECK_THROWS_AS(sop(s, {-0.1, ThresholdBase::natural}), std::domain_error);
}
