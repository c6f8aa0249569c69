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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pasec
{
namespace
{

// Sorted breakpoints of [a, b], keeping only cuts strictly inside.
std::vector<double> pieces(double a, double b, std::initializer_list<double> cuts)
{
    std::vector<double> points{a};
    for (double c : cuts)
        if (std::isfinite(c) && c > a && c < b)
            points.push_back(c);
    points.push_back(b);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

// Offset y >= 0 at which scale / (y^2 + h2) equals gamma; NaN if none.
double offset_where(double scale, double h2, double gamma)
{
    if (!(gamma > 0.0))
        return std::numeric_limits<double>::quiet_NaN();
    const double y2 = scale / gamma - h2;
    return y2 > 0.0 ? std::sqrt(y2) : std::numeric_limits<double>::quiet_NaN();
}

struct Accumulator
{
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;

    void add(const QuadratureResult &r)
    {
        value += r.value;
        error += r.abs_error_estimate;
        evaluations += r.evaluations;
    }
};

template <typename Integrate>
Accumulator integrate_pieces(const std::vector<double> &points, double tol, const char *what, Integrate &&piece)
{
    Accumulator acc;
    const double piece_tol = tol / static_cast<double>(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        acc.add(require_converged(piece(points[i], points[i + 1], piece_tol), what));
    return acc;
}

void check_tolerance(double tol)
{
    if (!(tol > 0.0))
        throw std::domain_error("tolerance must be positive");
}

} // namespace

void WiretapScenario::validate() const
{
    config.validate();
    main.validate();
    eve.validate();
}

double SecrecyRate::psi() const
{
    if (!(rate_bps_hz >= 0.0) || !std::isfinite(rate_bps_hz))
        throw std::domain_error("secrecy rate must be non-negative");
    return base == ThresholdBase::natural ? std::exp(rate_bps_hz) : std::exp2(rate_bps_hz);
}

double secrecy_capacity(double gamma_m, double gamma_e)
{
    if (!(gamma_m > gamma_e))
        return 0.0;
    return (std::log1p(gamma_m) - std::log1p(gamma_e)) / std::numbers::ln2;
}

CaseLimits case_limits(const WiretapScenario &s)
{
    const auto m = s.main_law();
    const auto e = s.eve_law();
    return {std::max(m.support_lo(), e.support_hi()), m.support_hi(), std::max(m.support_lo(), e.support_lo()),
            std::min(m.support_hi(), e.support_hi())};
}

MetricValue average_sc(const WiretapScenario &s, double tol, Route route)
{
    check_tolerance(tol);
    const auto m = s.main_law();
    const auto e = s.eve_law();
    const double ln2 = std::numbers::ln2;
    std::size_t inner_evals = 0;
    double inner_error = 0.0;

    if (route == Route::y_substitution)
    {
        const double h2 = s.config.antenna_height_m * s.config.antenna_height_m;
        const double half_m = 0.5 * m.rect_y_m();
        const double half_e = 0.5 * e.rect_y_m();
        const double scale_m = m.scale();
        const double scale_e = e.scale();
        const double ratio = scale_e / scale_m;
        const double inner_tol = 0.1 * tol * half_e * ln2;

        // Eve's offsets beyond y_star(y_m) see a weaker SNR than main.
        auto inner = [&](double y_m) {
            const double d2 = y_m * y_m + h2;
            const double log_m = std::log1p(scale_m / d2);
            const double s2 = ratio * d2 - h2;
            const double y_star = s2 > 0.0 ? std::sqrt(s2) : 0.0;
            if (y_star >= half_e)
                return 0.0;
            const auto r = integrate([&](double y_e) { return log_m - std::log1p(scale_e / (y_e * y_e + h2)); },
                                     y_star, half_e, inner_tol);
            require_converged(r, "average_sc inner integral");
            inner_evals += r.evaluations;
            inner_error = std::max(inner_error, r.abs_error_estimate);
            return r.value;
        };

        const auto points = pieces(0.0, half_m,
                                   {ratio < 1.0 ? std::sqrt(h2 / ratio - h2) : -1.0,
                                    std::sqrt(std::max((h2 + half_e * half_e) / ratio - h2, 0.0))});
        const double norm = 1.0 / (half_m * half_e * ln2);
        const auto outer = integrate_pieces(points, 0.5 * tol / norm, "average_sc",
                                            [&](double a, double b, double t) { return integrate(inner, a, b, t); });
        return {outer.value * norm, outer.error * norm + inner_error * half_m * norm,
                outer.evaluations + inner_evals};
    }

    const double inner_tol = 0.1 * tol * ln2;
    auto inner = [&](double gamma_m) {
        const double upper = std::min(gamma_m, e.support_hi());
        // Empty inner range: main is below every eavesdropper SNR.
        if (upper <= e.support_lo())
            return 0.0;
        const double log_m = std::log1p(gamma_m);
        const auto r = integrate_near_sqrt_pole(
            [&](double gamma_e, double gap) { return (log_m - std::log1p(gamma_e)) * e.pdf_from_gap(gap); },
            e.support_lo(), upper, e.support_hi(), inner_tol);
        require_converged(r, "average_sc inner integral");
        inner_evals += r.evaluations;
        inner_error = std::max(inner_error, r.abs_error_estimate);
        return r.value;
    };
    const auto points = pieces(m.support_lo(), m.support_hi(), {e.support_lo(), e.support_hi()});
    const auto outer = integrate_pieces(points, 0.5 * tol * ln2, "average_sc", [&](double a, double b, double t) {
        return integrate_near_sqrt_pole([&](double gamma_m, double gap) { return m.pdf_from_gap(gap) * inner(gamma_m); },
                                        a, b, m.support_hi(), t);
    });
    return {outer.value / ln2, (outer.error + inner_error) / ln2, outer.evaluations + inner_evals};
}

MetricValue spsc(const WiretapScenario &s, double tol, Route route)
{
    check_tolerance(tol);
    const auto m = s.main_law();
    const auto e = s.eve_law();

    if (route == Route::y_substitution)
    {
        const double h2 = s.config.antenna_height_m * s.config.antenna_height_m;
        const double half_m = 0.5 * m.rect_y_m();
        const double scale_m = m.scale();
        const auto points = pieces(0.0, half_m, {offset_where(scale_m, h2, e.support_hi()),
                                                 offset_where(scale_m, h2, e.support_lo())});
        const auto acc = integrate_pieces(points, tol * half_m, "spsc", [&](double a, double b, double t) {
            return integrate([&](double y) { return e.cdf(scale_m / (y * y + h2)); }, a, b, t);
        });
        return {acc.value / half_m, acc.error / half_m, acc.evaluations};
    }

    const auto points = pieces(m.support_lo(), m.support_hi(), {e.support_lo(), e.support_hi()});
    const auto acc = integrate_pieces(points, tol, "spsc", [&](double a, double b, double t) {
        return integrate_near_sqrt_pole([&](double g, double gap) { return m.pdf_from_gap(gap) * e.cdf(g); }, a, b,
                                        m.support_hi(), t);
    });
    return {acc.value, acc.error, acc.evaluations};
}

MetricValue spsc_case_form(const WiretapScenario &s, double tol)
{
    check_tolerance(tol);
    const auto m = s.main_law();
    const auto e = s.eve_law();
    const auto lim = case_limits(s);
    const double h2 = s.config.antenna_height_m * s.config.antenna_height_m;

    const double mass = lim.case1_empty() ? 0.0 : m.cdf(lim.gamma_u1) - m.cdf(lim.gamma_l1);
    if (lim.case2_empty())
        return {mass, 0.0, 0};

    const double two_over_de = 2.0 / e.rect_y_m();
    const double scale_e = e.scale();
    const auto r = integrate_near_sqrt_pole(
        [&](double g, double gap) { return two_over_de * std::sqrt(std::max(scale_e / g - h2, 0.0)) * m.pdf_from_gap(gap); },
        lim.gamma_l2, lim.gamma_u2, m.support_hi(), tol);
    require_converged(r, "spsc_case_form");
    return {mass - r.value, r.abs_error_estimate, r.evaluations};
}

SpscReport spsc_report(const WiretapScenario &s, double tol)
{
    const auto general = spsc(s, tol);
    const auto closed = spsc_case_form(s, tol);
    return {general, closed, general.value - closed.value};
}

MetricValue sop(const WiretapScenario &s, const SecrecyRate &rate, double tol, Route route)
{
    check_tolerance(tol);
    const double psi = rate.psi();
    const auto m = s.main_law();
    const auto e = s.eve_law();
    // Eve SNRs at which the outage threshold crosses main's support ends.
    const double cut_hi = (m.support_hi() + 1.0) / psi - 1.0;
    const double cut_lo = (m.support_lo() + 1.0) / psi - 1.0;
    auto outage_given = [&](double gamma_e) { return m.cdf(psi * gamma_e + psi - 1.0); };

    if (route == Route::y_substitution)
    {
        const double h2 = s.config.antenna_height_m * s.config.antenna_height_m;
        const double half_e = 0.5 * e.rect_y_m();
        const double scale_e = e.scale();
        const auto points =
            pieces(0.0, half_e, {offset_where(scale_e, h2, cut_hi), offset_where(scale_e, h2, cut_lo)});
        const auto acc = integrate_pieces(points, tol * half_e, "sop", [&](double a, double b, double t) {
            return integrate([&](double y) { return outage_given(scale_e / (y * y + h2)); }, a, b, t);
        });
        return {acc.value / half_e, acc.error / half_e, acc.evaluations};
    }

    const auto points = pieces(e.support_lo(), e.support_hi(), {cut_lo, cut_hi});
    const auto acc = integrate_pieces(points, tol, "sop", [&](double a, double b, double t) {
        return integrate_near_sqrt_pole([&](double g, double gap) { return outage_given(g) * e.pdf_from_gap(gap); },
                                        a, b, e.support_hi(), t);
    });
    return {acc.value, acc.error, acc.evaluations};
}

MetricValue sop_closed_form(const WiretapScenario &s, const SecrecyRate &rate, double tol)
{
    check_tolerance(tol);
    const double psi = rate.psi();
    const auto m = s.main_law();
    const auto e = s.eve_law();
    const double h2 = s.config.antenna_height_m * s.config.antenna_height_m;
    const double two_over_dm = 2.0 / m.rect_y_m();
    const double scale_m = m.scale();
    const auto r = integrate_near_sqrt_pole(
        [&](double g, double gap) {
            const double arg = scale_m / (psi * g + psi - 1.0) - h2;
            return two_over_dm * std::sqrt(std::max(arg, 0.0)) * e.pdf_from_gap(gap);
        },
        e.support_lo(), e.support_hi(), e.support_hi(), tol);
    require_converged(r, "sop_closed_form");
    return {r.value, r.abs_error_estimate, r.evaluations};
}

} // namespace pasec
