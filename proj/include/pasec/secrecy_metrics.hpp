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

#include "pasec/channel_geometry.hpp"
#include "pasec/quadrature.hpp"
#include "pasec/snr_distribution.hpp"

#include <cstddef>

namespace pasec
{

/// Transmitter, legitimate receiver (main) and eavesdropper (eve).
struct WiretapScenario
{
    SystemConfig config;
    NodeGeometry main;
    NodeGeometry eve;

    void validate() const;
    SnrDistribution main_law() const { return SnrDistribution::for_node(main, config); }
    SnrDistribution eve_law() const { return SnrDistribution::for_node(eve, config); }

    /// Same scenario with the roles of main and eve exchanged.
    WiretapScenario swapped() const { return {config, eve, main}; }
};

enum class ThresholdBase
{
    natural,
    binary
};

/// Target secrecy rate R_s and the convention Psi = base^R_s.
struct SecrecyRate
{
    double rate_bps_hz = 0.0;
    ThresholdBase base = ThresholdBase::natural;

    double psi() const;
};

/// Integration limits of the three SPSC cases. Intervals with lo > hi are
/// empty and contribute nothing.
struct CaseLimits
{
    double gamma_l1;
    double gamma_u1;
    double gamma_l2;
    double gamma_u2;

    bool case1_empty() const { return !(gamma_l1 < gamma_u1); }
    bool case2_empty() const { return !(gamma_l2 < gamma_u2); }
};

/// The two independent analytic evaluation paths.
enum class Route
{
    y_substitution, ///< integrate over receiver offsets; smooth integrands
    gamma_domain    ///< integrate the SNR densities with a sqrt-pole substitution
};

struct MetricValue
{
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// log2(1 + gm) - log2(1 + ge) when gm > ge, else 0.
double secrecy_capacity(double gamma_m, double gamma_e);

MetricValue average_sc(const WiretapScenario &s, double tol = default_outer_tolerance,
                       Route route = Route::y_substitution);

MetricValue spsc(const WiretapScenario &s, double tol = default_inner_tolerance,
                 Route route = Route::y_substitution);

/// SPSC assembled from CaseLimits term by term from the case limits:
/// F_M(U1) - F_M(L1) - (2/D_E) * int_{L2}^{U2} sqrt(scale_E/g - h^2) f_M(g) dg.
/// Diagnostic only; it omits the Case-2 mass term and can leave [0, 1].
MetricValue spsc_case_form(const WiretapScenario &s, double tol = default_inner_tolerance);

struct SpscReport
{
    MetricValue general;   ///< int f_M F_E, authoritative
    MetricValue case_form; ///< case-limit closed form
    double deviation;      ///< general - case_form
};

SpscReport spsc_report(const WiretapScenario &s, double tol = default_inner_tolerance);

MetricValue sop(const WiretapScenario &s, const SecrecyRate &rate, double tol = default_inner_tolerance,
                Route route = Route::y_substitution);

/// The closed form (2/D_M) * int sqrt(scale_M/(Psi g + Psi - 1) - h^2) f_E(g) dg
/// with the square-root argument clamped at zero. Equals 1 - sop whenever
/// Psi*g + Psi - 1 stays inside M's support for every g in E's support.
MetricValue sop_closed_form(const WiretapScenario &s, const SecrecyRate &rate,
                             double tol = default_inner_tolerance);

CaseLimits case_limits(const WiretapScenario &s);

} // namespace pasec
