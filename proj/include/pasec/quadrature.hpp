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

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace pasec
{

struct QuadratureResult
{
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// Thrown by callers that require a converged integral. Carries the partial result.
class QuadratureError : public std::runtime_error
{
  public:
    QuadratureError(const std::string &what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial)
    {
    }
    const QuadratureResult &partial() const noexcept { return partial_; }

  private:
    QuadratureResult partial_;
};

inline constexpr std::size_t default_max_evaluations = 1'000'000;
inline constexpr double default_inner_tolerance = 1e-9;
inline constexpr double default_outer_tolerance = 1e-8;

using Integrand = std::function<double(double)>;

/// Integrand that also receives the exact distance to a square-root pole,
/// so that factors like 1/sqrt(pole - x) can be formed without cancellation.
using PoleIntegrand = std::function<double(double x, double gap)>;

enum class SingularEnd
{
    lower,
    upper
};

/// Globally adaptive 21-point Gauss-Kronrod quadrature with bisection of the
/// worst subinterval. Stops when the summed error estimate is <= abs_tol or
/// the evaluation budget is spent; in the latter case converged is false.
QuadratureResult integrate(const Integrand &f, double a, double b, double abs_tol,
                           std::size_t max_evaluations = default_max_evaluations);

/// Integrates f with an (at most) inverse-square-root singularity at one end
/// of [a, b] by substituting x = a + u^2 or x = b - u^2.
QuadratureResult integrate_sqrt_endpoint(const Integrand &f, double a, double b, SingularEnd end, double abs_tol,
                                         std::size_t max_evaluations = default_max_evaluations);

/// Same substitution about a pole that may lie outside [a, b] (pole >= b or
/// pole <= a). f receives x and |pole - x| computed as u^2.
QuadratureResult integrate_near_sqrt_pole(const PoleIntegrand &f, double a, double b, double pole, double abs_tol,
                                          std::size_t max_evaluations = default_max_evaluations);

/// Returns r if converged, otherwise throws QuadratureError naming `what`.
const QuadratureResult &require_converged(const QuadratureResult &r, const std::string &what);

} // namespace pasec
