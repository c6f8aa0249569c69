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

#include "pasec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace pasec
{
namespace
{

// 10-point Gauss / 21-point Kronrod abscissae and weights on [-1, 1]
// (QUADPACK dqk21). Odd entries of xgk are the Gauss nodes.
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::size_t evals_per_rule = 21;

struct Segment
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment &o) const { return error < o.error; }
};

Segment gauss_kronrod_21(const Integrand &f, double a, double b)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);

    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};

    const double fc = f(centr);
    double resg = 0.0;
    double resk = wgk[10] * fc;
    double resabs = std::abs(resk);

    for (int j = 0; j < 5; ++j)
    {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * xgk[jtw];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += wg[j] * (f1 + f2);
        resk += wgk[jtw] * (f1 + f2);
        resabs += wgk[jtw] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 5; ++j)
    {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * xgk[jtwm1];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += wgk[jtwm1] * (f1 + f2);
        resabs += wgk[jtwm1] * (std::abs(f1) + std::abs(f2));
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps))
        abserr = std::max(eps * 50.0 * resabs, abserr);
    if (!std::isfinite(result))
        abserr = std::numeric_limits<double>::infinity();
    return {a, b, result, abserr};
}

} // namespace

QuadratureResult integrate(const Integrand &f, double a, double b, double abs_tol, std::size_t max_evaluations)
{
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("integrate: require finite a <= b");
    if (!(abs_tol > 0.0))
        throw std::domain_error("integrate: tolerance must be positive");
    if (a == b)
        return {0.0, 0.0, 0, true};

    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod_21(f, a, b));
    std::size_t evaluations = evals_per_rule;
    double total_error = heap.top().error;

    while (total_error > abs_tol && evaluations + 2 * evals_per_rule <= max_evaluations)
    {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        // No representable midpoint left: further bisection cannot help.
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const Segment left = gauss_kronrod_21(f, worst.a, mid);
        const Segment right = gauss_kronrod_21(f, mid, worst.b);
        evaluations += 2 * evals_per_rule;
        heap.push(left);
        heap.push(right);
        total_error += left.error + right.error - worst.error;
        // Guard against drift of the running sum.
        if (total_error <= abs_tol)
        {
            auto copy = heap;
            double exact = 0.0;
            while (!copy.empty())
            {
                exact += copy.top().error;
                copy.pop();
            }
            total_error = exact;
        }
    }

    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty())
    {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(), [](const Segment &l, const Segment &r) { return l.a < r.a; });

    double value = 0.0;
    double compensation = 0.0;
    double error = 0.0;
    for (const auto &s : segments)
    {
        // Neumaier summation
        const double t = value + s.value;
        if (std::abs(value) >= std::abs(s.value))
            compensation += (value - t) + s.value;
        else
            compensation += (s.value - t) + value;
        value = t;
        error += s.error;
    }
    value += compensation;

    const bool converged = std::isfinite(value) && error <= abs_tol;
    return {value, error, evaluations, converged};
}

QuadratureResult integrate_sqrt_endpoint(const Integrand &f, double a, double b, SingularEnd end, double abs_tol,
                                         std::size_t max_evaluations)
{
    if (!(a <= b))
        throw std::domain_error("integrate_sqrt_endpoint: require a <= b");
    const double pole = end == SingularEnd::lower ? a : b;
    return integrate_near_sqrt_pole([&f](double x, double) { return f(x); }, a, b, pole, abs_tol,
                                    max_evaluations);
}

QuadratureResult integrate_near_sqrt_pole(const PoleIntegrand &f, double a, double b, double pole, double abs_tol,
                                          std::size_t max_evaluations)
{
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("integrate_near_sqrt_pole: require finite a <= b");
    if (a == b)
        return {0.0, 0.0, 0, true};

    if (pole >= b)
    {
        // x = pole - u^2, dx = -2u du
        const double u_lo = std::sqrt(pole - b);
        const double u_hi = std::sqrt(pole - a);
        return integrate(
            [&f, pole](double u) {
                const double gap = u * u;
                return 2.0 * u * f(pole - gap, gap);
            },
            u_lo, u_hi, abs_tol, max_evaluations);
    }
    if (pole <= a)
    {
        // x = pole + u^2
        const double u_lo = std::sqrt(a - pole);
        const double u_hi = std::sqrt(b - pole);
        return integrate(
            [&f, pole](double u) {
                const double gap = u * u;
                return 2.0 * u * f(pole + gap, gap);
            },
            u_lo, u_hi, abs_tol, max_evaluations);
    }
    throw std::domain_error("integrate_near_sqrt_pole: pole lies strictly inside (a, b)");
}

const QuadratureResult &require_converged(const QuadratureResult &r, const std::string &what)
{
    if (!r.converged)
        throw QuadratureError(what + ": quadrature did not converge (error estimate " +
                                  std::to_string(r.abs_error_estimate) + ")",
                              r);
    return r;
}

} // namespace pasec
