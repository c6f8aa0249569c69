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

#include "pasec/snr_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pasec
{

SnrDistribution::SnrDistribution(double eta, double avg_snr_linear, double height_m, double rect_y_m)
    : eta_(eta), avg_snr_(avg_snr_linear), height_(height_m), rect_y_(rect_y_m)
{
    if (!(eta > 0.0) || !(avg_snr_linear > 0.0) || !(height_m > 0.0) || !(rect_y_m > 0.0) || !std::isfinite(eta) ||
        !std::isfinite(avg_snr_linear) || !std::isfinite(height_m) || !std::isfinite(rect_y_m))
        throw std::domain_error("SnrDistribution: parameters must be positive and finite");
    scale_ = eta_ * avg_snr_;
    const double h2 = height_ * height_;
    support_lo_ = scale_ / (h2 + 0.25 * rect_y_ * rect_y_);
    support_hi_ = scale_ / h2;
    if (!(support_lo_ > 0.0) || !(support_lo_ < support_hi_))
        throw std::domain_error("SnrDistribution: degenerate support");
}

SnrDistribution SnrDistribution::for_node(const NodeGeometry &node, const SystemConfig &config)
{
    config.validate();
    node.validate();
    return {reference_pathloss(config), node.avg_snr_linear(), config.antenna_height_m, node.rect_y_m};
}

double SnrDistribution::pdf(double gamma) const
{
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::domain_error("pdf: gamma must be positive and finite");
    if (gamma < support_lo_ || gamma > support_hi_)
        return 0.0;
    if (gamma == support_hi_)
        return infinite_density;
    const double root = std::sqrt(scale_ / gamma - height_ * height_);
    if (!(root > 0.0))
        return infinite_density;
    return scale_ / (rect_y_ * gamma * gamma * root);
}

double SnrDistribution::pdf_from_gap(double gap) const
{
    // scale/gamma - h^2 = h^2 * gap / gamma exactly, since scale = h^2 * support_hi.
    const double gamma = support_hi_ - gap;
    return scale_ / (rect_y_ * height_ * gamma * std::sqrt(gamma) * std::sqrt(gap));
}

double SnrDistribution::cdf(double gamma) const
{
    if (!(gamma > 0.0) || std::isnan(gamma))
        throw std::domain_error("cdf: gamma must be positive");
    if (gamma <= support_lo_)
        return 0.0;
    if (gamma >= support_hi_)
        return 1.0;
    // scale/gamma - h^2 = h^2 (hi - gamma) / gamma; the gap form avoids cancellation near hi
    const double arg = height_ * height_ * ((support_hi_ - gamma) / gamma);
    const double value = 1.0 - (2.0 / rect_y_) * std::sqrt(std::max(arg, 0.0));
    return std::clamp(value, 0.0, 1.0);
}

double SnrDistribution::quantile(double p) const
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("quantile: p must lie in [0, 1]");
    if (p == 0.0)
        return support_lo_;
    if (p == 1.0)
        return support_hi_;
    const double y = 0.5 * rect_y_ * (1.0 - p);
    return scale_ / (height_ * height_ + y * y);
}

double SnrDistribution::snr_at_offset(double y) const
{
    if (!(std::abs(y) <= 0.5 * rect_y_))
        throw std::domain_error("snr_at_offset: offset outside the rectangle");
    return scale_ / (y * y + height_ * height_);
}

double SnrDistribution::offset_for_snr(double gamma) const
{
    if (!(gamma >= support_lo_ && gamma <= support_hi_))
        throw std::domain_error("offset_for_snr: gamma outside the support");
    return std::min(std::sqrt(std::max(scale_ / gamma - height_ * height_, 0.0)), 0.5 * rect_y_);
}

QuadratureResult SnrDistribution::expect_result(const std::function<double(double)> &g, double tol) const
{
    if (!(tol > 0.0))
        throw std::domain_error("expect: tolerance must be positive");
    const double half = 0.5 * rect_y_;
    const double h2 = height_ * height_;
    const double s = scale_;
    auto r = integrate([&g, s, h2](double y) { return g(s / (y * y + h2)); }, 0.0, half, tol * half);
    r.value /= half;
    r.abs_error_estimate /= half;
    return r;
}

double SnrDistribution::expect(const std::function<double(double)> &g, double tol) const
{
    return require_converged(expect_result(g, tol), "expect").value;
}

} // namespace pasec
