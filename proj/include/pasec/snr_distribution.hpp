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

#include <cstdint>
#include <functional>
#include <limits>

namespace pasec
{

/// Law of the received SNR when the receiver's lateral offset y is uniform
/// on [-D_y/2, D_y/2] and gamma = eta * avg_snr / (y^2 + h^2).
///
/// Support is [eta*avg/(h^2 + D_y^2/4), eta*avg/h^2]. The density has an
/// integrable inverse-square-root blow-up at the upper end; pdf() returns
/// +infinity there. Expectations go through the offset variable instead.
class SnrDistribution
{
  public:
    SnrDistribution(double eta, double avg_snr_linear, double height_m, double rect_y_m);

    static SnrDistribution for_node(const NodeGeometry &node, const SystemConfig &config);

    double eta() const { return eta_; }
    double avg_snr_linear() const { return avg_snr_; }
    double height_m() const { return height_; }
    double rect_y_m() const { return rect_y_; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

    /// eta * avg_snr, the numerator of the offset-to-SNR map.
    double scale() const { return scale_; }

    static constexpr double infinite_density = std::numeric_limits<double>::infinity();

    double pdf(double gamma) const;

    /// pdf(support_hi - gap) computed from the gap directly, for use with
    /// integrate_near_sqrt_pole about support_hi. Requires 0 < gap <= width.
    double pdf_from_gap(double gap) const;

    double cdf(double gamma) const;
    double quantile(double p) const;

    /// gamma(y) = scale / (y^2 + h^2); |y| must not exceed D_y/2.
    double snr_at_offset(double y) const;

    /// Inverse of snr_at_offset on y >= 0; gamma must lie in the support.
    double offset_for_snr(double gamma) const;

    /// Draws one SNR: y ~ U[-D_y/2, D_y/2], then snr_at_offset(y).
    template <typename Rng>
    double sample(Rng &rng) const
    {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double y = (u - 0.5) * rect_y_;
        return scale_ / (y * y + height_ * height_);
    }

    /// E[g(gamma)] = (2/D_y) * int_0^{D_y/2} g(gamma(y)) dy. Throws
    /// QuadratureError when the requested tolerance is not met.
    double expect(const std::function<double(double)> &g, double tol = default_inner_tolerance) const;
    QuadratureResult expect_result(const std::function<double(double)> &g,
                                   double tol = default_inner_tolerance) const;

  private:
    double eta_;
    double avg_snr_;
    double height_;
    double rect_y_;
    double scale_;
    double support_lo_;
    double support_hi_;
};

} // namespace pasec
