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

#include "pasec/channel_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pasec
{

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void SystemConfig::validate() const
{
    if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz))
        throw std::domain_error("carrier frequency must be positive");
    if (!(antenna_height_m > 0.0) || !std::isfinite(antenna_height_m))
        throw std::domain_error("antenna height must be positive");
    if (!(effective_refractive_index >= 1.0) || !std::isfinite(effective_refractive_index))
        throw std::domain_error("effective refractive index must be >= 1");
    if (!std::isfinite(noise_power_dbm) || !std::isfinite(transmit_power_dbm))
        throw std::domain_error("powers must be finite");
}

double distance(const Position3D &a, const Position3D &b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

void NodeGeometry::validate() const
{
    if (!(rect_x_m > 0.0) || !std::isfinite(rect_x_m))
        throw std::domain_error("rect_x_m must be positive");
    if (!(rect_y_m > 0.0) || !std::isfinite(rect_y_m))
        throw std::domain_error("rect_y_m must be positive");
    if (!std::isfinite(avg_snr_db))
        throw std::domain_error("avg_snr_db must be a finite number");
}

NodeGeometry NodeGeometry::from_powers(double rect_x_m, double rect_y_m, const SystemConfig &config)
{
    NodeGeometry node{rect_x_m, rect_y_m, config.transmit_snr_db()};
    node.validate();
    return node;
}

double wavelength(const SystemConfig &config)
{
    if (!(config.carrier_frequency_hz > 0.0))
        throw std::domain_error("carrier frequency must be positive");
    return speed_of_light_mps / config.carrier_frequency_hz;
}

double guided_wavelength(const SystemConfig &config)
{
    config.validate();
    return wavelength(config) / config.effective_refractive_index;
}

double reference_pathloss(const SystemConfig &config)
{
    const double lambda = wavelength(config);
    return lambda * lambda / (16.0 * std::numbers::pi * std::numbers::pi);
}

std::complex<double> channel_coefficient(const Position3D &user, const Position3D &antenna,
                                         const SystemConfig &config)
{
    const double d = distance(user, antenna);
    if (!(d > 0.0))
        throw std::domain_error("receiver coincides with the antenna");
    const double magnitude = std::sqrt(reference_pathloss(config)) / d;
    return std::polar(magnitude, -2.0 * std::numbers::pi * d / wavelength(config));
}

std::complex<double> waveguide_phase(const Position3D &antenna, const Position3D &feed,
                                     const SystemConfig &config)
{
    const double h = config.antenna_height_m;
    auto on_line = [h](const Position3D &p) {
        return p.y == 0.0 && std::abs(p.z - h) <= 1e-12 * std::max(1.0, h);
    };
    if (!on_line(antenna) || !on_line(feed))
        throw std::domain_error("point is not on the waveguide (y = 0, z = h)");
    const double d = distance(antenna, feed);
    return std::polar(1.0, -2.0 * std::numbers::pi * d / guided_wavelength(config));
}

double snr_from_offset(double y_offset, const NodeGeometry &node, const SystemConfig &config)
{
    if (!std::isfinite(y_offset) || std::abs(y_offset) > 0.5 * node.rect_y_m)
        throw std::domain_error("offset " + std::to_string(y_offset) + " is outside the rectangle");
    const double h = config.antenna_height_m;
    return reference_pathloss(config) * node.avg_snr_linear() / (y_offset * y_offset + h * h);
}

} // namespace pasec
