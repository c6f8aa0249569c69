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

#include <complex>

namespace pasec
{

inline constexpr double speed_of_light_mps = 299792458.0;

/// Converts a power ratio in dB to linear scale.
double db_to_linear(double db);
double linear_to_db(double linear);

/// Physical constants shared by both receivers.
struct SystemConfig
{
    double carrier_frequency_hz = 28.0e9;
    double antenna_height_m = 2.0;
    double effective_refractive_index = 1.4;
    double noise_power_dbm = -90.0;
    double transmit_power_dbm = 0.0;

    /// Throws std::domain_error when a field is out of range.
    void validate() const;

    /// Transmit SNR P_t / sigma^2 in dB. Convenience for building NodeGeometry
    /// from powers instead of a free per-node SNR.
    double transmit_snr_db() const { return transmit_power_dbm - noise_power_dbm; }
};

struct Position3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance(const Position3D &a, const Position3D &b);

/// Receiver placement region and its average SNR.
///
/// The receiver is uniform over [0, rect_x_m] x [-rect_y_m/2, rect_y_m/2].
/// Only rect_y_m enters the SNR law; rect_x_m is kept for the x-sampling
/// diagnostic.
struct NodeGeometry
{
    double rect_x_m = 10.0;
    double rect_y_m = 10.0;
    double avg_snr_db = 0.0;

    void validate() const;
    double avg_snr_linear() const { return db_to_linear(avg_snr_db); }

    static NodeGeometry from_powers(double rect_x_m, double rect_y_m, const SystemConfig &config);
};

/// Free-space wavelength c / f_o in meters.
double wavelength(const SystemConfig &config);

/// Wavelength inside the waveguide, lambda / n_eff.
double guided_wavelength(const SystemConfig &config);

/// Free-space path loss at 1 m, lambda^2 / (16 pi^2).
double reference_pathloss(const SystemConfig &config);

/// Line-of-sight channel between the pinching antenna and a receiver.
/// Throws std::domain_error if the two points coincide.
std::complex<double> channel_coefficient(const Position3D &user, const Position3D &antenna,
                                         const SystemConfig &config);

/// Unit-modulus phase accumulated along the waveguide from the feed point.
/// Both points must lie on the waveguide line y = 0, z = h.
std::complex<double> waveguide_phase(const Position3D &antenna, const Position3D &feed,
                                     const SystemConfig &config);

/// Linear SNR of a receiver at lateral offset y from an x-aligned antenna:
/// eta * avg_snr / (y^2 + h^2). Requires |y| <= rect_y_m / 2.
double snr_from_offset(double y_offset, const NodeGeometry &node, const SystemConfig &config);

} // namespace pasec
