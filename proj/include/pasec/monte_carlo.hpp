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

#include "pasec/secrecy_metrics.hpp"
#include "pasec/simd/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace pasec
{

struct McEstimate
{
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

struct McOptions
{
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Draw eve's offset equal to main's (diagnostic for C_s(g, g) = 0).
    bool paired_draws = false;
    simd::Isa isa = simd::active_isa();
};

inline constexpr std::size_t min_mc_samples = 1000;
inline constexpr std::size_t default_mc_samples = 1'000'000;

/// Samples are drawn in fixed chunks of this size, each from its own
/// generator seeded with (seed, chunk index). Results do not depend on the
/// thread count.
inline constexpr std::size_t mc_chunk_size = std::size_t{1} << 16;

/// Generator for one chunk of the sample stream.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream_index);

McEstimate estimate_asc(const WiretapScenario &s, std::size_t n, std::uint64_t seed, const McOptions &opts = {});
McEstimate estimate_spsc(const WiretapScenario &s, std::size_t n, std::uint64_t seed, const McOptions &opts = {});
McEstimate estimate_sop(const WiretapScenario &s, const SecrecyRate &rate, std::size_t n, std::uint64_t seed,
                        const McOptions &opts = {});

struct ChannelCheck
{
    double max_relative_deviation = 0.0;
    double max_phase_modulus_deviation = 0.0;
    std::size_t n_samples = 0;
};

/// Diagnostic x-and-y sampling: places the antenna at the receiver's x,
/// builds |h_i h_p|^2 * avg_snr from the complex channel model and compares
/// it with snr_from_offset.
ChannelCheck verify_channel_equivalence(const NodeGeometry &node, const SystemConfig &config, std::size_t n,
                                        std::uint64_t seed);

} // namespace pasec
