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

#include "pasec/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pasec
{
namespace
{

struct ChunkStats
{
    std::size_t count = 0;
    double sum = 0.0;
    double sum_squares = 0.0;
};

struct NodeSampler
{
    double scale;
    double h2;
    double rect_y;
};

NodeSampler sampler_for(const SnrDistribution &law)
{
    return {law.scale(), law.height_m() * law.height_m(), law.rect_y_m()};
}

inline double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Runs `kernel(gm, ge) -> ChunkStats` over all chunks and reduces in chunk order.
template <typename Kernel>
ChunkStats run_chunks(const WiretapScenario &s, std::size_t n, std::uint64_t seed, const McOptions &opts,
                      Kernel &&kernel)
{
    if (n < min_mc_samples)
        throw std::invalid_argument("Monte-Carlo estimators need at least 1000 samples");
    s.validate();
    const NodeSampler m = sampler_for(s.main_law());
    const NodeSampler e = sampler_for(s.eve_law());
    const simd::Isa isa = opts.isa;

    const std::size_t n_chunks = (n + mc_chunk_size - 1) / mc_chunk_size;
    std::vector<ChunkStats> partial(n_chunks);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        std::vector<double> y(mc_chunk_size);
        std::vector<double> gm(mc_chunk_size);
        std::vector<double> ge(mc_chunk_size);
        for (std::size_t c = next++; c < n_chunks; c = next++)
        {
            const std::size_t len = std::min(mc_chunk_size, n - c * mc_chunk_size);
            auto rng = substream(seed, c);
            const std::span<double> ys(y.data(), len);
            const std::span<double> gms(gm.data(), len);
            const std::span<double> ges(ge.data(), len);

            for (auto &v : ys)
                v = (uniform01(rng) - 0.5) * m.rect_y;
            simd::snr_from_offsets(ys, gms, m.scale, m.h2, isa);
            if (opts.paired_draws)
            {
                // Same relative position inside eve's rectangle.
                const double stretch = e.rect_y / m.rect_y;
                for (auto &v : ys)
                    v *= stretch;
            }
            else
            {
                for (auto &v : ys)
                    v = (uniform01(rng) - 0.5) * e.rect_y;
            }
            simd::snr_from_offsets(ys, ges, e.scale, e.h2, isa);
            partial[c] = kernel(std::span<const double>(gms), std::span<const double>(ges));
            partial[c].count = len;
        }
    };

    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
    if (threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    ChunkStats total;
    for (const auto &p : partial)
    {
        total.count += p.count;
        total.sum += p.sum;
        total.sum_squares += p.sum_squares;
    }
    return total;
}

McEstimate proportion(const ChunkStats &t, std::uint64_t seed)
{
    const double n = static_cast<double>(t.count);
    const double p = t.sum / n;
    return {p, std::sqrt(std::max(p * (1.0 - p), 0.0) / n), t.count, seed};
}

} // namespace

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream_index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_index), static_cast<std::uint32_t>(stream_index >> 32)};
    return std::mt19937_64(seq);
}

McEstimate estimate_asc(const WiretapScenario &s, std::size_t n, std::uint64_t seed, const McOptions &opts)
{
    const auto t = run_chunks(s, n, seed, opts, [&](std::span<const double> gm, std::span<const double> ge) {
        const auto sums = simd::positive_log_ratio(gm, ge, opts.isa);
        return ChunkStats{0, sums.sum, sums.sum_squares};
    });
    const double count = static_cast<double>(t.count);
    const double ln2 = std::numbers::ln2;
    const double mean = t.sum / count;
    const double var = std::max((t.sum_squares - count * mean * mean) / (count - 1.0), 0.0);
    return {mean / ln2, std::sqrt(var / count) / ln2, t.count, seed};
}

McEstimate estimate_spsc(const WiretapScenario &s, std::size_t n, std::uint64_t seed, const McOptions &opts)
{
    const auto t = run_chunks(s, n, seed, opts, [&](std::span<const double> gm, std::span<const double> ge) {
        return ChunkStats{0, static_cast<double>(simd::count_greater(gm, ge, opts.isa)), 0.0};
    });
    return proportion(t, seed);
}

McEstimate estimate_sop(const WiretapScenario &s, const SecrecyRate &rate, std::size_t n, std::uint64_t seed,
                        const McOptions &opts)
{
    const double psi = rate.psi();
    const auto t = run_chunks(s, n, seed, opts, [&](std::span<const double> gm, std::span<const double> ge) {
        return ChunkStats{0, static_cast<double>(simd::count_outage(gm, ge, psi, opts.isa)), 0.0};
    });
    return proportion(t, seed);
}

ChannelCheck verify_channel_equivalence(const NodeGeometry &node, const SystemConfig &config, std::size_t n,
                                        std::uint64_t seed)
{
    config.validate();
    node.validate();
    auto rng = substream(seed, 0);
    const double h = config.antenna_height_m;
    const Position3D feed{0.0, 0.0, h};
    ChannelCheck check{0.0, 0.0, n};
    for (std::size_t i = 0; i < n; ++i)
    {
        const double x = uniform01(rng) * node.rect_x_m;
        const double y = (uniform01(rng) - 0.5) * node.rect_y_m;
        const Position3D antenna{x, 0.0, h};
        const auto hp = waveguide_phase(antenna, feed, config);
        const auto hi = channel_coefficient({x, y, 0.0}, antenna, config);
        const double model = std::norm(hi * hp) * node.avg_snr_linear();
        const double reference = snr_from_offset(y, node, config);
        check.max_relative_deviation = std::max(check.max_relative_deviation, std::abs(model / reference - 1.0));
        check.max_phase_modulus_deviation = std::max(check.max_phase_modulus_deviation, std::abs(std::abs(hp) - 1.0));
    }
    return check;
}

} // namespace pasec
