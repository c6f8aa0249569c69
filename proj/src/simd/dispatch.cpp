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

#include "pasec/simd/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pasec::simd
{
namespace
{

void check_lengths(std::size_t a, std::size_t b)
{
    if (a != b)
        throw std::invalid_argument("simd kernel: span lengths differ");
}

Isa detect()
{
    if (const char *env = std::getenv("PASEC_SIMD"); env != nullptr && std::string(env) == "scalar")
        return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa)
    {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa)
{
    switch (isa)
    {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(PASEC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa()
{
    static const Isa isa = detect();
    return isa;
}

#if defined(PASEC_HAVE_AVX2_KERNELS)
#define PASEC_DISPATCH(isa, name, ...)                                                                                \
    ((isa) == Isa::avx2 ? detail::name##_avx2(__VA_ARGS__) : detail::name##_scalar(__VA_ARGS__))
#else
#define PASEC_DISPATCH(isa, name, ...) detail::name##_scalar(__VA_ARGS__)
#endif

namespace
{
Isa usable(Isa isa)
{
    if (!isa_available(isa))
        throw std::runtime_error("simd: requested ISA " + std::string(isa_name(isa)) + " is not available");
    return isa;
}
} // namespace

void snr_from_offsets(std::span<const double> y, std::span<double> out, double scale, double h2, Isa isa)
{
    check_lengths(y.size(), out.size());
    isa = usable(isa);
    PASEC_DISPATCH(isa, snr_from_offsets, y.data(), out.data(), y.size(), scale, h2);
}

MomentSums positive_log_ratio(std::span<const double> gm, std::span<const double> ge, Isa isa)
{
    check_lengths(gm.size(), ge.size());
    isa = usable(isa);
    return PASEC_DISPATCH(isa, positive_log_ratio, gm.data(), ge.data(), gm.size());
}

std::size_t count_greater(std::span<const double> gm, std::span<const double> ge, Isa isa)
{
    check_lengths(gm.size(), ge.size());
    isa = usable(isa);
    return PASEC_DISPATCH(isa, count_greater, gm.data(), ge.data(), gm.size());
}

std::size_t count_outage(std::span<const double> gm, std::span<const double> ge, double psi, Isa isa)
{
    check_lengths(gm.size(), ge.size());
    isa = usable(isa);
    return PASEC_DISPATCH(isa, count_outage, gm.data(), ge.data(), gm.size(), psi);
}

} // namespace pasec::simd
