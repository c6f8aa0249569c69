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

// Data-parallel inner loops of the Monte-Carlo estimators. Each kernel has a
// scalar reference and, where the CPU supports it, an AVX2+FMA variant picked
// at runtime. Setting PASEC_SIMD=scalar in the environment forces the
// reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace pasec::simd
{

enum class Isa
{
    scalar,
    avx2
};

std::string_view isa_name(Isa isa);

/// True when the kernels for `isa` are compiled in and the CPU can run them.
bool isa_available(Isa isa);

/// Widest available ISA, unless overridden by PASEC_SIMD.
Isa active_isa();

struct MomentSums
{
    double sum = 0.0;
    double sum_squares = 0.0;
};

/// out[i] = scale / (y[i]^2 + h2), with the denominator formed by one fma.
void snr_from_offsets(std::span<const double> y, std::span<double> out, double scale, double h2,
                      Isa isa = active_isa());

/// Sum and sum of squares of max(0, ln(1 + gm[i]) - ln(1 + ge[i])), in nats.
MomentSums positive_log_ratio(std::span<const double> gm, std::span<const double> ge, Isa isa = active_isa());

/// Number of i with gm[i] > ge[i].
std::size_t count_greater(std::span<const double> gm, std::span<const double> ge, Isa isa = active_isa());

/// Number of i with 1 + gm[i] < psi * (1 + ge[i]), i.e. secrecy capacity below log(psi).
std::size_t count_outage(std::span<const double> gm, std::span<const double> ge, double psi,
                         Isa isa = active_isa());

namespace detail
{
// Per-ISA entry points. Spans are pre-validated to equal length.
void snr_from_offsets_scalar(const double *y, double *out, std::size_t n, double scale, double h2);
MomentSums positive_log_ratio_scalar(const double *gm, const double *ge, std::size_t n);
std::size_t count_greater_scalar(const double *gm, const double *ge, std::size_t n);
std::size_t count_outage_scalar(const double *gm, const double *ge, std::size_t n, double psi);

void snr_from_offsets_avx2(const double *y, double *out, std::size_t n, double scale, double h2);
MomentSums positive_log_ratio_avx2(const double *gm, const double *ge, std::size_t n);
std::size_t count_greater_avx2(const double *gm, const double *ge, std::size_t n);
std::size_t count_outage_avx2(const double *gm, const double *ge, std::size_t n, double psi);
} // namespace detail

} // namespace pasec::simd
