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

#include <cmath>

namespace pasec::simd::detail
{

void snr_from_offsets_scalar(const double *y, double *out, std::size_t n, double scale, double h2)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = scale / std::fma(y[i], y[i], h2);
}

MomentSums positive_log_ratio_scalar(const double *gm, const double *ge, std::size_t n)
{
    MomentSums s;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(gm[i] > ge[i]))
            continue;
        const double c = std::log1p(gm[i]) - std::log1p(ge[i]);
        s.sum += c;
        s.sum_squares += c * c;
    }
    return s;
}

std::size_t count_greater_scalar(const double *gm, const double *ge, std::size_t n)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        count += gm[i] > ge[i] ? 1 : 0;
    return count;
}

std::size_t count_outage_scalar(const double *gm, const double *ge, std::size_t n, double psi)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        count += (1.0 + gm[i]) < psi * (1.0 + ge[i]) ? 1 : 0;
    return count;
}

} // namespace pasec::simd::detail
