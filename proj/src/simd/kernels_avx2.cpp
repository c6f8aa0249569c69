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

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <cstdint>

namespace pasec::simd::detail
{
namespace
{

// Natural log for positive normal doubles, Cephes-style: x = m * 2^e with
// m in [sqrt(1/2), sqrt(2)), log(m) from a (5,5) rational approximation in m - 1.
inline __m256d log_pd(__m256d x)
{
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mantissa_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
    const __m256i half_exponent = _mm256_set1_epi64x(0x3FE0000000000000LL);

    // m in [0.5, 1), biased exponent as double via the 2^52 trick.
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mantissa_mask), half_exponent));
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256d two52 = _mm256_set1_pd(4503599627370496.0);
    __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(two52))), two52);
    e = _mm256_sub_pd(e, _mm256_set1_pd(1022.0));

    const __m256d small = _mm256_cmp_pd(m, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
    // m < sqrt(1/2): use 2m - 1 and e - 1, otherwise m - 1.
    const __m256d one = _mm256_set1_pd(1.0);
    m = _mm256_sub_pd(_mm256_add_pd(m, _mm256_and_pd(small, m)), one);
    e = _mm256_sub_pd(e, _mm256_and_pd(small, one));

    __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(7.70838733755885391666e0));

    __m256d q = _mm256_add_pd(m, _mm256_set1_pd(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(2.31251620126765340583e1));

    const __m256d z = _mm256_mul_pd(m, m);
    __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
    y = _mm256_fmadd_pd(e, _mm256_set1_pd(-2.121944400546905827679e-4), y);
    y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
    const __m256d r = _mm256_add_pd(m, y);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
}

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void snr_from_offsets_avx2(const double *y, double *out, std::size_t n, double scale, double h2)
{
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d vh = _mm256_set1_pd(h2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d v = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(out + i, _mm256_div_pd(vs, _mm256_fmadd_pd(v, v, vh)));
    }
    for (; i < n; ++i)
        out[i] = scale / std::fma(y[i], y[i], h2);
}

MomentSums positive_log_ratio_avx2(const double *gm, const double *ge, std::size_t n)
{
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d sum = _mm256_setzero_pd();
    __m256d sum2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d m = _mm256_loadu_pd(gm + i);
        const __m256d e = _mm256_loadu_pd(ge + i);
        const __m256d keep = _mm256_cmp_pd(m, e, _CMP_GT_OQ);
        const __m256d ratio = _mm256_div_pd(_mm256_add_pd(one, m), _mm256_add_pd(one, e));
        const __m256d c = _mm256_and_pd(keep, log_pd(ratio));
        sum = _mm256_add_pd(sum, c);
        sum2 = _mm256_fmadd_pd(c, c, sum2);
    }
    MomentSums s{hsum(sum), hsum(sum2)};
    for (; i < n; ++i)
    {
        if (!(gm[i] > ge[i]))
            continue;
        const double c = std::log1p(gm[i]) - std::log1p(ge[i]);
        s.sum += c;
        s.sum_squares += c * c;
    }
    return s;
}

std::size_t count_greater_avx2(const double *gm, const double *ge, std::size_t n)
{
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(gm + i), _mm256_loadu_pd(ge + i), _CMP_GT_OQ);
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(mask))));
    }
    for (; i < n; ++i)
        count += gm[i] > ge[i] ? 1 : 0;
    return count;
}

std::size_t count_outage_avx2(const double *gm, const double *ge, std::size_t n, double psi)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d vp = _mm256_set1_pd(psi);
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d lhs = _mm256_add_pd(one, _mm256_loadu_pd(gm + i));
        const __m256d rhs = _mm256_mul_pd(vp, _mm256_add_pd(one, _mm256_loadu_pd(ge + i)));
        const __m256d mask = _mm256_cmp_pd(lhs, rhs, _CMP_LT_OQ);
        count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(mask))));
    }
    for (; i < n; ++i)
        count += (1.0 + gm[i]) < psi * (1.0 + ge[i]) ? 1 : 0;
    return count;
}

} // namespace pasec::simd::detail
