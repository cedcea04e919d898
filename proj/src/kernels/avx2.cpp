// Copyright 2026 The gpcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "gpcap/kernels.hpp"

namespace gpcap::kernels::avx2 {
namespace {

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kSqrt2 = 1.41421356237309504880;

// Natural log of four positive normal doubles.
// x = m·2^e with m ∈ (√2/2, √2]; ln m = 2·atanh(s), s = (m−1)/(m+1), |s| < 0.1716.
// The odd atanh series is truncated after s^25, below 1 ulp for that range.
inline __m256d log_pd(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i mantissa = _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL));
    __m256d m = _mm256_castsi256_pd(_mm256_or_si256(mantissa, _mm256_set1_epi64x(0x3FF0000000000000LL)));

    // Biased exponent to double: OR into the mantissa of 2^52 and subtract.
    const __m256i biased = _mm256_srli_epi64(bits, 52);
    const __m256d two52 = _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_set1_epi64x(0x4330000000000000LL)));
    __m256d e = _mm256_sub_pd(two52, _mm256_set1_pd(4503599627370496.0 + 1023.0));

    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z = _mm256_mul_pd(s, s);

    __m256d poly = _mm256_set1_pd(1.0 / 25.0);
    for (int k = 11; k >= 0; --k) {
        poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / (2.0 * k + 1.0)));
    }
    const __m256d ln_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), ln_m));
}

// x·ln x with lanes x < DBL_MIN (zero, negative, subnormal) contributing 0.
inline __m256d xlogx_pd(__m256d x) {
    const __m256d valid = _mm256_cmp_pd(x, _mm256_set1_pd(std::numeric_limits<double>::min()), _CMP_GE_OQ);
    const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), x, valid);
    return _mm256_and_pd(valid, _mm256_mul_pd(safe, log_pd(safe)));
}

inline double horizontal_sum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuffled = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuffled));
}

}  // namespace

double xlogx_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, xlogx_pd(_mm256_loadu_pd(x.data() + i)));
    }
    double sum = horizontal_sum(acc);
    for (; i < n; ++i) {
        if (x[i] > 0.0) sum += x[i] * std::log(x[i]);
    }
    return sum;
}

void bloch_entropy(const BlochMap& map, std::span<const double> nx, std::span<const double> ny,
                   std::span<const double> nz, std::span<double> out) {
    const auto& a = map.linear;
    const auto& t = map.offset;
    const std::size_t n = out.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(nx.data() + i);
        const __m256d y = _mm256_loadu_pd(ny.data() + i);
        const __m256d z = _mm256_loadu_pd(nz.data() + i);
        __m256d rx = _mm256_fmadd_pd(_mm256_set1_pd(a[0]), x, _mm256_set1_pd(t[0]));
        rx = _mm256_fmadd_pd(_mm256_set1_pd(a[1]), y, rx);
        rx = _mm256_fmadd_pd(_mm256_set1_pd(a[2]), z, rx);
        __m256d ry = _mm256_fmadd_pd(_mm256_set1_pd(a[3]), x, _mm256_set1_pd(t[1]));
        ry = _mm256_fmadd_pd(_mm256_set1_pd(a[4]), y, ry);
        ry = _mm256_fmadd_pd(_mm256_set1_pd(a[5]), z, ry);
        __m256d rz = _mm256_fmadd_pd(_mm256_set1_pd(a[6]), x, _mm256_set1_pd(t[2]));
        rz = _mm256_fmadd_pd(_mm256_set1_pd(a[7]), y, rz);
        rz = _mm256_fmadd_pd(_mm256_set1_pd(a[8]), z, rz);
        __m256d r2 = _mm256_mul_pd(rx, rx);
        r2 = _mm256_fmadd_pd(ry, ry, r2);
        r2 = _mm256_fmadd_pd(rz, rz, r2);
        const __m256d r = _mm256_min_pd(one, _mm256_sqrt_pd(r2));
        const __m256d up = _mm256_mul_pd(half, _mm256_add_pd(one, r));
        const __m256d down = _mm256_mul_pd(half, _mm256_sub_pd(one, r));
        const __m256d h = _mm256_add_pd(xlogx_pd(up), xlogx_pd(down));
        _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(_mm256_setzero_pd(), h));
    }
    if (i < n) {
        scalar::bloch_entropy(map, nx.subspan(i), ny.subspan(i), nz.subspan(i), out.subspan(i));
    }
}

ArgMin argmin(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 8) return scalar::argmin(values);

    const double inf = std::numeric_limits<double>::infinity();
    __m256d best = _mm256_set1_pd(inf);
    __m256i best_idx = _mm256_set1_epi64x(-1);
    __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256i step = _mm256_set1_epi64x(4);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(values.data() + i);
        // Strict < keeps the earliest index within each lane.
        const __m256d lt = _mm256_cmp_pd(v, best, _CMP_LT_OQ);
        best = _mm256_blendv_pd(best, v, lt);
        best_idx = _mm256_castpd_si256(
            _mm256_blendv_pd(_mm256_castsi256_pd(best_idx), _mm256_castsi256_pd(idx), lt));
        idx = _mm256_add_epi64(idx, step);
    }

    alignas(32) double lane_value[4];
    alignas(32) std::int64_t lane_index[4];
    _mm256_store_pd(lane_value, best);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_index), best_idx);

    ArgMin result{n, inf};
    for (int lane = 0; lane < 4; ++lane) {
        if (lane_index[lane] < 0) continue;
        const auto li = static_cast<std::size_t>(lane_index[lane]);
        if (lane_value[lane] < result.value || (lane_value[lane] == result.value && li < result.index)) {
            result = {li, lane_value[lane]};
        }
    }
    for (; i < n; ++i) {
        if (values[i] < result.value) result = {i, values[i]};
    }
    if (result.index == n) result.index = 0;
    return result;
}

}  // namespace gpcap::kernels::avx2
