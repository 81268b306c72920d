// Copyright 2026 The OGM Authors
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

#include "ogm/kernels.h"

#if defined(__x86_64__) || defined(_M_X64)
#define OGM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>

#include <bit>
#endif

namespace ogm::kernels {

#if OGM_HAVE_AVX2_KERNELS

namespace {

// Amplitudes b and b+1 (b even) are one __m256d: [re_b, im_b, re_b+1, im_b+1].
// Their partners b^x and (b+1)^x are the same pair, swapped when x is odd.

#define OGM_AVX2 __attribute__((target("avx2,fma")))

OGM_AVX2 inline __m256d load_pair(const Amplitude *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

OGM_AVX2 inline __m256d pair_signs(std::uint64_t b, std::uint64_t z) {
    double s0 = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
    double s1 = (z & 1) ? -s0 : s0;
    return _mm256_set_pd(s1, s1, s0, s0);
}

OGM_AVX2 double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

OGM_AVX2 Amplitude overlap_avx2(std::span<const Amplitude> amps, std::uint64_t x,
                                std::uint64_t z) {
    const Amplitude *data = amps.data();
    const std::uint64_t dim = amps.size();
    const bool swap = x & 1;
    const __m256d alt = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    for (std::uint64_t b = 0; b < dim; b += 2) {
        __m256d c = load_pair(data + b);
        __m256d a = load_pair(data + ((b ^ x) & ~std::uint64_t{1}));
        if (swap) {
            a = _mm256_permute2f128_pd(a, a, 0x01);
        }
        __m256d sa = _mm256_mul_pd(a, pair_signs(b, z));
        // re: ar*cr + ai*ci ; im: ar*ci - ai*cr
        acc_re = _mm256_fmadd_pd(sa, c, acc_re);
        __m256d c_sw = _mm256_permute_pd(c, 0b0101);
        acc_im = _mm256_fmadd_pd(_mm256_mul_pd(sa, alt), c_sw, acc_im);
    }
    return {hsum(acc_re), hsum(acc_im)};
}

OGM_AVX2 void accumulate_avx2(std::span<Amplitude> out, std::span<const Amplitude> in,
                              std::uint64_t x, std::uint64_t z, Amplitude factor) {
    const Amplitude *src = in.data();
    double *dst = reinterpret_cast<double *>(out.data());
    const std::uint64_t dim = in.size();
    const bool swap = x & 1;
    const __m256d fr = _mm256_set1_pd(factor.real());
    const __m256d fi = _mm256_set_pd(factor.imag(), -factor.imag(), factor.imag(), -factor.imag());
    for (std::uint64_t b = 0; b < dim; b += 2) {
        __m256d v = load_pair(src + b);
        __m256d v_sw = _mm256_permute_pd(v, 0b0101);
        __m256d prod = _mm256_fmadd_pd(v, fr, _mm256_mul_pd(v_sw, fi));
        prod = _mm256_mul_pd(prod, pair_signs(b, z));
        if (swap) {
            prod = _mm256_permute2f128_pd(prod, prod, 0x01);
        }
        double *target = dst + 2 * ((b ^ x) & ~std::uint64_t{1});
        _mm256_storeu_pd(target, _mm256_add_pd(_mm256_loadu_pd(target), prod));
    }
}

OGM_AVX2 void probabilities_avx2(std::span<const Amplitude> amps, std::span<double> out) {
    const Amplitude *src = amps.data();
    double *dst = out.data();
    const std::uint64_t dim = amps.size();
    for (std::uint64_t b = 0; b < dim; b += 2) {
        __m256d v = load_pair(src + b);
        __m256d sq = _mm256_mul_pd(v, v);
        __m256d h = _mm256_hadd_pd(sq, sq);
        __m256d packed = _mm256_permute4x64_pd(h, 0b1000);
        _mm_storeu_pd(dst + b, _mm256_castpd256_pd128(packed));
    }
}

#undef OGM_AVX2

}  // namespace

const KernelTable *avx2_kernels() {
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    static const KernelTable table{"avx2", overlap_avx2, accumulate_avx2, probabilities_avx2};
    return supported ? &table : nullptr;
}

#else

const KernelTable *avx2_kernels() {
    return nullptr;
}

#endif

}  // namespace ogm::kernels
