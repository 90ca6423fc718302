// eepc: energy-efficient uplink power control for two-tier cellular networks
// Copyright (C) 2026 The eepc Authors
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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a runtime CPU check.

#include "eepc/simd/kernels.hpp"

#include <immintrin.h>

namespace eepc::simd {
namespace {

inline double hsum(__m256d v)
{
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sw = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

std::complex<double> inner_conj_avx2(SplitView a, SplitView g)
{
    __m256d acc_re0 = _mm256_setzero_pd(), acc_im0 = _mm256_setzero_pd();
    __m256d acc_re1 = _mm256_setzero_pd(), acc_im1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= a.size; j += 8) {
        __m256d ar = _mm256_loadu_pd(a.re + j), ai = _mm256_loadu_pd(a.im + j);
        __m256d gr = _mm256_loadu_pd(g.re + j), gi = _mm256_loadu_pd(g.im + j);
        acc_re0 = _mm256_fmadd_pd(ar, gr, acc_re0);
        acc_re0 = _mm256_fmadd_pd(ai, gi, acc_re0);
        acc_im0 = _mm256_fmadd_pd(ar, gi, acc_im0);
        acc_im0 = _mm256_fnmadd_pd(ai, gr, acc_im0);

        ar = _mm256_loadu_pd(a.re + j + 4);
        ai = _mm256_loadu_pd(a.im + j + 4);
        gr = _mm256_loadu_pd(g.re + j + 4);
        gi = _mm256_loadu_pd(g.im + j + 4);
        acc_re1 = _mm256_fmadd_pd(ar, gr, acc_re1);
        acc_re1 = _mm256_fmadd_pd(ai, gi, acc_re1);
        acc_im1 = _mm256_fmadd_pd(ar, gi, acc_im1);
        acc_im1 = _mm256_fnmadd_pd(ai, gr, acc_im1);
    }
    for (; j + 4 <= a.size; j += 4) {
        __m256d ar = _mm256_loadu_pd(a.re + j), ai = _mm256_loadu_pd(a.im + j);
        __m256d gr = _mm256_loadu_pd(g.re + j), gi = _mm256_loadu_pd(g.im + j);
        acc_re0 = _mm256_fmadd_pd(ar, gr, acc_re0);
        acc_re0 = _mm256_fmadd_pd(ai, gi, acc_re0);
        acc_im0 = _mm256_fmadd_pd(ar, gi, acc_im0);
        acc_im0 = _mm256_fnmadd_pd(ai, gr, acc_im0);
    }
    double re = hsum(_mm256_add_pd(acc_re0, acc_re1));
    double im = hsum(_mm256_add_pd(acc_im0, acc_im1));
    for (; j < a.size; ++j) {
        re += a.re[j] * g.re[j] + a.im[j] * g.im[j];
        im += a.re[j] * g.im[j] - a.im[j] * g.re[j];
    }
    return {re, im};
}

double norm_sq_avx2(SplitView v)
{
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= v.size; j += 4) {
        __m256d r = _mm256_loadu_pd(v.re + j), i = _mm256_loadu_pd(v.im + j);
        acc0 = _mm256_fmadd_pd(r, r, acc0);
        acc1 = _mm256_fmadd_pd(i, i, acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < v.size; ++j)
        acc += v.re[j] * v.re[j] + v.im[j] * v.im[j];
    return acc;
}

void scale_avx2(SplitMutView v, double s)
{
    const __m256d f = _mm256_set1_pd(s);
    std::size_t j = 0;
    for (; j + 4 <= v.size; j += 4) {
        _mm256_storeu_pd(v.re + j, _mm256_mul_pd(f, _mm256_loadu_pd(v.re + j)));
        _mm256_storeu_pd(v.im + j, _mm256_mul_pd(f, _mm256_loadu_pd(v.im + j)));
    }
    for (; j < v.size; ++j) {
        v.re[j] *= s;
        v.im[j] *= s;
    }
}

} // namespace

const KernelTable &avx2_kernels()
{
    static const KernelTable table{Isa::avx2, &inner_conj_avx2, &norm_sq_avx2, &scale_avx2};
    return table;
}

} // namespace eepc::simd
