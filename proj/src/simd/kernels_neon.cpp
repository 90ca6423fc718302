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

// AArch64 only; Advanced SIMD is part of the base ISA there.

#include "eepc/simd/kernels.hpp"

#include <arm_neon.h>

namespace eepc::simd {
namespace {

std::complex<double> inner_conj_neon(SplitView a, SplitView g)
{
    float64x2_t acc_re = vdupq_n_f64(0.0), acc_im = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= a.size; j += 2) {
        float64x2_t ar = vld1q_f64(a.re + j), ai = vld1q_f64(a.im + j);
        float64x2_t gr = vld1q_f64(g.re + j), gi = vld1q_f64(g.im + j);
        acc_re = vfmaq_f64(acc_re, ar, gr);
        acc_re = vfmaq_f64(acc_re, ai, gi);
        acc_im = vfmaq_f64(acc_im, ar, gi);
        acc_im = vfmsq_f64(acc_im, ai, gr);
    }
    double re = vaddvq_f64(acc_re);
    double im = vaddvq_f64(acc_im);
    for (; j < a.size; ++j) {
        re += a.re[j] * g.re[j] + a.im[j] * g.im[j];
        im += a.re[j] * g.im[j] - a.im[j] * g.re[j];
    }
    return {re, im};
}

double norm_sq_neon(SplitView v)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= v.size; j += 2) {
        float64x2_t r = vld1q_f64(v.re + j), i = vld1q_f64(v.im + j);
        acc = vfmaq_f64(acc, r, r);
        acc = vfmaq_f64(acc, i, i);
    }
    double out = vaddvq_f64(acc);
    for (; j < v.size; ++j)
        out += v.re[j] * v.re[j] + v.im[j] * v.im[j];
    return out;
}

void scale_neon(SplitMutView v, double s)
{
    std::size_t j = 0;
    for (; j + 2 <= v.size; j += 2) {
        vst1q_f64(v.re + j, vmulq_n_f64(vld1q_f64(v.re + j), s));
        vst1q_f64(v.im + j, vmulq_n_f64(vld1q_f64(v.im + j), s));
    }
    for (; j < v.size; ++j) {
        v.re[j] *= s;
        v.im[j] *= s;
    }
}

} // namespace

const KernelTable &neon_kernels()
{
    static const KernelTable table{Isa::neon, &inner_conj_neon, &norm_sq_neon, &scale_neon};
    return table;
}

} // namespace eepc::simd
