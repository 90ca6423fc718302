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

#include "eepc/simd/kernels.hpp"

namespace eepc::simd {
namespace {

std::complex<double> inner_conj_scalar(SplitView a, SplitView g)
{
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < a.size; ++j) {
        re += a.re[j] * g.re[j] + a.im[j] * g.im[j];
        im += a.re[j] * g.im[j] - a.im[j] * g.re[j];
    }
    return {re, im};
}

double norm_sq_scalar(SplitView v)
{
    double acc = 0.0;
    for (std::size_t j = 0; j < v.size; ++j)
        acc += v.re[j] * v.re[j] + v.im[j] * v.im[j];
    return acc;
}

void scale_scalar(SplitMutView v, double s)
{
    for (std::size_t j = 0; j < v.size; ++j) {
        v.re[j] *= s;
        v.im[j] *= s;
    }
}

} // namespace

const KernelTable &scalar_kernels()
{
    static const KernelTable table{Isa::scalar, &inner_conj_scalar, &norm_sq_scalar, &scale_scalar};
    return table;
}

} // namespace eepc::simd
