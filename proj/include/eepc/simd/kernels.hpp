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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace eepc::simd {

// Complex vectors are stored split (real and imaginary planes) so that the
// inner loops map directly onto packed double lanes.
struct SplitView {
    const double *re = nullptr;
    const double *im = nullptr;
    std::size_t size = 0;
};

struct SplitMutView {
    double *re = nullptr;
    double *im = nullptr;
    std::size_t size = 0;
};

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

// One entry per compiled-in instruction set. All variants implement the same
// contract; only the floating-point reduction order differs.
struct KernelTable {
    Isa isa;

    // a^H g = sum_j conj(a_j) * g_j. Sizes must match.
    std::complex<double> (*inner_conj)(SplitView a, SplitView g);

    // sum_j |v_j|^2
    double (*norm_sq)(SplitView v);

    // v <- s * v
    void (*scale)(SplitMutView v, double s);
};

const KernelTable &scalar_kernels();
#if defined(EEPC_BUILD_AVX2)
const KernelTable &avx2_kernels();
#endif
#if defined(EEPC_BUILD_NEON)
const KernelTable &neon_kernels();
#endif

// ISAs that are both compiled in and supported by the running CPU.
std::vector<Isa> available_isas();

// Table for a specific ISA; throws std::invalid_argument if unavailable.
const KernelTable &kernels_for(Isa isa);

// The process-wide active table. Defaults to the widest available ISA, or to
// the value of the EEPC_ISA environment variable (scalar|avx2|neon|auto).
const KernelTable &active_kernels();

void select_isa(Isa isa);

// Parses "scalar", "avx2", "neon" or "auto" and selects accordingly.
void select_isa(std::string_view name);

} // namespace eepc::simd
