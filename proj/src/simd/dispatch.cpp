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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace eepc::simd {
namespace {

bool cpu_has_avx2()
{
#if defined(EEPC_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &widest_available()
{
    const auto isas = available_isas();
    return kernels_for(isas.back());
}

const KernelTable *initial_table()
{
    if (const char *env = std::getenv("EEPC_ISA"); env != nullptr && *env != '\0') {
        std::string_view name(env);
        if (name == "auto")
            return &widest_available();
        if (name == "scalar")
            return &kernels_for(Isa::scalar);
        if (name == "avx2")
            return &kernels_for(Isa::avx2);
        if (name == "neon")
            return &kernels_for(Isa::neon);
        throw std::invalid_argument("EEPC_ISA: unknown instruction set '" + std::string(name) + "'");
    }
    return &widest_available();
}

std::atomic<const KernelTable *> &active_slot()
{
    static std::atomic<const KernelTable *> slot{initial_table()};
    return slot;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out{Isa::scalar};
    if (cpu_has_avx2())
        out.push_back(Isa::avx2);
#if defined(EEPC_BUILD_NEON)
    out.push_back(Isa::neon);
#endif
    return out;
}

const KernelTable &kernels_for(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return scalar_kernels();
    case Isa::avx2:
#if defined(EEPC_BUILD_AVX2)
        if (cpu_has_avx2())
            return avx2_kernels();
#endif
        break;
    case Isa::neon:
#if defined(EEPC_BUILD_NEON)
        return neon_kernels();
#endif
        break;
    }
    throw std::invalid_argument("instruction set '" + std::string(isa_name(isa)) +
                                "' is not available on this build/CPU");
}

const KernelTable &active_kernels()
{
    return *active_slot().load(std::memory_order_acquire);
}

void select_isa(Isa isa)
{
    active_slot().store(&kernels_for(isa), std::memory_order_release);
}

void select_isa(std::string_view name)
{
    if (name == "auto")
        active_slot().store(&widest_available(), std::memory_order_release);
    else if (name == "scalar")
        select_isa(Isa::scalar);
    else if (name == "avx2")
        select_isa(Isa::avx2);
    else if (name == "neon")
        select_isa(Isa::neon);
    else
        throw std::invalid_argument("unknown instruction set '" + std::string(name) + "'");
}

} // namespace eepc::simd
