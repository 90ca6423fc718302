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

#include <cstdint>
#include <random>

namespace eepc {

using Rng = std::mt19937_64;

// SplitMix64 finalizer; used to derive well-separated seeds.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index)
{
    return mix64(mix64(parent) ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL));
}

// Independent sub-streams of one drop. Keeping them separate means that
// changing the algorithm (or the noise level) never perturbs the geometry
// and channel draws of the same drop.
enum class Stream : std::uint64_t { topology = 1, fading = 2, channels = 3, algorithm = 4 };

inline Rng make_stream(std::uint64_t drop_seed, Stream s)
{
    return Rng(derive_seed(drop_seed, static_cast<std::uint64_t>(s)));
}

} // namespace eepc
