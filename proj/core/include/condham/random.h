// Copyright 2026 The condham Authors
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

#ifndef CONDHAM_RANDOM_H
#define CONDHAM_RANDOM_H

#include <cstdint>
#include <random>

namespace condham {

/// Top 53 bits of a raw 64-bit draw mapped to [0, 1). Unlike
/// std::uniform_real_distribution this is identical across standard libraries.
inline double unit_double(uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

/// Independent engine for one (seed, stream) pair, so per-item draws do not
/// depend on how items are split across threads.
inline std::mt19937_64 substream(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace condham

#endif
