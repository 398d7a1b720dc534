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


#ifndef CONDHAM_TOOLS_DOCUMENT_H
#define CONDHAM_TOOLS_DOCUMENT_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "condham/hamiltonian.h"

namespace condham::cli {

/// Malformed input document or flag value; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A Hamiltonian as read from or written to JSON:
///
///     {"n": 2,
///      "r": [{"j": 0, "axis": "z", "value": 1.0}],
///      "J": [{"j": 0, "k": 1, "alpha": "x", "beta": "x", "value": 1.0}],
///      "metadata": {...}}
///
/// Absent coefficients are zero. Couplings need j < k, and each (j, axis) or
/// (j, k, alpha, beta) key may appear once.
struct HamiltonianDocument {
    PairHamiltonian hamiltonian{1};
    nlohmann::json metadata = nlohmann::json::object();
};

HamiltonianDocument parse_document(std::string_view text);
/// Nonzero coefficients only, in term order; stable for a given Hamiltonian.
std::string serialize_document(const HamiltonianDocument &doc);

/// 64-bit FNV-1a.
uint64_t fnv1a(std::string_view bytes);
std::string hex64(uint64_t value);

}  // namespace condham::cli

#endif
