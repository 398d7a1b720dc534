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

#ifndef CONDHAM_PARALLEL_H
#define CONDHAM_PARALLEL_H

#include <cstddef>
#include <functional>

namespace condham {

/// Worker count: SF_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
size_t thread_budget();

/// Calls body(i) for i in [0, count), split into contiguous chunks across at
/// most thread_budget() threads. Exceptions from workers are rethrown.
void parallel_for(size_t count, const std::function<void(size_t)> &body);

}  // namespace condham

#endif
