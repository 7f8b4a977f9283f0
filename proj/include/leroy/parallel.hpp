// Copyright 2026 The Leroy Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEROY_PARALLEL_HPP
#define LEROY_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace leroy {

/// Worker count: LEROY_THREADS when set to a positive number, otherwise the
/// hardware concurrency.
int thread_count();

/// Runs body(0..n-1) on up to `threads` workers. If any calls throw, the
/// exception from the lowest index is rethrown after all work finishes.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &body);

}  // namespace leroy

#endif  // LEROY_PARALLEL_HPP
