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

#ifndef LEROY_LEARN_HPP
#define LEROY_LEARN_HPP

#include <ostream>
#include <vector>

#include "leroy/rewrite.hpp"

namespace leroy {

struct LearnOptions {
  SearchConfig search;
  int threads = 1;
  std::size_t max_rounds = 10000;
  std::ostream *log = nullptr;  // one line per round
};

struct LearnResult {
  std::vector<ClosedAbstraction> library;
  std::vector<Program> rewritten;  // without the library definitions
  CompressionReport report;
};

/// Repeats search, prune, close, validate and rewrite until no candidate
/// with positive utility is left. Learned names continue after the highest
/// `_leroy_fnN` already present in the corpus.
LearnResult learn_library(const std::vector<Program> &corpus, const LearnOptions &opts);

}  // namespace leroy

#endif  // LEROY_LEARN_HPP
