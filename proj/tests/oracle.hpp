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

// Test-only reference implementations: an exhaustive pattern enumerator that
// shares no code with the branch-and-bound search beyond the prune checks and
// the utility function, and a generator for small random corpora.

#ifndef LEROY_TESTS_ORACLE_HPP
#define LEROY_TESTS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leroy/ast.hpp"
#include "leroy/sexpr.hpp"

namespace leroy::testing {

struct OracleResult {
  std::optional<std::int64_t> best_utility;
  std::string best_pattern;
  std::size_t patterns = 0;
};

/// Enumerates every generalization of every eligible subtree, scores each
/// against the whole corpus with a naive matcher, and keeps the best.
OracleResult exhaustive_best(const std::vector<SExpr> &corpus, int min_size, int max_arity);

/// Naive leftmost-outermost matching of `pat` over `corpus`; returns the
/// number of non-overlapping sites.
std::size_t naive_site_count(const SExpr &pat, const std::vector<SExpr> &corpus);

/// Random programs over a tiny vocabulary so that repeats are common.
std::vector<Program> random_corpus(std::mt19937 &rng, std::size_t max_nodes);

}  // namespace leroy::testing

#endif  // LEROY_TESTS_ORACLE_HPP
