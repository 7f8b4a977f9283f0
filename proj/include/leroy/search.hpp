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

#ifndef LEROY_SEARCH_HPP
#define LEROY_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "leroy/corpus_index.hpp"
#include "leroy/pattern.hpp"
#include "leroy/prune.hpp"

namespace leroy {

/// One place a pattern occurs. `bindings[k]` is what hole `#k` matched; for
/// patterns with an open tail, `tail_rest` is the part of the spine that
/// stays at the call site.
struct MatchSite {
  int program = 0;
  std::vector<int> path;
  std::vector<SExpr> bindings;
  std::optional<SExpr> tail_rest;
  int node = -1;  // id in the index the site was found with

  friend bool operator==(const MatchSite &, const MatchSite &) = default;
};

struct SearchConfig {
  int min_body_size = 20;
  int max_arity = 4;
  bool exhaustive = false;  // disable bound pruning (oracle mode)
  std::set<std::string> excluded;  // serialized patterns to skip
  std::ostream *frontier = nullptr;  // "<utility>\t<pattern>" per candidate
};

struct Candidate {
  Pattern pattern;
  std::vector<MatchSite> sites;
  std::int64_t utility = 0;
};

struct SearchOutcome {
  std::optional<Candidate> best;
  PruneStats pruned;
  std::int64_t expanded = 0;  // partial patterns visited
  std::int64_t completed = 0;  // complete patterns scored
};

/// Structural matching at one node. Fills `bindings` with node ids per hole
/// and `rest` with the node bound to `#rest` (or -1).
bool match_at(const CorpusIndex &index, const SExpr &pat, int node,
              std::vector<int> &bindings, int &rest);

/// Greedy leftmost-outermost selection among matches given as
/// (root id, id of the node bound to #rest or -1), sorted by root id.
std::vector<std::size_t> select_non_overlapping(const CorpusIndex &index,
                                                const std::vector<int> &roots,
                                                const std::vector<int> &rests);

std::vector<MatchSite> find_matches(const Pattern &pat, const CorpusIndex &index);
std::vector<MatchSite> find_matches(const Pattern &pat, const std::vector<SExpr> &corpus);

/// The function a pattern becomes before closing: parameters `_param0..`,
/// the body statements (or `return <expr>` for expression patterns).
Stmt definition_of(const Pattern &pat, const std::string &name);

/// The call (or call statement, for statement patterns) replacing a site.
Expr call_of(const std::string &name, const std::vector<SExpr> &args);

/// Net AST nodes saved by rewriting every site and adding the definition.
std::int64_t utility(const Pattern &pat, const std::vector<MatchSite> &sites);

/// Best pattern by (utility, then smallest serialized form). Only patterns
/// that pass every prune check and occur at two or more non-overlapping
/// sites are candidates; none is returned unless utility > 0.
SearchOutcome search_best(const CorpusIndex &index, const SearchConfig &cfg);
std::optional<Candidate> search_best(const std::vector<SExpr> &corpus, const SearchConfig &cfg);

}  // namespace leroy

#endif  // LEROY_SEARCH_HPP
