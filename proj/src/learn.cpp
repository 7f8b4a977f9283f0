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

#include "leroy/learn.hpp"

#include <algorithm>

#include "leroy/parallel.hpp"

namespace leroy {
namespace {

int next_learned_index(const std::vector<Program> &corpus) {
  int next = 0;
  for (const Program &p : corpus)
    for (const Stmt &s : p.body) {
      std::set<std::string> names;
      names_of(s, names);
      for (const std::string &n : names) {
        if (!is_learned_name(n))
          continue;
        std::string digits = n.substr(9);
        if (digits.empty() || digits.size() > 9 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
          continue;
        next = std::max(next, std::stoi(digits) + 1);
      }
    }
  return next;
}

std::size_t total_size(const std::vector<Program> &programs) {
  std::size_t n = 0;
  for (const Program &p : programs)
    n += ast_size(p);
  return n;
}

}  // namespace

LearnResult learn_library(const std::vector<Program> &corpus, const LearnOptions &opts) {
  LearnResult res;
  std::vector<Program> programs = corpus;
  int next = next_learned_index(corpus);
  SearchConfig cfg = opts.search;

  for (std::size_t round = 0; round < opts.max_rounds; ++round) {
    std::vector<SExpr> lisp(programs.size());
    parallel_for(programs.size(), opts.threads,
                 [&](std::size_t i) { lisp[i] = lispify(programs[i]); });
    CorpusIndex index(lisp);
    SearchOutcome found = search_best(index, cfg);
    res.report.pruned += found.pruned;
    if (!found.best)
      break;
    Candidate cand = std::move(*found.best);
    std::string key = cand.pattern.str();
    std::string name = "_leroy_fn" + std::to_string(next);
    auto drop = [&](const std::string &why) {
      cfg.excluded.insert(key);
      res.report.dropped.push_back({key, why});
      if (opts.log)
        *opts.log << "round " << round << ": dropped " << key << ": " << why << '\n';
    };

    ClosedAbstraction closed;
    try {
      closed = close(cand, analyze_liveness(cand, lisp), name);
    } catch (const ClosureFailure &e) {
      drop(e.what());
      continue;
    }
    Candidate kept = cand;
    kept.sites.clear();
    std::size_t rejected = 0;
    for (const MatchSite &s : cand.sites) {
      if (validate_call_site(closed, s).accepted)
        kept.sites.push_back(s);
      else
        ++rejected;
    }
    res.report.rejected_call_sites += rejected;
    if (kept.sites.size() < 2) {
      drop("fewer than two call sites survive validation");
      continue;
    }
    if (rejected > 0) {
      // Only the surviving sites decide what must be returned.
      closed = close(kept, analyze_liveness(kept, lisp), name);
    }
    auto next_programs = apply(closed, kept.sites, closed.facts.live_out_per_site, lisp);
    // Utility ignores the unpacking a call site needs, so a rewrite can fail
    // to shrink the corpus; without this check such rounds can repeat forever.
    if (total_size(next_programs) >= total_size(programs)) {
      drop("rewritten corpus does not shrink");
      continue;
    }
    programs = std::move(next_programs);
    if (opts.log)
      *opts.log << "round " << round << ": " << name << " utility " << cand.utility << " at "
                << kept.sites.size() << " sites: " << key << '\n';
    AbstractionSummary sum;
    sum.name = name;
    sum.pattern = key;
    sum.body_nodes = sexpr_ast_size(cand.pattern.body);
    sum.params = closed.params;
    sum.plan = closed.plan;
    sum.sites = kept.sites.size();
    res.report.abstractions.push_back(std::move(sum));
    res.library.push_back(std::move(closed));
    ++next;
  }

  CompressionReport measured = measure(corpus, programs, res.library);
  measured.abstractions = std::move(res.report.abstractions);
  measured.pruned = res.report.pruned;
  measured.rejected_call_sites = res.report.rejected_call_sites;
  measured.dropped = std::move(res.report.dropped);
  res.report = std::move(measured);
  res.rewritten = std::move(programs);
  return res;
}

}  // namespace leroy
