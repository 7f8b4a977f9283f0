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

#ifndef LEROY_REWRITE_HPP
#define LEROY_REWRITE_HPP

#include <set>
#include <string>
#include <vector>

#include "leroy/closing.hpp"

namespace leroy {

struct CallSiteCheck {
  MatchSite site;
  std::set<std::string> argument_names;  // identifiers in the hole bindings
  std::set<std::string> body_names;      // identifiers in the closed function
  bool accepted = true;
  std::string clash;   // offending identifier, when rejected for a clash
  std::string reason;  // human-readable rejection reason

  bool name_clash() const { return !clash.empty(); }
};

/// Rejects a site when an argument mentions any identifier of the closed
/// function, or when passing the arguments eagerly would evaluate something
/// the original code evaluated later, conditionally, or more than once.
CallSiteCheck validate_call_site(const ClosedAbstraction &a, const MatchSite &s);

/// Statements (or the expression) that replace one site.
std::vector<Stmt> call_statements(const ClosedAbstraction &a, const MatchSite &s,
                                  const std::vector<std::string> &needed);
Expr call_expression(const ClosedAbstraction &a, const MatchSite &s);

/// Rewrites the accepted sites. `needed[i]` lists the live-out names site i
/// must receive. Throws InternalError if a result does not survive
/// delispify, unparse and parse unchanged.
std::vector<Program> apply(const ClosedAbstraction &a, const std::vector<MatchSite> &sites,
                           const std::vector<std::vector<std::string>> &needed,
                           const std::vector<SExpr> &programs);

/// A rewritten program as emitted: the definitions it calls, then its body.
Program with_definitions(const Program &p, const std::vector<ClosedAbstraction> &library);
Program library_program(const std::vector<ClosedAbstraction> &library);

struct AbstractionSummary {
  std::string name;
  std::string pattern;
  std::size_t body_nodes = 0;
  std::vector<std::string> params;
  ReturnPlan plan;
  std::size_t sites = 0;
};

struct DroppedAbstraction {
  std::string pattern;
  std::string reason;
};

struct CompressionReport {
  std::size_t original_nodes = 0;
  std::size_t rewritten_nodes = 0;               // excluding the library
  std::size_t rewritten_plus_library_nodes = 0;  // library counted once
  double compression_ratio = 1.0;                // original / rewritten
  double library_growth_pct = 0.0;  // (rewritten + library - original) / original
  std::vector<AbstractionSummary> abstractions;
  PruneStats pruned;
  std::size_t rejected_call_sites = 0;
  std::vector<DroppedAbstraction> dropped;
};

CompressionReport measure(const std::vector<Program> &before, const std::vector<Program> &after,
                          const std::vector<ClosedAbstraction> &library);

}  // namespace leroy

#endif  // LEROY_REWRITE_HPP
