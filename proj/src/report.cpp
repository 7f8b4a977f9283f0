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

#include "leroy/report.hpp"

#include <nlohmann/json.hpp>

namespace leroy {

std::string report_json(const CompressionReport &r, const std::optional<OracleSummary> &oracle) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["original_nodes"] = r.original_nodes;
  j["rewritten_nodes"] = r.rewritten_nodes;
  j["rewritten_plus_library_nodes"] = r.rewritten_plus_library_nodes;
  j["compression_ratio"] = r.compression_ratio;
  j["library_growth_pct"] = r.library_growth_pct;
  ordered_json abs = ordered_json::array();
  for (const AbstractionSummary &a : r.abstractions) {
    ordered_json x;
    x["name"] = a.name;
    x["body_nodes"] = a.body_nodes;
    x["params"] = a.params;
    if (a.plan.kind == ReturnPlan::Kind::LastExpr)
      x["returns"] = "last_expr";
    else
      x["returns"] = a.plan.names;
    x["sites"] = a.sites;
    x["pattern"] = a.pattern;
    abs.push_back(std::move(x));
  }
  j["abstractions"] = std::move(abs);
  j["pruned"] = {{"macro_like", r.pruned.macro_like},
                 {"invalid_parameter", r.pruned.invalid_parameter},
                 {"too_small", r.pruned.too_small},
                 {"calls_abstraction", r.pruned.calls_abstraction}};
  j["rejected_call_sites"] = r.rejected_call_sites;
  ordered_json dropped = ordered_json::array();
  for (const DroppedAbstraction &d : r.dropped)
    dropped.push_back({{"pattern", d.pattern}, {"reason", d.reason}});
  j["dropped"] = std::move(dropped);
  if (oracle)
    j["oracle_check"] = {{"programs_checked", oracle->programs_checked},
                         {"mismatches", oracle->mismatches}};
  return j.dump(2) + "\n";
}

}  // namespace leroy
