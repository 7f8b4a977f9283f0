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

#include "leroy/prune.hpp"

#include "leroy/corpus_index.hpp"
#include "leroy/vocabulary.hpp"

namespace leroy {
namespace {

std::string path_text(const std::vector<int> &path) {
  std::string out = "root";
  for (int i : path)
    out += "." + std::to_string(i);
  return out;
}

const char *issue_text(ShapeIssue::Kind k) {
  switch (k) {
  case ShapeIssue::Kind::MissingChild: return "missing child";
  case ShapeIssue::Kind::ExtraChild: return "extra child";
  case ShapeIssue::Kind::WrongKind: return "wrong node kind";
  case ShapeIssue::Kind::MisplacedRest: return "open tail away from the root spine";
  case ShapeIssue::Kind::EmptySuite: return "empty suite";
  }
  return "?";
}

bool find_head_named(const SExpr &s, std::string_view head, std::vector<int> &path) {
  if (s.is_app(head))
    return true;
  for (std::size_t i = 0; i < s.kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_head_named(s.kids[i], head, path))
      return true;
    path.pop_back();
  }
  return false;
}

bool find_learned(const SExpr &s, std::string &name) {
  if (s.kind == SKind::Ident && is_learned_name(s.text)) {
    name = s.text;
    return true;
  }
  for (const SExpr &k : s.kids)
    if (find_learned(k, name))
      return true;
  return false;
}

}  // namespace

const char *to_string(PruneReason r) {
  switch (r) {
  case PruneReason::MacroLike: return "macro_like";
  case PruneReason::InvalidParameter: return "invalid_parameter";
  case PruneReason::TooSmall: return "too_small";
  case PruneReason::CallsLearnedAbstraction: return "calls_abstraction";
  }
  return "?";
}

void PruneStats::add(PruneReason r, long long n) {
  switch (r) {
  case PruneReason::MacroLike: macro_like += n; break;
  case PruneReason::InvalidParameter: invalid_parameter += n; break;
  case PruneReason::TooSmall: too_small += n; break;
  case PruneReason::CallsLearnedAbstraction: calls_abstraction += n; break;
  }
}

PruneStats &PruneStats::operator+=(const PruneStats &o) {
  macro_like += o.macro_like;
  invalid_parameter += o.invalid_parameter;
  too_small += o.too_small;
  calls_abstraction += o.calls_abstraction;
  return *this;
}

PruneVerdict check_macro_like(const Pattern &p) {
  PartialTree t = analyze_shape(p.body);
  if (!t.issues.empty()) {
    const ShapeIssue &i = t.issues.front();
    return PruneVerdict::reject(PruneReason::MacroLike,
                                std::string(issue_text(i.kind)) + " at " +
                                    path_text(i.path) + ": " + i.detail);
  }
  if (t.root_kind != SlotKind::Expr && t.root_kind != SlotKind::StmtSeq)
    return PruneVerdict::reject(PruneReason::MacroLike,
                                std::string("root is a ") + to_string(t.root_kind) +
                                    " fragment, not an expression or statements");
  for (std::string_view head : {"def", "return"}) {
    std::vector<int> path;
    if (find_head_named(p.body, head, path))
      return PruneVerdict::reject(PruneReason::MacroLike,
                                  std::string(head) + " statement at " + path_text(path));
  }
  return PruneVerdict::keep();
}

PruneVerdict check_parameters(const Pattern &p) {
  PartialTree t = analyze_shape(p.body);
  for (const HoleSite &h : t.holes)
    if (h.slot != SlotKind::Expr)
      return PruneVerdict::reject(PruneReason::InvalidParameter,
                                  "#" + std::to_string(h.index) + " in " +
                                      to_string(h.slot) + " position at " +
                                      path_text(h.path));
  return PruneVerdict::keep();
}

PruneVerdict check_size(const Pattern &p, int min_size) {
  auto n = static_cast<long long>(sexpr_ast_size(p.body));
  if (n < min_size)
    return PruneVerdict::reject(PruneReason::TooSmall,
                                std::to_string(n) + " nodes, minimum " + std::to_string(min_size));
  return PruneVerdict::keep();
}

PruneVerdict check_calls_learned(const Pattern &p) {
  std::string name;
  if (find_learned(p.body, name))
    return PruneVerdict::reject(PruneReason::CallsLearnedAbstraction, "references " + name);
  return PruneVerdict::keep();
}

PruneVerdict prune(const Pattern &p, int min_size) {
  for (PruneVerdict v : {check_macro_like(p), check_parameters(p), check_size(p, min_size),
                         check_calls_learned(p)})
    if (!v.kept)
      return v;
  return PruneVerdict::keep();
}

}  // namespace leroy
